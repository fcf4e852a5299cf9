// Exact rational arithmetic and polynomial algebra over Q.
//
// ExactScalar is GMP's mpq_class kept in canonical form. UniPoly and
// LaurentPoly are dense coefficient vectors in one variable t, TriPoly is a
// sparse polynomial in three variables, and RationalFunction is a gcd-reduced
// quotient of UniPolys with monic denominator.
#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pvi {

using ExactScalar = mpq_class;

enum class ErrorKind {
  DivisionByZero,
  NotDivisible,
  SingularFrame,
  GaugeDependence,
  HomogeneityViolation,
  ConfigurationMismatch,
  MissingTau,
  ZeroTau,
  DegenerateK,
  NoConsistentSign,
  InsufficientData,
  MissingPreimage,
  ValidationFailure,
  OddSignCount,
  UnknownPoint,
  InvalidArgument,
  ParseError,
};

const char* error_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// "num/den", or "num" when den = 1.
std::string to_string(const ExactScalar& x);
ExactScalar parse_scalar(std::string_view s);
ExactScalar pow(const ExactScalar& x, long e);

class LaurentPoly;

// Dense polynomial in t; coefficient i multiplies t^i. The zero polynomial has
// no stored coefficients and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<ExactScalar> coeffs);
  UniPoly(const ExactScalar& c);  // NOLINT: constants convert implicitly
  UniPoly(long c) : UniPoly(ExactScalar(c)) {}  // NOLINT
  static UniPoly monomial(const ExactScalar& c, int deg);
  static UniPoly t() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  ExactScalar coeff(int i) const;
  const ExactScalar& leading() const { return c_.back(); }
  const std::vector<ExactScalar>& coeffs() const { return c_; }

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly operator-() const;
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  UniPoly derivative() const;
  ExactScalar eval(const ExactScalar& x) const;
  UniPoly monic() const;
  // Euclidean division; throws DivisionByZero when d = 0.
  static void divmod(const UniPoly& a, const UniPoly& d, UniPoly& q, UniPoly& r);
  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<ExactScalar> c_;
};

UniPoly gcd(UniPoly a, UniPoly b);  // monic, or zero when both are zero
UniPoly pow(const UniPoly& p, int e);

// Finite Laurent series sum_k c_k t^k with k starting at min_degree. Stored
// first and last coefficients are nonzero; zero has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int min_degree, std::vector<ExactScalar> coeffs);
  LaurentPoly(const ExactScalar& c);  // NOLINT
  LaurentPoly(long c) : LaurentPoly(ExactScalar(c)) {}  // NOLINT
  LaurentPoly(const UniPoly& p);  // NOLINT
  static LaurentPoly monomial(const ExactScalar& c, int deg);

  bool is_zero() const { return c_.empty(); }
  int min_degree() const { return lo_; }
  int max_degree() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  ExactScalar coeff(int k) const;
  const std::vector<ExactScalar>& coeffs() const { return c_; }
  std::size_t term_count() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly derivative() const;
  LaurentPoly shifted(int k) const;  // multiplied by t^k
  // Writes this as t^shift * p with p(0) != 0 (p = 0 for the zero polynomial).
  UniPoly split(int& shift) const;
  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();
  int lo_ = 0;
  std::vector<ExactScalar> c_;
};

// Returns q with a = q*b. DivisionByZero if b = 0, NotDivisible otherwise.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

// Canonical quotient num/den: den monic, gcd(num, den) = 1, zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const ExactScalar& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(ExactScalar(c)) {}  // NOLINT
  RationalFunction(UniPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RationalFunction(UniPoly num, UniPoly den);
  static RationalFunction from_laurent(const LaurentPoly& p);

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  RationalFunction operator-() const;
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  RationalFunction derivative() const;
  std::string to_string(std::string_view var = "t") const;

 private:
  void reduce();
  UniPoly num_;
  UniPoly den_;
};

RationalFunction pow(const RationalFunction& f, int e);

// p((a t + b)/(c t + d)) for a Laurent polynomial p.
RationalFunction compose_mobius(const LaurentPoly& p, const ExactScalar& a, const ExactScalar& b,
                                const ExactScalar& c, const ExactScalar& d);

// Sparse polynomial in three variables keyed by exponent triples.
class TriPoly {
 public:
  using Exponent = std::array<int, 3>;
  TriPoly() = default;
  TriPoly(const ExactScalar& c);  // NOLINT
  static TriPoly monomial(const ExactScalar& c, Exponent e);
  static TriPoly variable(int which);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, ExactScalar>& terms() const { return terms_; }
  ExactScalar coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const ExactScalar& c);

  TriPoly& operator+=(const TriPoly& o);
  TriPoly& operator-=(const TriPoly& o);
  TriPoly operator-() const;
  TriPoly& operator*=(const ExactScalar& c);
  friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
  friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator*(TriPoly a, const ExactScalar& c) { return a *= c; }
  friend bool operator==(const TriPoly&, const TriPoly&) = default;

  TriPoly partial(int which) const;
  // Variables renamed: variable a of the result is variable perm[a] of this.
  TriPoly permuted(const std::array<int, 3>& perm) const;
  // Euler operator sum_a x_a d/dx_a.
  TriPoly euler() const;
  std::string to_string() const;

 private:
  std::map<Exponent, ExactScalar> terms_;
};

}  // namespace pvi

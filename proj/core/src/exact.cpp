#include "pvi/exact.hpp"

#include <algorithm>
#include <sstream>

namespace pvi {

const char* error_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::SingularFrame: return "SingularFrame";
    case ErrorKind::GaugeDependence: return "GaugeDependence";
    case ErrorKind::HomogeneityViolation: return "HomogeneityViolation";
    case ErrorKind::ConfigurationMismatch: return "ConfigurationMismatch";
    case ErrorKind::MissingTau: return "MissingTau";
    case ErrorKind::ZeroTau: return "ZeroTau";
    case ErrorKind::DegenerateK: return "DegenerateK";
    case ErrorKind::NoConsistentSign: return "NoConsistentSign";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::MissingPreimage: return "MissingPreimage";
    case ErrorKind::ValidationFailure: return "ValidationFailure";
    case ErrorKind::OddSignCount: return "OddSignCount";
    case ErrorKind::UnknownPoint: return "UnknownPoint";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

std::string to_string(const ExactScalar& x) { return x.get_str(); }

ExactScalar parse_scalar(std::string_view s) {
  std::string str(s);
  auto bad = [&] { return Error(ErrorKind::ParseError, "not a rational: '" + str + "'"); };
  if (str.empty()) throw bad();
  auto slash = str.find('/');
  auto valid_int = [](const std::string& x) {
    std::size_t i = (!x.empty() && (x[0] == '-' || x[0] == '+')) ? 1 : 0;
    if (i == x.size()) return false;
    return std::all_of(x.begin() + static_cast<long>(i), x.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string num = str.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : str.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  if (num[0] == '+') num.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + str + "'");
  ExactScalar q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

ExactScalar pow(const ExactScalar& x, long e) {
  if (e < 0) {
    if (x == 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
    return pow(ExactScalar(1) / x, -e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  ExactScalar r(n, d);
  r.canonicalize();
  return r;
}

namespace {

std::string term_string(const ExactScalar& c, int deg, std::string_view var, bool first) {
  std::ostringstream os;
  bool neg = c < 0;
  ExactScalar a = neg ? ExactScalar(-c) : c;
  if (first) {
    if (neg) os << "-";
  } else {
    os << (neg ? " - " : " + ");
  }
  if (deg == 0 || a != 1) os << a.get_str();
  if (deg != 0) {
    if (a != 1) os << "*";
    os << var;
    if (deg != 1) os << "^" << deg;
  }
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<ExactScalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const ExactScalar& c) {
  if (c != 0) c_.push_back(c);
}

UniPoly UniPoly::monomial(const ExactScalar& c, int deg) {
  if (c == 0) return {};
  std::vector<ExactScalar> v(static_cast<std::size_t>(deg) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ExactScalar UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ExactScalar> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<ExactScalar> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return UniPoly(std::move(v));
}

ExactScalar UniPoly::eval(const ExactScalar& x) const {
  ExactScalar r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  UniPoly r = *this;
  ExactScalar l = leading();
  for (auto& x : r.c_) x /= l;
  return r;
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& d, UniPoly& q, UniPoly& r) {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<ExactScalar> rem = a.c_;
  int dd = d.degree();
  int qd = a.degree() - dd;
  std::vector<ExactScalar> quo(qd >= 0 ? static_cast<std::size_t>(qd) + 1 : 0);
  const ExactScalar& lead = d.leading();
  for (int k = qd; k >= 0; --k) {
    ExactScalar f = rem[static_cast<std::size_t>(k + dd)] / lead;
    if (f == 0) continue;
    quo[static_cast<std::size_t>(k)] = f;
    for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k + i)] -= f * d.c_[static_cast<std::size_t>(i)];
  }
  q = UniPoly(std::move(quo));
  r = UniPoly(std::move(rem));
}

std::string UniPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const auto& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    s += term_string(c, i, var, s.empty());
  }
  return s;
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly q, r;
    UniPoly::divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

UniPoly pow(const UniPoly& p, int e) {
  UniPoly r(1);
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

// ------------------------------------------------------------ LaurentPoly

LaurentPoly::LaurentPoly(int min_degree, std::vector<ExactScalar> coeffs)
    : lo_(min_degree), c_(std::move(coeffs)) {
  trim();
}

LaurentPoly::LaurentPoly(const ExactScalar& c) {
  if (c != 0) c_.push_back(c);
}

LaurentPoly::LaurentPoly(const UniPoly& p) : lo_(0), c_(p.coeffs()) { trim(); }

LaurentPoly LaurentPoly::monomial(const ExactScalar& c, int deg) { return LaurentPoly(deg, {c}); }

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t z = 0;
  while (z < c_.size() && c_[z] == 0) ++z;
  if (z > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(z));
    lo_ += static_cast<int>(z);
  }
  if (c_.empty()) lo_ = 0;
}

ExactScalar LaurentPoly::coeff(int k) const {
  if (is_zero() || k < lo_ || k > max_degree()) return 0;
  return c_[static_cast<std::size_t>(k - lo_)];
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const ExactScalar& x) { return x != 0; }));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(lo_, o.lo_);
  int hi = std::max(max_degree(), o.max_degree());
  std::vector<ExactScalar> v(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i + static_cast<std::size_t>(lo_ - lo)] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i + static_cast<std::size_t>(o.lo_ - lo)] += o.c_[i];
  lo_ = lo;
  c_ = std::move(v);
  trim();
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ExactScalar> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return LaurentPoly(a.lo_ + b.lo_, std::move(v));
}

LaurentPoly LaurentPoly::derivative() const {
  if (is_zero()) return {};
  std::vector<ExactScalar> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * (lo_ + static_cast<long>(i));
  return LaurentPoly(lo_ - 1, std::move(v));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.lo_ += k;
  return r;
}

UniPoly LaurentPoly::split(int& shift) const {
  shift = lo_;
  return UniPoly(c_);
}

std::string LaurentPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = max_degree(); k >= lo_; --k) {
    ExactScalar c = coeff(k);
    if (c == 0) continue;
    s += term_string(c, k, var, s.empty());
  }
  return s;
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "Laurent division by zero");
  if (a.is_zero()) return {};
  int sa = 0, sb = 0;
  UniPoly pa = a.split(sa), pb = b.split(sb);
  UniPoly q, r;
  UniPoly::divmod(pa, pb, q, r);
  if (!r.is_zero())
    throw Error(ErrorKind::NotDivisible, "(" + a.to_string() + ") / (" + b.to_string() + ")");
  return LaurentPoly(q).shifted(sa - sb);
}

// ------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  reduce();
}

RationalFunction RationalFunction::from_laurent(const LaurentPoly& p) {
  int s = 0;
  UniPoly u = p.split(s);
  if (p.is_zero()) return {};
  if (s >= 0) return RationalFunction(u * UniPoly::monomial(1, s));
  return RationalFunction(u, UniPoly::monomial(1, -s));
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = UniPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    UniPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      UniPoly q, r;
      UniPoly::divmod(num_, g, q, r);
      num_ = q;
      UniPoly::divmod(den_, g, q, r);
      den_ = q;
    }
  }
  ExactScalar l = den_.leading();
  if (l != 1) {
    num_ *= UniPoly(ExactScalar(1) / l);
    den_ = den_.monic();
  }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::string RationalFunction::to_string(std::string_view var) const {
  if (den_ == UniPoly(1)) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RationalFunction pow(const RationalFunction& f, int e) {
  if (e < 0) return RationalFunction(1) / pow(f, -e);
  RationalFunction r(1);
  for (int i = 0; i < e; ++i) r *= f;
  return r;
}

RationalFunction compose_mobius(const LaurentPoly& p, const ExactScalar& a, const ExactScalar& b,
                                const ExactScalar& c, const ExactScalar& d) {
  if (p.is_zero()) return {};
  RationalFunction m(UniPoly({b, a}), UniPoly({d, c}));
  RationalFunction r;
  for (int k = p.min_degree(); k <= p.max_degree(); ++k) {
    ExactScalar ck = p.coeff(k);
    if (ck != 0) r += RationalFunction(ck) * pow(m, k);
  }
  return r;
}

// ---------------------------------------------------------------- TriPoly

TriPoly::TriPoly(const ExactScalar& c) {
  if (c != 0) terms_[{0, 0, 0}] = c;
}

TriPoly TriPoly::monomial(const ExactScalar& c, Exponent e) {
  TriPoly r;
  r.add_term(e, c);
  return r;
}

TriPoly TriPoly::variable(int which) {
  Exponent e{0, 0, 0};
  e[static_cast<std::size_t>(which)] = 1;
  return monomial(1, e);
}

ExactScalar TriPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ExactScalar(0) : it->second;
}

void TriPoly::add_term(const Exponent& e, const ExactScalar& c) {
  if (c == 0) return;
  if (e[0] < 0 || e[1] < 0 || e[2] < 0)
    throw Error(ErrorKind::InvalidArgument, "negative exponent in trivariate polynomial");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TriPoly TriPoly::operator-() const {
  TriPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

TriPoly& TriPoly::operator*=(const ExactScalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  TriPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return r;
}

TriPoly TriPoly::partial(int which) const {
  TriPoly r;
  auto w = static_cast<std::size_t>(which);
  for (const auto& [e, c] : terms_) {
    if (e[w] == 0) continue;
    Exponent f = e;
    --f[w];
    r.add_term(f, c * e[w]);
  }
  return r;
}

TriPoly TriPoly::permuted(const std::array<int, 3>& perm) const {
  TriPoly r;
  for (const auto& [e, c] : terms_) {
    Exponent f{};
    for (std::size_t a = 0; a < 3; ++a) f[a] = e[static_cast<std::size_t>(perm[a])];
    r.add_term(f, c);
  }
  return r;
}

TriPoly TriPoly::euler() const {
  TriPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e, c * (e[0] + e[1] + e[2]));
  return r;
}

std::string TriPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    ExactScalar a = c < 0 ? ExactScalar(-c) : c;
    bool bare = e[0] + e[1] + e[2] > 0 && a == 1;
    if (!bare) os << a.get_str();
    bool need_star = !bare;
    for (int v = 0; v < 3; ++v) {
      int k = e[static_cast<std::size_t>(v)];
      if (k == 0) continue;
      if (need_star) os << "*";
      os << "x" << (v + 1);
      if (k > 1) os << "^" << k;
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

}  // namespace pvi

// Text formats. Scalars are "num/den" strings (or "num"), polynomials are
// degree -> coefficient maps, lattice points are arrays of six integers.
#pragma once

#include <string>

#include "pvi/exact.hpp"
#include "pvi/f4.hpp"
#include "pvi/identities.hpp"
#include "pvi/lattice.hpp"
#include "pvi/tau.hpp"

namespace pvi {

std::string to_json(const UniPoly& p);
std::string to_json(const LaurentPoly& p);  // {"min_degree": m, "coeffs": [...]}
std::string to_json(const RationalFunction& f);
std::string to_json(const LatticePoint& p);
std::string to_json(const F4Vector& v);  // [v0, "v1", "v2", "v3", "v4"]
std::string to_json(const FrameMatrix& w);
std::string to_json(const TauTable& t);
std::string to_json(const EpsTable& e);
std::string to_json(const Report& r);

UniPoly unipoly_from_json(const std::string& s);
LaurentPoly laurent_from_json(const std::string& s);
LatticePoint point_from_json(const std::string& s);
F4Vector f4_from_json(const std::string& s);
FrameMatrix frame_from_json(const std::string& s);
TauTable tau_table_from_json(const std::string& s);
EpsTable eps_table_from_json(const std::string& s);

std::string to_csv(const TauTable& t);  // point,weight,min_degree,coeffs
std::string to_csv(const Report& r);    // identity,config,ok,residual_terms

// Simple-root rows, short-root sets and the Toda/gamma table, plus the images
// of the given points.
std::string correspondence_json(const std::vector<LatticePoint>& points);

}  // namespace pvi

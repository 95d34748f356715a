#pragma once

#include "derkit/curve.hpp"

namespace derkit {

/// Plain-text curve description:
///   char = 32003            (0 selects exact rationals)
///   vars = x,y,z
///   degrees = 1,1,1         (optional, default all 1)
///   ideal = y^2*z - x^3; ...
///   points = (0:0:1); ...   (optional)
///   flags = reduced, irreducible, lci   (optional)
///   semigroup = 2,3         (optional: local value semigroup at each point)
///   sigma = 1               (optional assertions for normalization data)
///   p_g = 0
///   components = 1
///   name = nodal_cubic      (optional)
CurveSpec parse_curve_file(const std::string& text);
std::string write_curve_file(const CurveSpec& spec);

}  // namespace derkit

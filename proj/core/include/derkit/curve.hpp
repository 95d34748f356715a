#pragma once

#include <set>
#include <string>

#include "derkit/homalg.hpp"

namespace derkit {

/// Rational projective point, by homogeneous coordinates in the ground field.
struct ProjPoint {
  std::vector<Coeff> coords;
};

/// Flags a caller may assert about a curve; hypotheses the engine cannot
/// decide are taken from here and recorded verbatim in reports.
namespace flag {
inline constexpr const char* reduced = "reduced";
inline constexpr const char* irreducible = "irreducible";
inline constexpr const char* locally_irreducible = "locally_irreducible";
inline constexpr const char* domain = "domain";
inline constexpr const char* lci = "lci";
inline constexpr const char* planar_singularities = "planar_singularities";
inline constexpr const char* gcb = "gcb";
inline constexpr const char* nodes_only = "nodes_only";
}  // namespace flag

/// Ambient ring, homogeneous ideal, optional known singular points and
/// asserted hypotheses. Plain data; all derived quantities live in
/// CurveAnalysis. Normalization data the engine cannot compute may ride
/// along: the common local value semigroup of the singular points (for the
/// sigma route) or directly asserted sigma/p_g/component counts.
struct CurveSpec {
  RingPtr ring;
  std::vector<Polynomial> ideal;
  std::vector<ProjPoint> points;
  std::set<std::string> flags;
  std::string name;

  std::vector<long long> local_semigroup;
  std::optional<long long> asserted_sigma;
  std::optional<long long> asserted_p_g;
  std::optional<long long> asserted_components;

  bool has_flag(const char* f) const { return flags.count(f) > 0; }
};

/// Everything the harness derives from a CurveSpec, computed eagerly.
struct CurveAnalysis {
  CurveSpec spec;  // ideal saturated
  bool input_was_saturated = true;

  HilbertSeries hs;
  int dim = 0;
  long long degree = 0;
  long long p_a = 0;

  FreeResolution res;
  long long reg = 0;
  bool acm = false;
  bool gorenstein = false;
  long long cm_type = 0;
  bool complete_intersection = false;

  PresentedModule omega;
  long long a_inv = 0;

  std::vector<Polynomial> jacobian;  // lift of J_R to S (without I)
  int dim_mod_jac = -1;              // dim of R/J_R
  long long e_mod_jac = 0;           // multiplicity of R/J_R (0 when smooth)
  bool smooth = false;
  bool char_divides_degree = false;

  const RingPtr& ring() const { return spec.ring; }
  std::vector<Polynomial> jacobian_with_ideal() const;
  bool is_hypersurface() const;
};

CurveAnalysis analyze_curve(const CurveSpec& spec);

/// Fitt_{dim}(Omega_k(R)) lifted to S: the (n - dim)-minors of the Jacobian
/// matrix of the ideal generators.
std::vector<Polynomial> jacobian_ideal_lift(const RingPtr& ring,
                                            const std::vector<Polynomial>& ideal, int dim);

/// Maximal minors of the Jacobian matrix of chosen forms (the partial
/// Jacobian of n-2 forms for a curve). Throws if the forms are not in the
/// ideal; callers check ht J >= 1 separately.
std::vector<Polynomial> partial_jacobian_lift(const RingPtr& ring,
                                              const std::vector<Polynomial>& ideal,
                                              const std::vector<Polynomial>& forms);

/// Evaluate homogeneous coordinates of p on f.
Coeff eval_at_point(const Polynomial& f, const ProjPoint& p);
bool point_on_ideal(const std::vector<Polynomial>& ideal, const ProjPoint& p);
/// Ideal of the point: n-1 independent linear forms.
std::vector<Polynomial> point_prime_ideal(const RingPtr& ring, const ProjPoint& p);

}  // namespace derkit

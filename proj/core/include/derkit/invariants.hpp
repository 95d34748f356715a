#pragma once

#include <map>
#include <optional>

#include "derkit/curve.hpp"
#include "derkit/prng.hpp"
#include "derkit/semigroup.hpp"

namespace derkit {

/// Result of a degree search: the value, whether it was certified exactly or
/// found by the seeded random-element route, and the cap used.
struct DegreeInfo {
  bool determined = false;
  long long value = 0;
  bool exact = false;
  long long cap = 0;
  std::string route;
};

/// Least degree of a nonzero homogeneous element (from the minimal
/// presentation).
std::optional<long long> indeg_module(const PresentedModule& m);

/// Faithful initial degree: least degree of a homogeneous element with zero
/// annihilator over R = S/I. When the module is torsionfree and R is a
/// domain this equals indeg; otherwise random homogeneous elements are
/// tested degree by degree (annihilator via a colon computation), up to
/// reg(M) + dim(R) + 2.
DegreeInfo findeg_module(const PresentedModule& m, const std::vector<Polynomial>& ideal,
                         bool torsionfree_over_domain, std::uint64_t seed,
                         int tries_per_degree = 4);

/// k-basis of the degree-d piece of coker(rels), as vectors in the
/// presentation free module (standard monomials).
std::vector<Vec> graded_piece_basis(const PresentedModule& m, long long d);

/// Loewy length of (R/J)_p at a rational point: least s >= 0 with
/// (J : p^s) not contained in p, certified by evaluation at the point.
/// J is given by its lift to S (containing I). Throws if p is not on V(J).
long long loewy_length_at_point(const RingPtr& ring, const std::vector<Polynomial>& J_lift,
                                const ProjPoint& p, long long cap = 64);

/// Sum of Loewy lengths over the supplied points (rational points have
/// e(R/p) = 1).
long long loewy_mult(const RingPtr& ring, const std::vector<Polynomial>& J_lift,
                     const std::vector<ProjPoint>& points, long long cap = 64);

/// e(R/J_R), the degree of the singular scheme; equals the total Tjurina
/// number for reduced curves that are locally complete intersections.
/// Throws when dim R/J_R = 2 (input not reduced/equidimensional).
long long tjurina_total(const CurveAnalysis& an);

bool genus_identity_check(long long p_a, long long p_g, long long sigma, long long s);

/// One evaluated invariant with the route that produced it.
struct TaggedValue {
  long long value = 0;
  std::string route;
  bool exact = true;
};

/// Everything the bound evaluations consume. Optional entries are absent
/// when the data they need (points, semigroup models, a derivation run) was
/// not available.
struct InvariantReport {
  std::string curve;
  long long nvars = 0;
  long long d = 0;
  int dim = 0;
  long long a_R = 0;
  long long reg = 0;
  long long p_a = 0;
  bool acm = false;
  bool gorenstein = false;
  long long cm_type = 1;
  bool complete_intersection = false;
  bool smooth = false;
  bool char_ok = false;
  long long char_p = 0;
  bool hypersurface = false;

  std::optional<TaggedValue> e_mod_jac;  // multiplicity of R/J_R (0 if smooth)
  std::optional<TaggedValue> tau;        // = e_mod_jac under the lci flag
  std::optional<long long> a_mod_jac;    // a-invariant of R/J_R

  std::optional<long long> delta_partial;   // sum (deg f_j - 1) of chosen forms
  std::optional<TaggedValue> e_partial;     // e(R/J) for the partial Jacobian

  std::optional<long long> nsing;
  std::optional<TaggedValue> lmult;
  std::optional<std::vector<long long>> loewy_lengths;
  std::optional<long long> max_point_mult;  // largest e(O_p) among supplied points

  std::optional<TaggedValue> sigma;
  std::optional<TaggedValue> p_g;
  std::optional<long long> ncomponents;

  std::optional<long long> indeg_omega_dual;
  std::optional<DegreeInfo> findeg_omega_dual;
  std::optional<bool> gcb;          // findeg(omega) == indeg(omega)
  bool gcb_probabilistic = false;
  std::optional<bool> nearly_gorenstein_gate;  // trace(omega) not in m^2

  std::optional<long long> indeg_der;
  std::optional<DegreeInfo> findeg_der;
  std::optional<long long> mu_der;

  std::vector<long long> ideal_gen_degrees;  // sorted a_i of F_1
  std::optional<bool> der_hf_matches_max_ideal_twist;
  std::optional<bool> curvein3_betti_match;

  bool flag_reduced = false;
  bool flag_irreducible = false;
  bool flag_locally_irreducible = false;
  bool flag_lci = false;
  bool flag_domain = false;
  bool flag_planar = false;
  bool flag_nodes_only = false;

  std::uint64_t seed = 0;
};

/// Fill the curve-level part of the report (everything that does not need
/// the derivation module): ring invariants, Jacobian multiplicities, Loewy
/// data at supplied points, canonical-dual degrees and gates.
InvariantReport curve_invariants(const CurveAnalysis& an, std::uint64_t seed);

}  // namespace derkit

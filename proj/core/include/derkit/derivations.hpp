#pragma once

#include "derkit/invariants.hpp"

namespace derkit {

/// Der_k(R) inside the free module of coordinate derivations (basis d/dx_i
/// in degree -1, so the Euler element sum x_i d/dx_i sits in degree 0),
/// together with the quotient by the Euler line.
struct DerivationModule {
  FreeModule ambient;             // rank n, generator degrees -1
  std::vector<Vec> gens;          // generators of {a : Jac a in I} over S
  Vec euler;
  PresentedModule der;            // Der_k(R), minimal presentation
  PresentedModule der_mod_euler;  // Der_k(R)/R eps, minimal presentation
  long long mu = 0;               // minimal generators of der_mod_euler
  std::optional<long long> indeg;
  DegreeInfo findeg;
  std::vector<long long> der_gen_degrees;  // degrees of Der's minimal generators
};

/// Solve for all coordinate-derivation vectors that map every ideal
/// generator back into the ideal, then present Der and Der/R eps over R.
/// The generator list of the ideal is used as given (fixed order).
DerivationModule derivation_module(const CurveAnalysis& an, std::uint64_t seed);

/// Membership test for a candidate derivation vector: every Jacobian row
/// pairing reduces to zero mod I.
bool derivation_sound(const CurveAnalysis& an, const Vec& theta);

/// First cycles Z, boundaries B and homology H = Z/B of the Koszul complex
/// on the partial derivatives of a hypersurface equation.
struct KoszulData {
  FreeModule ambient;           // rank n, generator degrees d-1
  std::vector<Vec> cycles;      // minimal generators of Z
  std::vector<Vec> boundaries;  // the Koszul elements f_i e_j - f_j e_i
  PresentedModule homology;
  long long indeg_cycles = 0;
  long long mu_cycles = 0;
  std::optional<long long> indeg_homology;  // absent when H = 0 (smooth)
};

KoszulData koszul_data(const Polynomial& f);

/// indeg(Der/R eps) for a reduced hypersurface with isolated singularities,
/// computed along every route the theory provides (direct presentation,
/// cycle degree minus d, homology formula, and the a-invariant formula) with
/// an agreement check. Throws when char divides deg f.
struct HypersurfaceIndeg {
  long long value = 0;
  long long direct = 0;
  long long via_cycles = 0;
  long long via_homology = 0;
  std::optional<long long> via_a_invariant;  // needs isolated singularities
  long long mu = 0;
  long long beta2 = 0;  // second Betti number of S/(partials)
};
HypersurfaceIndeg hypersurface_indeg(const CurveAnalysis& an, std::uint64_t seed);

/// Kernel of the evaluation map from the differentials onto the maximal
/// ideal (dx_i -> x_i), presented as a subquotient of the free module on the
/// coordinate differentials. Its dual receives Der/R eps.
PresentedModule euler_kernel(const CurveAnalysis& an);

}  // namespace derkit

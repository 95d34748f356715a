#pragma once

#include "derkit/ideal_ops.hpp"
#include "derkit/presented.hpp"

namespace derkit {

/// Generators of {a in free(source) : sum a_i cols_i lies in <denom>}.
std::vector<Vec> preimage_kernel(const FreeModule& target, const std::vector<Vec>& cols,
                                 const std::vector<Vec>& denom);

/// gen degrees shifted up by delta, i.e. M -> M(-delta).
PresentedModule twist_up(PresentedModule m, long long delta);

/// R = S/I as a module over itself, with one generator in degree `shift`
/// (that is, R(-shift)).
PresentedModule ring_as_module(const RingPtr& ring, const std::vector<Polynomial>& ideal,
                               long long shift = 0);

/// The irrelevant maximal ideal of R = S/I as an R-module.
PresentedModule max_ideal_module(const RingPtr& ring, const std::vector<Polynomial>& ideal);

/// An ideal (g_1,...,g_k)R as an R-module with the g_i as generators.
PresentedModule ideal_as_module(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                const std::vector<Polynomial>& over);

/// Graded canonical module Ext^codim_S(S/I, S)(-n), computed from the
/// cohomology of the dualized minimal free resolution. Valid for arbitrary
/// (not necessarily Cohen-Macaulay) quotients.
struct CanonicalModule {
  PresentedModule omega;
  int codim = 0;
  bool cm = false;  // projective dimension equals codimension
};
CanonicalModule canonical_module(const RingPtr& ring, const std::vector<Polynomial>& ideal);
CanonicalModule canonical_module(const RingPtr& ring, const std::vector<Polynomial>& ideal,
                                 const FreeResolution& res, int dim);

/// In the Cohen-Macaulay case the dual complex is exact away from the end and
/// the canonical module is the plain cokernel of the last dualized map.
PresentedModule canonical_module_cm_route(const RingPtr& ring, const FreeResolution& res, int codim);

long long a_invariant(const RingPtr& ring, const std::vector<Polynomial>& ideal);

/// Hom_R(M, N) for modules presented over the same quotient ring, presented
/// with concrete representatives: each generator's rep is the flattened
/// matrix of a homomorphism (entry (i,j) at flat index j*t+i sends generator
/// j of M into coordinate i of N's presentation).
PresentedModule hom_module(const PresentedModule& M, const PresentedModule& N);
PresentedModule dual_module(const PresentedModule& M);

/// Image ideal of the evaluation omega* (x) omega -> R, from the concrete
/// representatives carried by hom_module.
std::vector<Polynomial> trace_ideal_of_canonical(const PresentedModule& omega);

}  // namespace derkit

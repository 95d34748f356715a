#pragma once

#include "derkit/hilbert.hpp"

namespace derkit {

using PolyMatrix = std::vector<std::vector<Polynomial>>;  // rows of entries

std::vector<Polynomial> ideal_intersect(const RingPtr& ring, const std::vector<Polynomial>& I,
                                        const std::vector<Polynomial>& J);
/// (I : g)
std::vector<Polynomial> ideal_quotient_elem(const RingPtr& ring, const std::vector<Polynomial>& I,
                                            const Polynomial& g);
/// (I : J)
std::vector<Polynomial> ideal_quotient(const RingPtr& ring, const std::vector<Polynomial>& I,
                                       const std::vector<Polynomial>& J);
/// (I : J^infinity), by iterating colon until stable
std::vector<Polynomial> ideal_saturate(const RingPtr& ring, const std::vector<Polynomial>& I,
                                       const std::vector<Polynomial>& J);
std::vector<Polynomial> irrelevant_ideal(const RingPtr& ring);
/// saturation with respect to the irrelevant maximal ideal
std::vector<Polynomial> saturate_at_irrelevant(const RingPtr& ring,
                                               const std::vector<Polynomial>& I);

bool ideals_equal(const RingPtr& ring, const std::vector<Polynomial>& I,
                  const std::vector<Polynomial>& J);
bool ideal_is_unit(const RingPtr& ring, const std::vector<Polynomial>& I);

Polynomial poly_det(const RingPtr& ring, const PolyMatrix& m);
/// All k x k minors, row/column subsets in lexicographic order.
std::vector<Polynomial> minors(const RingPtr& ring, const PolyMatrix& m, int k);

/// rows = generators, columns = variables: entry (j, i) = d f_j / d x_i.
PolyMatrix jacobian_matrix(const RingPtr& ring, const std::vector<Polynomial>& gens);

/// Fitt_index of coker(rel matrix) for a module with q generators:
/// the ideal of (q - index)-minors.
std::vector<Polynomial> fitting_ideal(const RingPtr& ring, const PolyMatrix& rel, int ngens,
                                      int index);

}  // namespace derkit

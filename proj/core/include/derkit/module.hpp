#pragma once

#include <memory>
#include <vector>

#include "derkit/polynomial.hpp"

namespace derkit {

/// Graded free module over a Ring: rank many basis vectors e_j, each with a
/// degree (the negative-twist bookkeeping is carried as explicit generator
/// degrees, so an element is homogeneous of degree d when every nonzero term
/// satisfies deg(mono) + gen_deg[comp] == d).
struct FreeModule {
  RingPtr ring;
  std::vector<long long> gen_deg;

  int rank() const { return (int)gen_deg.size(); }
};

FreeModule free_module(RingPtr ring, std::vector<long long> gen_deg);
FreeModule free_module_rank1(RingPtr ring, long long shift = 0);

struct MTerm {
  int comp;
  Monomial mono;
  Coeff coeff;
};

/// Element of a free module, as a term list kept strictly descending in the
/// module order used by the computation at hand.
struct Vec {
  std::vector<MTerm> terms;

  bool is_zero() const { return terms.empty(); }
  const MTerm& leading() const { return terms.front(); }
};

/// Term order on a free module.
///  - POT: position over term; lower component index wins, ties by ring order.
///  - Schreyer: induced by the leading terms of a parent basis, ties by index.
class ModuleOrder {
 public:
  static std::shared_ptr<const ModuleOrder> pot(RingPtr ring);
  static std::shared_ptr<const ModuleOrder> schreyer(
      std::shared_ptr<const ModuleOrder> parent, std::vector<MTerm> parent_leading);

  /// negative/zero/positive as (c1,m1) <,=,> (c2,m2)
  int compare(int c1, const Monomial& m1, int c2, const Monomial& m2) const;

 private:
  RingPtr ring_;
  std::shared_ptr<const ModuleOrder> parent_;
  std::vector<MTerm> parent_lt_;
};

// --- element operations (context passed explicitly) ---

Vec vec_zero();
Vec vec_basis(const FreeModule& F, int comp);
Vec vec_term(int comp, Monomial m, Coeff c);
/// Sort terms descending by `ord`, merging equal terms, dropping zeros.
Vec vec_canonical(const Ring& R, const ModuleOrder& ord, std::vector<MTerm> terms);

Vec vec_add(const Ring& R, const ModuleOrder& ord, const Vec& a, const Vec& b);
Vec vec_neg(const Ring& R, const Vec& a);
Vec vec_scale(const Ring& R, const Vec& a, const Coeff& c);
/// a + c * m * b  (the reduction workhorse; merge-based)
Vec vec_axpy(const Ring& R, const ModuleOrder& ord, const Vec& a, const Coeff& c,
             const Monomial& m, const Vec& b);
Vec vec_poly_mul(const Ring& R, const ModuleOrder& ord, const Polynomial& p, const Vec& b);

bool vec_eq(const Ring& R, const Vec& a, const Vec& b);
long long vec_degree(const FreeModule& F, const Vec& v);
bool vec_homogeneous(const FreeModule& F, const Vec& v);

/// component polynomials (rank-length vector)
std::vector<Polynomial> vec_components(const FreeModule& F, const Vec& v);
Vec vec_from_components(const FreeModule& F, const ModuleOrder& ord,
                        const std::vector<Polynomial>& comps);
Polynomial vec_component(const FreeModule& F, const Vec& v, int comp);

Vec vec_from_poly(const FreeModule& F, const ModuleOrder& ord, const Polynomial& p,
                  int comp = 0);
Polynomial poly_from_vec(const FreeModule& F, const Vec& v);

std::string vec_str(const FreeModule& F, const Vec& v);

}  // namespace derkit

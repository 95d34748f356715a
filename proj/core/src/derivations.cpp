#include "derkit/derivations.hpp"

#include <algorithm>
#include <limits>

namespace derkit {

namespace {

// target for the pairing theta |-> (theta(f_j))_j: one block per ideal
// generator, with generator degrees -deg(f_j) so the whole map has degree 0
FreeModule pairing_target(const RingPtr& ring, const std::vector<Polynomial>& ideal) {
  std::vector<long long> deg;
  for (const auto& f : ideal) deg.push_back(-f.degree());
  return free_module(ring, deg);
}

}  // namespace

DerivationModule derivation_module(const CurveAnalysis& an, std::uint64_t seed) {
  const RingPtr& ring = an.ring();
  const int n = ring->nvars();
  auto ord = ModuleOrder::pot(ring);
  const std::vector<Polynomial>& ideal = an.spec.ideal;
  const int m = (int)ideal.size();

  DerivationModule out;
  out.ambient = free_module(ring, std::vector<long long>(n, -1));

  FreeModule target = pairing_target(ring, ideal);
  // columns of the Jacobian pairing, one per coordinate derivation
  std::vector<Vec> cols;
  for (int i = 0; i < n; ++i) {
    std::vector<MTerm> terms;
    for (int j = 0; j < m; ++j) {
      Polynomial d = ideal[j].derivative(i);
      for (const auto& t : d.terms()) terms.push_back(MTerm{j, t.mono, t.coeff});
    }
    cols.push_back(vec_canonical(*ring, *ord, std::move(terms)));
  }
  // ideal multiples in each block
  std::vector<Vec> denom;
  for (int j = 0; j < m; ++j) {
    for (const auto& g : ideal) {
      if (g.is_zero()) continue;
      denom.push_back(vec_from_poly(target, *ord, g, j));
    }
  }
  out.gens = m == 0 ? std::vector<Vec>{} : preimage_kernel(target, cols, denom);
  if (m == 0) {
    for (int i = 0; i < n; ++i) out.gens.push_back(vec_basis(out.ambient, i));
  }

  // Euler element
  {
    std::vector<MTerm> terms;
    for (int i = 0; i < n; ++i)
      terms.push_back(MTerm{i, ring->var_power(i, 1), ring->field().one()});
    out.euler = vec_canonical(*ring, *ord, std::move(terms));
  }

  // check the defining property of every generator before presenting
  for (const auto& g : out.gens) {
    if (!derivation_sound(an, g))
      throw std::logic_error("derivation solver produced an unsound generator");
  }

  std::vector<Vec> ideal_multiples;
  for (const auto& g : ideal) {
    for (int i = 0; i < n; ++i) {
      if (g.is_zero()) continue;
      ideal_multiples.push_back(vec_from_poly(out.ambient, *ord, g, i));
    }
  }
  out.der = minimalize(subquotient(out.ambient, out.gens, ideal_multiples, ideal));
  out.der_gen_degrees = out.der.gen_deg;
  std::sort(out.der_gen_degrees.begin(), out.der_gen_degrees.end());

  std::vector<Vec> with_euler = ideal_multiples;
  with_euler.push_back(out.euler);
  out.der_mod_euler = minimalize(subquotient(out.ambient, out.gens, with_euler, ideal));
  out.mu = out.der_mod_euler.ngens();
  out.indeg = module_indeg(out.der_mod_euler);

  bool torsionfree_over_domain =
      an.spec.has_flag(flag::domain) && an.acm;  // depth >= 2 makes the quotient torsionfree
  out.findeg = findeg_module(out.der_mod_euler, ideal, torsionfree_over_domain, seed);
  return out;
}

bool derivation_sound(const CurveAnalysis& an, const Vec& theta) {
  const RingPtr& ring = an.ring();
  IdealGB gb = ideal_gb(ring, an.spec.ideal);
  FreeModule amb = free_module(ring, std::vector<long long>(ring->nvars(), -1));
  std::vector<Polynomial> comps = vec_components(amb, theta);
  for (const auto& f : an.spec.ideal) {
    Polynomial pairing = Polynomial::zero(ring);
    for (int i = 0; i < ring->nvars(); ++i) pairing = pairing + comps[i] * f.derivative(i);
    if (!in_ideal(gb, pairing)) return false;
  }
  return true;
}

KoszulData koszul_data(const Polynomial& f) {
  const RingPtr& ring = f.ring();
  const int n = ring->nvars();
  auto ord = ModuleOrder::pot(ring);
  long long d = f.degree();

  std::vector<Polynomial> partials;
  for (int i = 0; i < n; ++i) partials.push_back(f.derivative(i));

  KoszulData out;
  out.ambient = free_module(ring, std::vector<long long>(n, d - 1));
  std::vector<Vec> syz = syzygies_of_polys(ring, partials);
  out.cycles = prune_redundant(out.ambient, std::move(syz));
  out.mu_cycles = (long long)out.cycles.size();
  long long imin = std::numeric_limits<long long>::max();
  for (const auto& z : out.cycles) imin = std::min(imin, vec_degree(out.ambient, z));
  out.indeg_cycles = imin;

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Vec b = vec_from_poly(out.ambient, *ord, partials[i], j);
      b = vec_add(*ring, *ord, b,
                  vec_neg(*ring, vec_from_poly(out.ambient, *ord, partials[j], i)));
      if (!b.is_zero()) out.boundaries.push_back(std::move(b));
    }
  }

  out.homology = minimalize(subquotient(out.ambient, out.cycles, out.boundaries));
  out.indeg_homology = module_indeg(out.homology);
  return out;
}

PresentedModule euler_kernel(const CurveAnalysis& an) {
  const RingPtr& ring = an.ring();
  const int n = ring->nvars();
  auto ord = ModuleOrder::pot(ring);
  FreeModule amb = free_module(ring, std::vector<long long>(n, 1));  // dx_i in degree 1

  // U = {v : sum v_i x_i in I}
  FreeModule target = free_module_rank1(ring);
  std::vector<Vec> cols;
  for (int i = 0; i < n; ++i)
    cols.push_back(vec_from_poly(target, *ord, Polynomial::variable(ring, i)));
  std::vector<Vec> denom;
  for (const auto& g : an.spec.ideal) denom.push_back(vec_from_poly(target, *ord, g));
  std::vector<Vec> u = preimage_kernel(target, cols, denom);

  // V = im(transposed Jacobian) + I * basis
  std::vector<Vec> v;
  for (const auto& f : an.spec.ideal) {
    std::vector<MTerm> terms;
    for (int i = 0; i < n; ++i) {
      Polynomial d = f.derivative(i);
      for (const auto& t : d.terms()) terms.push_back(MTerm{i, t.mono, t.coeff});
    }
    Vec col = vec_canonical(*ring, *ord, std::move(terms));
    if (!col.is_zero()) v.push_back(std::move(col));
  }
  for (const auto& g : an.spec.ideal)
    for (int i = 0; i < n; ++i) v.push_back(vec_from_poly(amb, *ord, g, i));

  return subquotient(amb, std::move(u), std::move(v), an.spec.ideal);
}

HypersurfaceIndeg hypersurface_indeg(const CurveAnalysis& an, std::uint64_t seed) {
  const RingPtr& ring = an.ring();
  if (!an.is_hypersurface() || an.spec.ideal.size() != 1)
    throw std::invalid_argument("hypersurface route needs a principal ideal");
  const Polynomial& f = an.spec.ideal.front();
  long long d = f.degree();
  if (ring->field().divides_char(d))
    throw std::invalid_argument(
        "the characteristic divides the degree; the Euler-relation argument needs char coprime "
        "to deg f");

  HypersurfaceIndeg out;
  DerivationModule der = derivation_module(an, seed);
  if (!der.indeg) throw std::logic_error("Der/R eps vanished for a hypersurface");
  out.direct = *der.indeg;
  out.mu = der.mu;

  KoszulData kz = koszul_data(f);
  out.via_cycles = kz.indeg_cycles - d;
  out.via_homology =
      kz.indeg_homology ? std::min(d - 2, *kz.indeg_homology - d) : d - 2;

  std::vector<Polynomial> partials;
  for (int i = 0; i < ring->nvars(); ++i) partials.push_back(f.derivative(i));
  FreeResolution pres = free_resolution_quotient(ring, partials);
  out.beta2 = pres.length() >= 2 ? (long long)pres.shifts[2].size() : 0;

  // isolated singularities: the singular cone is at most one-dimensional
  if (an.dim_mod_jac <= 1) {
    long long n = ring->nvars();
    if (an.smooth) {
      out.via_a_invariant = d - 2;
    } else {
      long long aj = a_invariant(ring, an.jacobian_with_ideal());
      out.via_a_invariant = std::min(d - 2, (n - 1) * (d - 2) - aj - 2);
    }
  }

  out.value = out.direct;
  if (out.direct != out.via_cycles || out.direct != out.via_homology ||
      (out.via_a_invariant && out.direct != *out.via_a_invariant)) {
    throw std::logic_error("hypersurface initial-degree routes disagree");
  }
  if (out.mu != (long long)kz.cycles.size() || out.mu != out.beta2) {
    throw std::logic_error("minimal generator counts disagree between routes");
  }
  return out;
}

}  // namespace derkit

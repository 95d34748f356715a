#include "derkit/homalg.hpp"

#include <algorithm>

namespace derkit {

std::vector<Vec> preimage_kernel(const FreeModule& target, const std::vector<Vec>& cols,
                                 const std::vector<Vec>& denom) {
  std::vector<Vec> all = cols;
  for (const auto& w : denom) all.push_back(w);
  std::vector<Vec> syz = syzygy_generators(target, all);
  auto ord = ModuleOrder::pot(target.ring);
  std::vector<Vec> out;
  const int q = (int)cols.size();
  for (const auto& s : syz) {
    std::vector<MTerm> first;
    for (const auto& t : s.terms)
      if (t.comp < q) first.push_back(t);
    Vec v = vec_canonical(*target.ring, *ord, std::move(first));
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return out;
}

PresentedModule twist_up(PresentedModule m, long long delta) {
  for (auto& d : m.gen_deg) d += delta;
  return m;
}

PresentedModule ring_as_module(const RingPtr& ring, const std::vector<Polynomial>& ideal,
                               long long shift) {
  PresentedModule m;
  m.ring = ring;
  m.over = ideal;
  m.gen_deg = {shift};
  auto ord = ModuleOrder::pot(ring);
  FreeModule F = m.pres_free();
  for (const auto& g : ideal)
    if (!g.is_zero()) m.rels.push_back(vec_from_poly(F, *ord, g));
  return m;
}

PresentedModule max_ideal_module(const RingPtr& ring, const std::vector<Polynomial>& ideal) {
  std::vector<Polynomial> vars;
  for (int i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return ideal_as_module(ring, vars, ideal);
}

PresentedModule ideal_as_module(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                const std::vector<Polynomial>& over) {
  FreeModule amb = free_module_rank1(ring);
  auto ord = ModuleOrder::pot(ring);
  std::vector<Vec> u;
  for (const auto& g : gens)
    if (!g.is_zero()) u.push_back(vec_from_poly(amb, *ord, g));
  std::vector<Vec> v;
  for (const auto& g : over)
    if (!g.is_zero()) v.push_back(vec_from_poly(amb, *ord, g));
  return subquotient(amb, std::move(u), std::move(v), over);
}

namespace {

// column r of the dualized map: the r-th rows of the given step's columns,
// regarded as an element of the dual of the step's source
Vec dual_column(const std::vector<Vec>& step_cols, int r, const Ring& ring,
                const ModuleOrder& ord) {
  std::vector<MTerm> terms;
  for (int j = 0; j < (int)step_cols.size(); ++j) {
    for (const auto& t : step_cols[j].terms) {
      if (t.comp == r) terms.push_back(MTerm{j, t.mono, t.coeff});
    }
  }
  return vec_canonical(ring, ord, std::move(terms));
}

}  // namespace

CanonicalModule canonical_module(const RingPtr& ring, const std::vector<Polynomial>& ideal,
                                 const FreeResolution& res, int dim) {
  const int n = ring->nvars();
  const int c = n - dim;
  auto ord = ModuleOrder::pot(ring);
  CanonicalModule out;
  out.codim = c;
  out.cm = (res.length() == c);

  if (c == 0) {
    out.omega = ring_as_module(ring, ideal, n);
    return out;
  }

  // duals of F_c and its neighbors; D_i has generator degrees -shifts[i]
  std::vector<long long> dc_deg;
  for (long long d : res.shifts[c]) dc_deg.push_back(-d);
  FreeModule Dc = free_module(ring, dc_deg);

  std::vector<Vec> u;
  if (res.length() > c) {
    std::vector<long long> dc1_deg;
    for (long long d : res.shifts[c + 1]) dc1_deg.push_back(-d);
    FreeModule Dc1 = free_module(ring, dc1_deg);
    std::vector<Vec> ncols;
    for (int r = 0; r < Dc.rank(); ++r)
      ncols.push_back(dual_column(res.steps[c], r, *ring, *ord));
    u = preimage_kernel(Dc1, ncols, {});
  } else {
    for (int r = 0; r < Dc.rank(); ++r) u.push_back(vec_basis(Dc, r));
  }

  std::vector<Vec> v;
  const int prev_rank = (int)res.shifts[c - 1].size();
  for (int r = 0; r < prev_rank; ++r) {
    Vec col = dual_column(res.steps[c - 1], r, *ring, *ord);
    if (!col.is_zero()) v.push_back(std::move(col));
  }

  out.omega = twist_up(subquotient(Dc, std::move(u), std::move(v), ideal), n);
  return out;
}

CanonicalModule canonical_module(const RingPtr& ring, const std::vector<Polynomial>& ideal) {
  HilbertSeries hs = hilbert_series_quotient(ring, ideal);
  FreeResolution res = free_resolution_quotient(ring, ideal);
  return canonical_module(ring, ideal, res, hs.dim);
}

PresentedModule canonical_module_cm_route(const RingPtr& ring, const FreeResolution& res,
                                          int codim) {
  if (res.length() != codim) throw std::invalid_argument("not a Cohen-Macaulay quotient");
  const int n = ring->nvars();
  auto ord = ModuleOrder::pot(ring);
  std::vector<long long> gen_deg;
  for (long long d : res.shifts[codim]) gen_deg.push_back(n - d);
  std::vector<Vec> rels;
  if (codim >= 1) {
    const int prev_rank = (int)res.shifts[codim - 1].size();
    for (int r = 0; r < prev_rank; ++r) {
      Vec col = dual_column(res.steps[codim - 1], r, *ring, *ord);
      if (!col.is_zero()) rels.push_back(std::move(col));
    }
  }
  PresentedModule m;
  m.ring = ring;
  m.gen_deg = std::move(gen_deg);
  m.rels = std::move(rels);
  return m;
}

long long a_invariant(const RingPtr& ring, const std::vector<Polynomial>& ideal) {
  CanonicalModule cm = canonical_module(ring, ideal);
  std::optional<long long> ind = module_indeg(cm.omega);
  if (!ind) throw std::logic_error("canonical module of a nonzero ring vanished");
  return -*ind;
}

PresentedModule hom_module(const PresentedModule& M, const PresentedModule& N) {
  const RingPtr& ring = M.ring;
  auto ord = ModuleOrder::pot(ring);
  const int q = M.ngens();
  const int t = N.ngens();
  const int p = (int)M.rels.size();

  // Hom(F0(M), F0(N)): flat index j*t + i
  std::vector<long long> h0_deg((size_t)q * t, 0);
  for (int j = 0; j < q; ++j)
    for (int i = 0; i < t; ++i) h0_deg[(size_t)j * t + i] = N.gen_deg[i] - M.gen_deg[j];
  FreeModule H0 = free_module(ring, h0_deg);

  std::vector<Vec> u;
  if (p == 0) {
    for (int k = 0; k < H0.rank(); ++k) u.push_back(vec_basis(H0, k));
  } else {
    FreeModule Mfree = M.pres_free();
    // W: one copy of F0(N) per relation of M; flat index l*t + i
    std::vector<long long> w_deg((size_t)p * t, 0);
    for (int l = 0; l < p; ++l) {
      long long rd = vec_degree(Mfree, M.rels[l]);
      for (int i = 0; i < t; ++i) w_deg[(size_t)l * t + i] = N.gen_deg[i] - rd;
    }
    FreeModule W = free_module(ring, w_deg);

    std::vector<Vec> tcols((size_t)q * t);
    for (int j = 0; j < q; ++j) {
      for (int i = 0; i < t; ++i) {
        std::vector<MTerm> terms;
        for (int l = 0; l < p; ++l) {
          for (const auto& tm : M.rels[l].terms) {
            if (tm.comp == j) terms.push_back(MTerm{l * t + i, tm.mono, tm.coeff});
          }
        }
        tcols[(size_t)j * t + i] = vec_canonical(*ring, *ord, std::move(terms));
      }
    }
    std::vector<Vec> denom;
    for (int l = 0; l < p; ++l) {
      for (const auto& br : N.rels) {
        std::vector<MTerm> terms;
        for (const auto& tm : br.terms) terms.push_back(MTerm{l * t + tm.comp, tm.mono, tm.coeff});
        denom.push_back(vec_canonical(*ring, *ord, std::move(terms)));
      }
    }
    u = preimage_kernel(W, tcols, denom);
  }

  std::vector<Vec> v;
  for (int j = 0; j < q; ++j) {
    for (const auto& br : N.rels) {
      std::vector<MTerm> terms;
      for (const auto& tm : br.terms) terms.push_back(MTerm{j * t + tm.comp, tm.mono, tm.coeff});
      Vec w = vec_canonical(*ring, *ord, std::move(terms));
      if (!w.is_zero()) v.push_back(std::move(w));
    }
  }

  return subquotient(H0, std::move(u), std::move(v), M.over);
}

PresentedModule dual_module(const PresentedModule& M) {
  return hom_module(M, ring_as_module(M.ring, M.over, 0));
}

std::vector<Polynomial> trace_ideal_of_canonical(const PresentedModule& omega) {
  PresentedModule od = dual_module(omega);
  std::vector<Polynomial> gens;
  if (!od.ambient) return gens;
  for (const auto& rep : od.reps) {
    // rank-one target: component j of the rep is the value on omega's j-th
    // generator
    for (int j = 0; j < omega.ngens(); ++j) {
      Polynomial val = vec_component(*od.ambient, rep, j);
      if (!val.is_zero()) gens.push_back(std::move(val));
    }
  }
  return gens;
}

}  // namespace derkit

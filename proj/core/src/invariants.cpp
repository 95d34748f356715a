#include "derkit/invariants.hpp"

#include <algorithm>
#include <functional>

namespace derkit {

std::optional<long long> indeg_module(const PresentedModule& m) { return module_indeg(m); }

std::vector<Vec> graded_piece_basis(const PresentedModule& m, long long d) {
  const RingPtr& ring = m.ring;
  FreeModule F = m.pres_free();
  ModuleGB gb = buchberger(F, m.rels);
  std::vector<std::vector<Monomial>> lt(m.ngens());
  for (const auto& g : gb.gb) lt[g.leading().comp].push_back(g.leading().mono);

  // standard monomials m*e_j of degree d avoiding the staircase
  std::vector<Vec> out;
  int n = ring->nvars();
  for (int j = 0; j < m.ngens(); ++j) {
    long long target = d - m.gen_deg[j];
    if (target < 0) continue;
    std::vector<int> exp(n, 0);
    // enumerate exponent vectors of total degree `target`
    std::function<void(int, long long)> rec = [&](int pos, long long left) {
      if (pos == n - 1) {
        exp[pos] = (int)left;
        Monomial mono = ring->monomial(exp);
        bool divisible = false;
        for (const auto& l : lt[j])
          if (Ring::divides(l, mono)) {
            divisible = true;
            break;
          }
        if (!divisible) out.push_back(vec_term(j, mono, ring->field().one()));
        exp[pos] = 0;
        return;
      }
      for (long long e = 0; e <= left; ++e) {
        exp[pos] = (int)e;
        rec(pos + 1, left - e);
      }
      exp[pos] = 0;
    };
    rec(0, target);
  }
  return out;
}

namespace {

long long module_regularity(const PresentedModule& m) {
  FreeResolution res = free_resolution(m);
  return res.regularity();
}

// annihilator of v + <rels> as an ideal of S
std::vector<Polynomial> annihilator_in_s(const PresentedModule& m, const Vec& v) {
  FreeModule F = m.pres_free();
  std::vector<Vec> cols{v};
  std::vector<Vec> ann_vecs = preimage_kernel(F, cols, m.rels);
  std::vector<Polynomial> out;
  for (const auto& a : ann_vecs) {
    Polynomial p = poly_from_vec(free_module_rank1(m.ring), a);
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

DegreeInfo findeg_module(const PresentedModule& m_in, const std::vector<Polynomial>& ideal,
                         bool torsionfree_over_domain, std::uint64_t seed, int tries_per_degree) {
  DegreeInfo info;
  PresentedModule m = minimalize(m_in);
  std::optional<long long> ind = module_indeg(m);
  if (!ind) {
    info.determined = false;
    info.route = "zero module";
    return info;
  }
  if (torsionfree_over_domain) {
    info.determined = true;
    info.value = *ind;
    info.exact = true;
    info.route = "torsionfree over a domain: findeg = indeg";
    return info;
  }

  const RingPtr& ring = m.ring;
  long long dimR = hilbert_series_quotient(ring, ideal).dim;
  long long cap = module_regularity(m) + dimR + 2;
  info.cap = cap;
  IdealGB igb = ideal_gb(ring, ideal);
  Prng rng(seed);

  for (long long d = *ind; d <= cap; ++d) {
    std::vector<Vec> basis = graded_piece_basis(m, d);
    if (basis.empty()) continue;
    auto ord = ModuleOrder::pot(ring);
    for (int t = 0; t < tries_per_degree; ++t) {
      // random combination of the standard monomials of degree d
      Vec v = vec_zero();
      for (const auto& b : basis) {
        Coeff c = rng.coeff(ring->field());
        if (!ring->field().is_zero(c))
          v = vec_add(*ring, *ord, v, vec_scale(*ring, b, c));
      }
      if (v.is_zero()) continue;
      std::vector<Polynomial> ann = annihilator_in_s(m, v);
      bool zero_ann = true;
      for (const auto& a : ann) {
        if (!in_ideal(igb, a)) {
          zero_ann = false;
          break;
        }
      }
      if (zero_ann) {
        info.determined = true;
        info.value = d;
        info.exact = false;
        info.route = "probabilistic (seeded random elements, annihilator test)";
        return info;
      }
    }
  }
  info.determined = false;
  info.route = "not determined <= cap";
  return info;
}

long long loewy_length_at_point(const RingPtr& ring, const std::vector<Polynomial>& J_lift,
                                const ProjPoint& p, long long cap) {
  const Field& K = ring->field();
  std::vector<Polynomial> prime = point_prime_ideal(ring, p);
  std::vector<Polynomial> q = J_lift;
  auto outside_prime = [&](const std::vector<Polynomial>& gens) {
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      if (!K.is_zero(eval_at_point(g, p))) return true;
    }
    return false;
  };
  if (outside_prime(q))
    throw std::invalid_argument("point is not on the singular scheme of the ideal");
  for (long long s = 1; s <= cap; ++s) {
    q = ideal_quotient(ring, q, prime);
    if (outside_prime(q)) return s;
  }
  throw std::runtime_error("Loewy length exceeded the iteration cap");
}

long long loewy_mult(const RingPtr& ring, const std::vector<Polynomial>& J_lift,
                     const std::vector<ProjPoint>& points, long long cap) {
  long long acc = 0;
  for (const auto& p : points) acc += loewy_length_at_point(ring, J_lift, p, cap);
  return acc;
}

long long tjurina_total(const CurveAnalysis& an) {
  if (an.smooth) return 0;
  if (an.dim_mod_jac >= an.dim)
    throw std::invalid_argument("singular scheme has the curve's dimension: not reduced");
  return an.e_mod_jac;
}

bool genus_identity_check(long long p_a, long long p_g, long long sigma, long long s) {
  return p_a - p_g == sigma - s + 1;
}

namespace {

// order of vanishing of the ideal at p (largest k with I in p^k), which is
// the local multiplicity at points with planar singularities
long long point_multiplicity(const RingPtr& ring, const std::vector<Polynomial>& ideal,
                             const ProjPoint& p) {
  std::vector<Polynomial> prime = point_prime_ideal(ring, p);
  std::vector<Polynomial> pk = prime;
  for (int k = 1; k <= 8; ++k) {
    // is I contained in p^{k+1}?
    std::vector<Polynomial> next;
    for (const auto& a : pk)
      for (const auto& b : prime) next.push_back(a * b);
    IdealGB gb = ideal_gb(ring, next);
    bool contained = true;
    for (const auto& g : ideal) {
      if (!in_ideal(gb, g)) {
        contained = false;
        break;
      }
    }
    if (!contained) return k;
    pk = std::move(next);
  }
  throw std::runtime_error("point multiplicity exceeded the cap");
}

}  // namespace

InvariantReport curve_invariants(const CurveAnalysis& an, std::uint64_t seed) {
  InvariantReport r;
  const RingPtr& ring = an.ring();
  r.curve = an.spec.name;
  r.seed = seed;
  r.nvars = ring->nvars();
  r.d = an.degree;
  r.dim = an.dim;
  r.a_R = an.a_inv;
  r.reg = an.reg;
  r.p_a = an.p_a;
  r.acm = an.acm;
  r.gorenstein = an.gorenstein;
  r.cm_type = an.cm_type;
  r.complete_intersection = an.complete_intersection;
  r.smooth = an.smooth;
  r.char_p = ring->field().characteristic();
  r.char_ok = !an.char_divides_degree;
  r.hypersurface = an.is_hypersurface();

  r.flag_reduced = an.spec.has_flag(flag::reduced);
  r.flag_irreducible = an.spec.has_flag(flag::irreducible);
  r.flag_locally_irreducible = an.spec.has_flag(flag::locally_irreducible);
  r.flag_lci = an.spec.has_flag(flag::lci) || r.hypersurface;
  r.flag_domain = an.spec.has_flag(flag::domain);
  r.flag_planar = an.spec.has_flag(flag::planar_singularities) || r.hypersurface;
  r.flag_nodes_only = an.spec.has_flag(flag::nodes_only);

  if ((int)an.res.shifts.size() > 1) {
    r.ideal_gen_degrees = an.res.shifts[1];
    std::sort(r.ideal_gen_degrees.begin(), r.ideal_gen_degrees.end());
  }

  if (an.dim_mod_jac < an.dim) {
    TaggedValue e;
    e.value = an.smooth ? 0 : an.e_mod_jac;
    e.route = an.smooth ? "singular scheme empty (ht J >= 2)"
                        : "Hilbert polynomial of R/J_R";
    r.e_mod_jac = e;
    if (r.flag_lci && r.flag_reduced) {
      TaggedValue tau = e;
      tau.route += "; equals total Tjurina number (reduced local complete intersection)";
      r.tau = tau;
    }
  }

  // only the hypersurface formula consumes a(R/J_R); resolving the Jacobian
  // quotient in higher codimension is pure cost
  if (!an.smooth && r.hypersurface && an.dim_mod_jac >= 0 && an.dim_mod_jac < an.dim) {
    r.a_mod_jac = a_invariant(ring, an.jacobian_with_ideal());
  }

  if (!an.spec.points.empty()) {
    r.nsing = (long long)an.spec.points.size();
    std::vector<long long> lls;
    std::vector<Polynomial> jlift = an.jacobian_with_ideal();
    long long total = 0;
    long long maxmult = 0;
    for (const auto& p : an.spec.points) {
      long long ll = loewy_length_at_point(ring, jlift, p);
      lls.push_back(ll);
      total += ll;
      maxmult = std::max(maxmult, point_multiplicity(ring, an.spec.ideal, p));
    }
    r.loewy_lengths = lls;
    TaggedValue lm;
    lm.value = total;
    lm.route = "sum of Loewy lengths at supplied rational points";
    r.lmult = lm;
    r.max_point_mult = maxmult;
  }

  // canonical dual data
  PresentedModule omega_dual = minimalize(dual_module(an.omega));
  std::optional<long long> iod = module_indeg(omega_dual);
  if (iod) r.indeg_omega_dual = *iod;
  bool omega_torsionfree_domain = r.flag_domain;
  DegreeInfo fod = findeg_module(omega_dual, an.spec.ideal, omega_torsionfree_domain, seed ^ 0x9e37ULL);
  if (fod.determined) r.findeg_omega_dual = fod;

  // generalized Cayley-Bacharach: findeg(omega) == indeg(omega)
  {
    std::optional<long long> io = module_indeg(an.omega);
    DegreeInfo fo = findeg_module(an.omega, an.spec.ideal, omega_torsionfree_domain, seed ^ 0x51abULL);
    if (io && fo.determined) {
      r.gcb = (*io == fo.value);
      r.gcb_probabilistic = !fo.exact;
    } else if (an.spec.has_flag(flag::gcb) || r.gorenstein || r.flag_domain) {
      r.gcb = true;
      r.gcb_probabilistic = false;
    }
  }

  // nearly-Gorenstein gate: the trace of omega reaches degree <= 1
  {
    std::vector<Polynomial> tr = trace_ideal_of_canonical(an.omega);
    bool gate = false;
    if (r.gorenstein) {
      gate = true;
    } else if (!tr.empty()) {
      IdealGB igb = ideal_gb(ring, an.spec.ideal);
      for (auto& g : tr) g = nf_ideal(igb, g);
      std::vector<Polynomial> gens;
      for (auto& g : tr)
        if (!g.is_zero()) gens.push_back(g);
      if (!gens.empty()) {
        PresentedModule tr_mod = ideal_as_module(ring, gens, an.spec.ideal);
        std::vector<long long> degs = minimal_gen_degrees(tr_mod);
        gate = !degs.empty() && degs.front() <= 1;
      }
    }
    r.nearly_gorenstein_gate = gate;
  }

  return r;
}

}  // namespace derkit

// Degreewise linear-algebra oracles for the homological layer.

#include <doctest.h>

#include <map>

#include "derkit/invariants.hpp"
#include "derkit/linalg.hpp"
#include "derkit/prng.hpp"
#include "derkit/suite.hpp"

using namespace derkit;

namespace {

// coordinates of a normal form on the standard-monomial basis of degree d
std::vector<Coeff> coords_on_basis(const PresentedModule& m, const ModuleGB& relgb, const Vec& v,
                                   const std::vector<Vec>& basis) {
  const Field& K = m.ring->field();
  Vec nf = normal_form(relgb, v);
  std::map<std::pair<int, std::vector<int>>, Coeff> lookup;
  for (const auto& t : nf.terms) lookup[{t.comp, t.mono.exp}] = t.coeff;
  std::vector<Coeff> out;
  for (const auto& b : basis) {
    const MTerm& bt = b.terms.front();
    auto it = lookup.find({bt.comp, bt.mono.exp});
    out.push_back(it == lookup.end() ? K.zero() : it->second);
  }
  return out;
}

long long brute_hom_dim(const PresentedModule& M, const PresentedModule& N, long long d) {
  const RingPtr& ring = M.ring;
  const Field& K = ring->field();
  auto ord = ModuleOrder::pot(ring);
  FreeModule FM = M.pres_free();
  FreeModule FN = N.pres_free();
  ModuleGB ngb = buchberger(FN, N.rels);

  // unknowns: coordinates of phi(gen_j) on the basis of N in degree a_j + d
  std::vector<std::vector<Vec>> bases(M.ngens());
  std::vector<int> offset(M.ngens() + 1, 0);
  for (int j = 0; j < M.ngens(); ++j) {
    bases[j] = graded_piece_basis(N, M.gen_deg[j] + d);
    offset[j + 1] = offset[j] + (int)bases[j].size();
  }
  int unknowns = offset[M.ngens()];
  if (unknowns == 0) return 0;

  // constraints: sum_j A_{jl} phi(gen_j) = 0 in N for every relation l
  std::vector<std::vector<Coeff>> rows;
  for (const auto& rel : M.rels) {
    long long rel_deg = vec_degree(FM, rel);
    std::vector<Vec> target_basis = graded_piece_basis(N, rel_deg + d);
    if (target_basis.empty()) continue;
    // row block: for each basis vector b of phi(gen_j), the contribution of
    // A_{jl} * b expressed on the target basis
    std::vector<std::vector<Coeff>> block(target_basis.size(),
                                          std::vector<Coeff>(unknowns, K.zero()));
    for (int j = 0; j < M.ngens(); ++j) {
      Polynomial entry = vec_component(FM, rel, j);
      if (entry.is_zero()) continue;
      for (int b = 0; b < (int)bases[j].size(); ++b) {
        Vec prod = vec_poly_mul(*ring, *ord, entry, bases[j][b]);
        std::vector<Coeff> c = coords_on_basis(N, ngb, prod, target_basis);
        for (size_t t = 0; t < target_basis.size(); ++t) block[t][offset[j] + b] = c[t];
      }
    }
    for (auto& row : block) rows.push_back(std::move(row));
  }
  if (rows.empty()) return unknowns;
  DenseMatrix mat(K, (int)rows.size(), unknowns);
  for (int r = 0; r < (int)rows.size(); ++r)
    for (int c = 0; c < unknowns; ++c) mat.at(r, c) = rows[r][c];
  return unknowns - mat.rank();
}

PresentedModule random_presented(const RingPtr& ring, const std::vector<Polynomial>& I,
                                 Prng& rng) {
  auto random_homog = [&](int deg) {
    std::vector<Term> ts;
    int n = ring->nvars();
    std::function<void(int, int, std::vector<int>&)> rec = [&](int pos, int left,
                                                               std::vector<int>& exp) {
      if (pos == n - 1) {
        exp[pos] = left;
        Coeff c = rng.coeff(ring->field());
        if (rng.below(2) == 0 && !ring->field().is_zero(c))
          ts.push_back(Term{ring->monomial(exp), c});
        exp[pos] = 0;
        return;
      }
      for (int e = 0; e <= left; ++e) {
        exp[pos] = e;
        rec(pos + 1, left - e, exp);
        exp[pos] = 0;
      }
    };
    std::vector<int> exp(n, 0);
    rec(0, deg, exp);
    return Polynomial::from_terms(ring, std::move(ts));
  };

  PresentedModule m;
  m.ring = ring;
  m.over = I;
  m.gen_deg = {0, 1};
  auto ord = ModuleOrder::pot(ring);
  FreeModule F = m.pres_free();
  int nrels = 1 + (int)rng.below(2);
  for (int r = 0; r < nrels; ++r) {
    long long deg = 2 + (long long)rng.below(2);
    std::vector<MTerm> terms;
    for (int j = 0; j < 2; ++j) {
      Polynomial e = random_homog((int)(deg - m.gen_deg[j]));
      for (const auto& t : e.terms()) terms.push_back(MTerm{j, t.mono, t.coeff});
    }
    Vec col = vec_canonical(*ring, *ord, std::move(terms));
    if (!col.is_zero()) m.rels.push_back(std::move(col));
  }
  for (const auto& g : I) {
    for (int j = 0; j < 2; ++j) m.rels.push_back(vec_from_poly(F, *ord, g, j));
  }
  return m;
}

}  // namespace

TEST_CASE("hom graded pieces equal brute-force linear algebra") {
  Field f = Field::prime(32003);
  RingPtr ring = make_ring(f, {"x", "y"});
  std::vector<Polynomial> I{parse_polynomial("x^3 + y^3", ring)};
  Prng rng(77);
  for (int trial = 0; trial < 6; ++trial) {
    PresentedModule M = random_presented(ring, I, rng);
    PresentedModule N = random_presented(ring, I, rng);
    PresentedModule H = hom_module(M, N);
    std::vector<long long> hf = module_hf(H, -2, 4);
    for (long long d = -2; d <= 4; ++d) {
      long long brute = brute_hom_dim(M, N, d);
      CHECK(hf[d + 2] == brute);
    }
  }
}

TEST_CASE("degree-truncated syzygies are complete up to the cap") {
  Field f = Field::prime(32003);
  RingPtr r = make_ring(f, {"x", "y", "z"});
  Polynomial q = parse_polynomial("x^4 + y^4 + z^4 + x*y^3", r);
  std::vector<Polynomial> partials;
  for (int i = 0; i < 3; ++i) partials.push_back(q.derivative(i));

  std::vector<Vec> full = syzygies_of_polys(r, partials);
  long long cap = 7;
  std::vector<Vec> capped = syzygies_of_polys(r, partials, cap);

  FreeModule F = free_module(r, {3, 3, 3});
  for (const auto& s : capped) {
    CHECK(vec_degree(F, s) <= cap);
    std::vector<Polynomial> comps = vec_components(F, s);
    Polynomial plug = Polynomial::zero(r);
    for (int i = 0; i < 3; ++i) plug = plug + comps[i] * partials[i];
    CHECK(plug.is_zero());
  }
  // the capped generators span every syzygy of degree <= cap: compare
  // staircase counts of both submodules degree by degree
  ModuleGB g_full = buchberger(F, full);
  ModuleGB g_capped = buchberger(F, capped);
  auto submodule_hf = [&](const ModuleGB& gb, long long d) {
    long long free_dim = 0, quot = 0;
    std::vector<std::vector<Monomial>> lt(3);
    for (const auto& g : gb.gb) lt[g.leading().comp].push_back(g.leading().mono);
    std::function<void(int, int, std::vector<int>&, int)> rec;
    for (int j = 0; j < 3; ++j) {
      long long mdeg = d - 3;
      if (mdeg < 0) continue;
      std::vector<int> exp(3, 0);
      std::function<void(int, long long)> walk = [&](int pos, long long left) {
        if (pos == 2) {
          exp[pos] = (int)left;
          ++free_dim;
          Monomial m = r->monomial(exp);
          bool div = false;
          for (const auto& l : lt[j])
            if (Ring::divides(l, m)) div = true;
          if (!div) ++quot;
          exp[pos] = 0;
          return;
        }
        for (long long e = 0; e <= left; ++e) {
          exp[pos] = (int)e;
          walk(pos + 1, left - e);
          exp[pos] = 0;
        }
      };
      walk(0, mdeg);
    }
    return free_dim - quot;
  };
  for (long long d = 0; d <= cap; ++d) {
    CHECK(submodule_hf(g_full, d) == submodule_hf(g_capped, d));
  }
}

TEST_CASE("Loewy multiplicity never exceeds the Jacobian multiplicity") {
  Field f32 = Field::prime(32003);
  std::vector<FamilyCurve> curves{nodal_cubic(f32), cuspidal_cubic(f32), triangle_cubic(f32),
                                  family_beauty(4, 2, Field::prime(32009))};
  for (const auto& fam : curves) {
    CurveAnalysis an = analyze_curve(fam.spec);
    InvariantReport inv = curve_invariants(an, 3);
    REQUIRE(inv.lmult.has_value());
    REQUIRE(inv.e_mod_jac.has_value());
    CHECK(inv.lmult->value <= inv.e_mod_jac->value);
    // the Loewy bound at every supplied plane singular point
    REQUIRE(inv.loewy_lengths.has_value());
    for (long long ll : *inv.loewy_lengths) {
      CHECK(ll >= 1);
    }
  }
}

TEST_CASE("beauty(4,2) reports in detail") {
  FamilyCurve fam = family_beauty(4, 2, Field::prime(32009));
  CheckOptions opts;
  opts.seed = 12;
  CheckResult res = check_family(fam, opts);
  CHECK(res.all_applicable_hold);
  REQUIRE(res.invariants.lmult.has_value());
  CHECK(res.invariants.lmult->value == 4);  // two cusp-type points of Loewy length 2
  REQUIRE(res.invariants.sigma.has_value());
  CHECK(res.invariants.sigma->value == 2);
  REQUIRE(res.invariants.p_g.has_value());
  CHECK(res.invariants.p_g->value == 3);

  for (const auto& rep : res.reports) {
    if (rep.id == TheoremId::TURINA_B) {
      CHECK(rep.verdict == Verdict::Holds);
      CHECK(rep.lhs == Fraction(1));
      CHECK(rep.rhs == Fraction(1));  // equality: (2 p_a - tau)/(d-1)
    }
    if (rep.id == TheoremId::CURVES) {
      CHECK(rep.verdict == Verdict::Holds);
      CHECK(rep.rhs == Fraction(0));  // a+1+|Sing|-Lmult = 1+1+2-4
    }
    if (rep.id == TheoremId::SMOOTH) CHECK(rep.verdict == Verdict::Inapplicable);
  }
}

TEST_CASE("non-CM canonical module keeps the expected multiplicity") {
  // two skew lines: not ACM; omega still has rank one on each component, so
  // its multiplicity matches deg C = 2
  Field f = Field::prime(32003);
  RingPtr r4 = make_ring_n(f, 4, "x");
  CurveSpec spec;
  spec.ring = r4;
  spec.ideal = {parse_polynomial("x0*x2", r4), parse_polynomial("x0*x3", r4),
                parse_polynomial("x1*x2", r4), parse_polynomial("x1*x3", r4)};
  spec.flags = {flag::reduced, flag::locally_irreducible};
  CurveAnalysis an = analyze_curve(spec);
  CHECK(!an.acm);
  // Hilbert function of omega grows like 2d (rank one over a degree-2 curve)
  std::vector<long long> h = module_hf(an.omega, 0, 8);
  for (int d = 6; d <= 8; ++d) CHECK(h[d] - h[d - 1] == 2);
  // the dual complex splits off each line's canonical module: indeg 2
  CHECK(an.a_inv == -2);
  CHECK(h[2] == 2);
  CHECK(h[0] == 0);
  CHECK(h[1] == 0);
}

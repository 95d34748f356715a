// Acceptance battery: one line per criterion, nonzero exit on any failure.

#include <functional>
#include <iostream>
#include <sstream>

#include "derkit/projection.hpp"
#include "derkit/prng.hpp"
#include "derkit/suite.hpp"

using namespace derkit;

namespace {

int g_failures = 0;

struct Criterion {
  std::string label;
  std::ostringstream detail;
  bool ok = true;

  explicit Criterion(std::string l) : label(std::move(l)) {}

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "    FAILED: " << what << "\n";
    }
  }
  template <typename T, typename U>
  void equal(const T& got, const U& want, const std::string& what) {
    if (!(got == (T)want)) {
      ok = false;
      detail << "    FAILED: " << what << " (got " << got << ", want " << want << ")\n";
    }
  }

  ~Criterion() {
    std::cout << label << ": " << (ok ? "PASS" : "FAIL") << "\n";
    if (!ok) {
      std::cout << detail.str();
      ++g_failures;
    }
    std::cout.flush();
  }
};

void criterion1() {
  Criterion c("criterion 1 (rational normal curve n=3: derivation generators and L*)");
  Field f = Field::prime(32003);
  FamilyCurve fam = family_rational_normal(3, f);
  CurveAnalysis an = analyze_curve(fam.spec);
  DerivationModule der = derivation_module(an, 1);

  c.equal(der.der.ngens(), 4, "Der has 4 minimal generators");
  c.check(der.der_gen_degrees == std::vector<long long>{0, 0, 0, 0},
          "Der generators all in degree 0");
  c.equal(der.mu, 3, "mu(Der/R eps) = 3");
  c.equal(der.indeg.value_or(-99), 0, "indeg(Der/R eps) = 0");

  // the span matches the predicted generators in both directions
  ModuleGB gb = buchberger(der.ambient, der.gens);
  for (const auto& g : fam.pred.der_generators) {
    c.check(derivation_sound(an, g), "predicted generator is a derivation");
    c.check(in_submodule(gb, g), "predicted generator lies in the computed module");
  }
  auto ord = ModuleOrder::pot(an.ring());
  std::vector<Vec> pred_span = fam.pred.der_generators;
  for (const auto& g : an.spec.ideal)
    for (int i = 0; i < an.ring()->nvars(); ++i)
      pred_span.push_back(vec_from_poly(der.ambient, *ord, g, i));
  ModuleGB pgb = buchberger(der.ambient, pred_span);
  for (const auto& rep : der.der.reps)
    c.check(in_submodule(pgb, rep), "computed generator lies in the predicted span");

  // L*: three degree-zero generators, Hilbert function of (y0,y1,y2)(1)
  PresentedModule ls = minimalize(dual_module(euler_kernel(an)));
  std::vector<long long> degs = minimal_gen_degrees(ls);
  c.check(degs == std::vector<long long>{0, 0, 0}, "L* has 3 generators in degree 0");
  std::vector<Polynomial> first3{Polynomial::variable(an.ring(), 0),
                                 Polynomial::variable(an.ring(), 1),
                                 Polynomial::variable(an.ring(), 2)};
  PresentedModule shifted_ideal = ideal_as_module(an.ring(), first3, an.spec.ideal);
  std::vector<long long> h_ls = module_hf(ls, 0, 6);
  std::vector<long long> h_ideal = module_hf(shifted_ideal, 1, 7);  // the (1)-twist
  c.check(h_ls == h_ideal, "Hilbert function of L* equals that of (y0,y1,y2)(1) through degree 6");
}

void check_beauty(Criterion& c, int r, long long want_d, long long want_pa, long long want_tau,
                  long long want_sigma, long long want_indeg) {
  Field f = Field::prime(suitable_prime_for_root_count(r));
  FamilyCurve fam = family_beauty(4, r, f);
  std::string tag = "(n=4, r=" + std::to_string(r) + ") ";
  CurveAnalysis an = analyze_curve(fam.spec);
  c.equal(an.degree, want_d, tag + "degree");
  c.equal(an.p_a, want_pa, tag + "p_a");
  c.equal(tjurina_total(an), want_tau, tag + "tau = e(R/J_R)");
  c.equal((long long)fam.spec.points.size(), (long long)r, tag + "singular point count");

  // semigroup route for sigma, genus identity for p_g
  NumericalSemigroup sg = semigroup_invariants(fam.pred.local_semigroup);
  long long sigma = (long long)fam.spec.points.size() * sigma_from_semigroup(sg);
  c.equal(sigma, want_sigma, tag + "sigma from the semigroup route");
  long long p_g = an.p_a - sigma + 1 - 1;
  c.equal(p_g, fam.pred.p_g.value_or(-1), tag + "p_g via the genus identity");
  // and the per-point Tjurina numbers from the same route sum to tau
  c.equal((long long)fam.spec.points.size() * tjurina_from_genus_lemma(sg), want_tau,
          tag + "local semigroup route reproduces tau");

  DerivationModule der = derivation_module(an, 1);
  c.equal(der.indeg.value_or(-99), want_indeg, tag + "indeg(Der/R eps)");
  c.check(der.findeg.determined && der.findeg.value == want_indeg, tag + "findeg agrees");
  c.equal((2 * an.p_a - want_tau) % (an.degree - 1), 0LL, tag + "genus-route bound integral");
  c.equal((2 * an.p_a - want_tau) / (an.degree - 1), want_indeg,
          tag + "indeg equals (2 p_a - tau)/(d-1)");

  if (r == 2) {
    // the closed-form generator is sound and minimal
    c.check(fam.pred.special_generator.has_value(), tag + "closed-form vector present");
    if (fam.pred.special_generator) {
      const Vec& zeta = *fam.pred.special_generator;
      c.check(derivation_sound(an, zeta), tag + "closed-form vector is a derivation");
      ModuleGB gb = buchberger(der.ambient, der.gens);
      c.check(in_submodule(gb, zeta), tag + "closed-form vector lies in Der");
      auto ord = ModuleOrder::pot(an.ring());
      std::vector<Vec> trivial;
      for (const auto& g : an.spec.ideal)
        for (int i = 0; i < an.ring()->nvars(); ++i)
          trivial.push_back(vec_from_poly(der.ambient, *ord, g, i));
      trivial.push_back(der.euler);
      ModuleGB tgb = buchberger(der.ambient, trivial);
      c.check(!in_submodule(tgb, zeta),
              tag + "closed-form vector is nonzero modulo R eps (a minimal generator in degree "
                    "indeg)");
    }
  }
}

void criterion2() {
  Criterion c("criterion 2 (determinantal family n=4, r=2 and r=3)");
  check_beauty(c, 2, 7, 5, 4, 2, 1);
  check_beauty(c, 3, 13, 21, 18, 9, 2);
}

void criterion3() {
  Criterion c("criterion 3 (smooth plane curves d=3,4,5)");
  Field f = Field::prime(32003);
  for (int d = 3; d <= 5; ++d) {
    FamilyCurve fam = fermat_plane(d, f);
    CurveAnalysis an = analyze_curve(fam.spec);
    DerivationModule der = derivation_module(an, 1);
    std::string tag = "d=" + std::to_string(d) + ": ";
    c.equal(der.indeg.value_or(-99), d - 2, tag + "indeg = d-2");
    PresentedModule m_twist = twist_up(max_ideal_module(an.ring(), an.spec.ideal), an.a_inv);
    std::vector<long long> h1 = module_hf(der.der_mod_euler, 0, d + 3);
    std::vector<long long> h2 = module_hf(m_twist, 0, d + 3);
    c.check(h1 == h2, tag + "Hilbert function equals that of m(3-d) through degree d+3");
  }
}

void criterion4() {
  Criterion c("criterion 4 (nodal cubic)");
  FamilyCurve fam = nodal_cubic(Field::prime(32003));
  CheckOptions opts;
  opts.seed = 4;
  CheckResult res = check_family(fam, opts);
  c.equal(res.invariants.findeg_der->value, 1, "findeg = 1");
  c.equal(res.invariants.indeg_der.value_or(-99), 1, "indeg = 1");
  c.equal(res.invariants.a_R + 1, 1, "a(R)+1 = 1");
  c.equal(res.invariants.tau->value, 1, "tau = 1");
  for (const auto& rep : res.reports) {
    if (rep.id == TheoremId::EQUALITY) {
      c.check(rep.verdict == Verdict::Holds, "degree equality holds");
    }
    if (rep.id == TheoremId::DPW) {
      c.check(rep.verdict == Verdict::Holds, "multiplicity bound holds");
      c.check(rep.rhs <= Fraction(1), "multiplicity bound rhs <= findeg");
      // honest inputs delta = 2, e(R/J) = tau = 1 give rhs = 1/2 by the
      // formula (the synthetic-arithmetic value 0 appears in the unit tests)
      c.check(rep.rhs == Fraction(1, 2), "multiplicity bound rhs = 1/2 on honest inputs");
    }
    if (rep.id == TheoremId::DPW_EK_B) {
      c.check(rep.verdict == Verdict::Holds, "root bound holds");
      c.check(rep.rhs == Fraction(1), "root bound rhs = 1 (exact root arithmetic)");
      c.check(rep.lhs == Fraction(1), "equality attained");
    }
  }
}

void criterion5() {
  Criterion c("criterion 5 (cuspidal cubic)");
  Field f = Field::prime(32003);
  FamilyCurve fam = cuspidal_cubic(f);
  CurveAnalysis an = analyze_curve(fam.spec);
  c.equal(tjurina_total(an), 2, "tau = 2");
  long long ll = loewy_length_at_point(an.ring(), an.jacobian_with_ideal(),
                                       fam.spec.points.front());
  c.equal(ll, 2, "Loewy length at the cusp = 2");
  HypersurfaceIndeg hi = hypersurface_indeg(an, 5);  // throws if routes disagree
  c.equal(hi.value, hi.direct, "formula value equals direct syzygy indeg");
  InvariantReport inv = curve_invariants(an, 5);
  long long e = inv.max_point_mult.value_or(-1);
  c.equal(e, 2, "local multiplicity 2");
  long long lambda = inv.tau->value;
  c.check(ll <= lambda - (e - 1) * (e - 2) / 2, "Loewy bound holds at the cusp");
}

void criterion6() {
  Criterion c("criterion 6 (smooth ACM space curves: resolution of the quotient)");
  Field f = Field::prime(32003);
  std::vector<FamilyCurve> curves;
  curves.push_back(family_rational_normal(3, f));
  curves.push_back(quintic_233(f, 6));
  curves.push_back(elliptic_quartic_ci(f, 6));
  for (auto& fam : curves) {
    CheckOptions opts;
    opts.seed = 6;
    opts.ids = {TheoremId::CURVEIN3_INDEG};
    CheckResult res = check_family(fam, opts);
    std::string tag = fam.spec.name + ": ";
    const BoundReport& rep = res.reports.front();
    c.check(rep.verdict == Verdict::Holds, tag + "initial degree matches the resolution value");
    size_t k = res.invariants.ideal_gen_degrees.size();
    if (k >= 3) {
      c.check(res.invariants.curvein3_betti_match.value_or(false),
              tag + "resolution of Der/R eps has the mapping-cone shape");
    }
  }
}

void criterion7() {
  Criterion c("criterion 7 (projection to the plane)");
  Field f = Field::prime(32003);

  {
    FamilyCurve fam = family_rational_normal(3, f);
    CurveAnalysis an = analyze_curve(fam.spec);
    DerivationModule der = derivation_module(an, 7);
    ProjectionResult pr = general_projection(an, der, 7);
    c.equal(pr.plane_poly.degree(), 3, "twisted cubic projects to a plane cubic");
    CurveAnalysis pan = analyze_curve(pr.plane);
    c.check(!pan.smooth, "the image is singular");
    c.equal(tjurina_total(pan), 1, "the image has one node");
    c.check(pr.sandwich.verdict == Verdict::Holds, "both sandwich inequalities hold");
  }

  {
    Field fb = Field::prime(suitable_prime_for_root_count(2));
    FamilyCurve fam = family_beauty(4, 2, fb);
    CurveAnalysis an = analyze_curve(fam.spec);
    DerivationModule der = derivation_module(an, 7);
    ProjectionResult pr = general_projection(an, der, 7);
    c.equal(pr.plane_poly.degree(), 7, "the image is a plane septic");
    c.check(pr.sandwich.verdict == Verdict::Holds, "sandwich inequalities hold");

    CurveAnalysis pan = analyze_curve(pr.plane);
    long long tau_plane = tjurina_total(pan);
    c.equal(tau_plane, 14, "plane image total Tjurina number (2 cusps + 10 nodes)");
    long long lmult_old = 0;
    for (const auto& q : pr.image_points) {
      long long ll = loewy_length_at_point(pan.ring(), pan.jacobian_with_ideal(), q);
      c.equal(ll, 2, "image of a cusp keeps Loewy length 2");
      lmult_old += ll;
    }
    // new singularities are nodes: their count is tau(A) - tau(C), each
    // contributing 1 to both |Sing| and Lmult, so the difference is preserved
    long long tau_curve = 4;
    long long s_new = tau_plane - tau_curve;
    c.equal(s_new, 10, "number of new nodes");
    long long sing_c = 2, lmult_c = 4;
    long long sing_d = sing_c + s_new;
    long long lmult_d = lmult_old + s_new;
    c.check(sing_d - lmult_d == sing_c - lmult_c,
            "|Sing| - Lmult is preserved under the projection");
  }
}

void criterion8() {
  Criterion c("criterion 8 (algebra-core property suites)");
  Field f = Field::prime(32003);
  RingPtr r = make_ring(f, {"x", "y", "z"});
  Prng rng(8);

  auto random_homog = [&](int deg, int terms) {
    std::vector<Term> ts;
    for (int t = 0; t < terms; ++t) {
      std::vector<int> exp(3, 0);
      for (int d = 0; d < deg; ++d) exp[rng.below(3)]++;
      ts.push_back(Term{r->monomial(exp), rng.coeff(f)});
    }
    return Polynomial::from_terms(r, std::move(ts));
  };

  // Euler relation, 1000 cases
  {
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
      int deg = 1 + (int)rng.below(6);
      Polynomial p = random_homog(deg, 4);
      Polynomial e = Polynomial::zero(r);
      for (int v = 0; v < 3; ++v) e = e + Polynomial::variable(r, v) * p.derivative(v);
      ok = ok && (e == p.scaled(f.from_int(deg)));
    }
    c.check(ok, "Euler relation on 1000 random forms");
  }

  // ring axioms, 1000 random triples
  {
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
      Polynomial a = random_homog(1 + (int)rng.below(3), 3);
      Polynomial b = random_homog(1 + (int)rng.below(3), 3);
      Polynomial cc = random_homog(1 + (int)rng.below(3), 3);
      ok = ok && ((a + b) + cc == a + (b + cc)) && (a * b == b * a) &&
           (a * (b + cc) == a * b + a * cc);
    }
    c.check(ok, "ring axioms on 1000 random triples");
  }

  // membership soundness: random combinations reduce to zero, 1000 cases
  {
    std::vector<Polynomial> gens{random_homog(2, 3), random_homog(2, 3), random_homog(3, 4)};
    IdealGB gb = ideal_gb(r, gens);
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
      Polynomial combo = Polynomial::zero(r);
      for (const auto& g : gens) combo = combo + random_homog(1 + (int)rng.below(2), 2) * g;
      ok = ok && in_ideal(gb, combo);
    }
    c.check(ok, "membership soundness on 1000 random combinations");
  }

  // syzygy soundness across random ideals
  {
    bool ok = true;
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Polynomial> gens{random_homog(2, 3), random_homog(2, 2), random_homog(3, 3)};
      std::vector<Vec> syz = syzygies_of_polys(r, gens);
      FreeModule F = free_module(r, {2, 2, 3});
      for (const auto& s : syz) {
        std::vector<Polynomial> comps = vec_components(F, s);
        Polynomial plug = Polynomial::zero(r);
        for (size_t i = 0; i < gens.size(); ++i) plug = plug + comps[i] * gens[i];
        ok = ok && plug.is_zero();
      }
    }
    c.check(ok, "syzygy soundness on random ideals");
  }

  // resolutions: differentials compose to zero, series agreement through 12
  {
    bool ok = true;
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Polynomial> gens{random_homog(2, 3), random_homog(3, 3)};
      FreeResolution res = free_resolution_quotient(r, gens);
      ok = ok && resolution_is_valid(res);
      HilbertSeries hs = hilbert_series_quotient(r, gens);
      std::vector<long long> coeffs = hs.expand(12);
      auto hf_free = [&](long long dd) {
        return dd < 0 ? 0 : binom_ll(dd + 2, 2);
      };
      for (int dd = 0; dd <= 12 && ok; ++dd) {
        long long acc = 0;
        for (size_t i = 0; i < res.shifts.size(); ++i) {
          long long sgn = (i % 2 == 0) ? 1 : -1;
          for (long long s : res.shifts[i]) acc += sgn * hf_free(dd - s);
        }
        ok = ok && (acc == coeffs[dd]);
      }
    }
    c.check(ok, "resolution validity and series agreement through degree 12");
  }

  // a <= reg - dim with equality under CM, on the built-in battery
  {
    bool ok = true;
    for (const auto& entry : builtin_suite(8)) {
      CurveAnalysis an = analyze_curve(entry.fam.spec);
      ok = ok && (an.a_inv <= an.reg - an.dim);
      if (an.acm) ok = ok && (an.a_inv == an.reg - an.dim);
    }
    // plus a non-CM witness where the inequality is strict
    RingPtr r4 = make_ring_n(f, 4, "x");
    CurveSpec skew;
    skew.ring = r4;
    skew.ideal = {parse_polynomial("x0*x2", r4), parse_polynomial("x0*x3", r4),
                  parse_polynomial("x1*x2", r4), parse_polynomial("x1*x3", r4)};
    CurveAnalysis an = analyze_curve(skew);
    ok = ok && !an.acm && an.a_inv < an.reg - an.dim;
    c.check(ok, "a-invariant versus regularity on the battery");
  }
}

void criterion9() {
  Criterion c("criterion 9 (full verification battery holds)");
  for (const auto& entry : builtin_suite(9)) {
    CheckOptions opts;
    opts.seed = 9;
    opts.with_projection = entry.with_projection;
    CheckResult res = check_family(entry.fam, opts);
    for (const auto& rep : res.reports) {
      c.check(rep.verdict != Verdict::Fails,
              entry.fam.spec.name + ": " + theorem_name(rep.id) + " must not fail");
    }
    bool some_applicable = false;
    for (const auto& rep : res.reports) some_applicable |= rep.applicable();
    c.check(some_applicable, entry.fam.spec.name + ": at least one theorem applies");
    // upper bounds dominate lower bounds wherever both apply
    for (const auto& ub : res.reports) {
      if (ub.rel != Relation::LE || !ub.applicable()) continue;
      for (const auto& lb : res.reports) {
        if (lb.rel != Relation::GE || !lb.applicable()) continue;
        c.check(lb.rhs <= ub.rhs, entry.fam.spec.name + ": lower bound " +
                                      theorem_name(lb.id) + " below upper bound " +
                                      theorem_name(ub.id));
      }
    }
  }
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (g_failures) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}

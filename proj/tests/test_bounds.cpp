#include <doctest.h>

#include "derkit/projection.hpp"
#include "derkit/suite.hpp"

using namespace derkit;

TEST_CASE("fraction arithmetic") {
  Fraction a(1, 2), b(1, 3);
  CHECK((a + b) == Fraction(5, 6));
  CHECK((a - b) == Fraction(1, 6));
  CHECK((a * b) == Fraction(1, 6));
  CHECK((a / b) == Fraction(3, 2));
  CHECK(Fraction(2, 4) == Fraction(1, 2));
  CHECK(Fraction(-1, -2) == Fraction(1, 2));
  CHECK(b < a);
  CHECK(Fraction(7).str() == "7");
  CHECK(Fraction(-1, 2).str() == "-1/2");
}

TEST_CASE("pure arithmetic evaluations on synthetic inputs") {
  InvariantReport inv;
  inv.curve = "synthetic";
  inv.nvars = 3;
  inv.dim = 2;
  inv.d = 3;
  inv.a_R = 0;
  inv.acm = true;
  inv.flag_reduced = true;
  inv.flag_lci = true;
  inv.char_ok = true;
  inv.hypersurface = true;
  inv.smooth = false;
  DegreeInfo fd;
  fd.determined = true;
  fd.value = 1;
  fd.exact = true;
  inv.findeg_der = fd;
  inv.indeg_der = 1;

  // the multiplicity-bound formula at delta = 2, e(R/J) = 2, d = 3 gives 0
  inv.delta_partial = 2;
  TaggedValue e;
  e.value = 2;
  e.route = "synthetic";
  inv.e_partial = e;
  BoundReport dpw = evaluate_bound(TheoremId::DPW, inv);
  CHECK(dpw.verdict == Verdict::Holds);
  CHECK(dpw.rhs == Fraction(0));

  // tau-route arithmetic on the same synthetic curve
  TaggedValue tau;
  tau.value = 1;
  tau.route = "synthetic";
  inv.tau = tau;
  BoundReport eka = evaluate_bound(TheoremId::DPW_EK_A, inv);
  CHECK(eka.verdict == Verdict::Holds);
  CHECK(eka.rhs == Fraction(1, 2));  // d-2 - tau/(d-1) = 1 - 1/2

  TaggedValue pg;
  pg.value = 0;
  pg.route = "synthetic";
  inv.p_g = pg;
  BoundReport ekb = evaluate_bound(TheoremId::DPW_EK_B, inv);
  CHECK(ekb.verdict == Verdict::Holds);
  CHECK(ekb.rhs == Fraction(1));  // 3 - 3/2 - sqrt(1/4) = 1, equality attained
  CHECK(ekb.lhs == Fraction(1));

  // the genus-route value on the distinguished determinantal curve numbers
  InvariantReport b42;
  b42.dim = 2;
  b42.d = 7;
  b42.a_R = 1;
  b42.p_a = 5;
  b42.acm = true;
  b42.flag_reduced = true;
  b42.flag_lci = true;
  b42.char_ok = true;
  TaggedValue t4;
  t4.value = 4;
  b42.tau = t4;
  DegreeInfo f4;
  f4.determined = true;
  f4.value = 1;
  f4.exact = true;
  b42.findeg_der = f4;
  b42.indeg_der = 1;
  BoundReport tb = evaluate_bound(TheoremId::TURINA_B, b42);
  CHECK(tb.verdict == Verdict::Holds);
  CHECK(tb.rhs == Fraction(1));  // (2*5-4)/6 = 1 = measured
}

TEST_CASE("missing inputs make instances inapplicable, never guesses") {
  InvariantReport inv;
  inv.dim = 2;
  inv.d = 4;
  inv.a_R = 1;
  inv.flag_reduced = true;
  inv.char_ok = true;
  // no findeg, no tau
  BoundReport r = evaluate_bound(TheoremId::DPW_EK_A, inv);
  CHECK(r.verdict == Verdict::Inapplicable);
  BoundReport r2 = evaluate_bound(TheoremId::CURVES, inv);
  CHECK(r2.verdict == Verdict::Inapplicable);
}

TEST_CASE("nodal cubic full check") {
  FamilyCurve fam = nodal_cubic(Field::prime(32003));
  CheckOptions opts;
  opts.seed = 3;
  CheckResult res = check_family(fam, opts);
  CHECK(res.all_applicable_hold);

  auto find = [&](TheoremId id) -> const BoundReport& {
    for (const auto& r : res.reports)
      if (r.id == id) return r;
    static BoundReport none;
    return none;
  };

  CHECK(res.invariants.findeg_der->value == 1);
  CHECK(res.invariants.indeg_der.value() == 1);
  CHECK(res.invariants.a_R == 0);

  const BoundReport& eq = find(TheoremId::EQUALITY);
  CHECK(eq.verdict == Verdict::Holds);
  CHECK(eq.lhs == Fraction(1));
  CHECK(eq.rhs == Fraction(1));

  const BoundReport& nodes = find(TheoremId::CURVES_NODES);
  CHECK(nodes.verdict == Verdict::Holds);

  const BoundReport& dpw = find(TheoremId::DPW);
  CHECK(dpw.verdict == Verdict::Holds);
  CHECK(dpw.rhs == Fraction(1, 2));  // delta-2 - (e-delta)/(d-1) = -(1-2)/2

  const BoundReport& ekb = find(TheoremId::DPW_EK_B);
  CHECK(ekb.verdict == Verdict::Holds);
  CHECK(ekb.rhs == Fraction(1));  // exact root arithmetic, equality attained

  const BoundReport& ube = find(TheoremId::UB_E);
  CHECK(ube.verdict == Verdict::Holds);

  const BoundReport& hyper = find(TheoremId::HYPER);
  CHECK(hyper.verdict == Verdict::Holds);

  // upper bounds dominate every applicable lower bound
  for (const auto& r : res.reports) {
    if (r.verdict != Verdict::Holds) continue;
    if (r.rel == Relation::GE) CHECK(r.rhs <= ube.rhs);
  }
}

TEST_CASE("twisted cubic full check") {
  FamilyCurve fam = family_rational_normal(3, Field::prime(32003));
  CheckOptions opts;
  opts.seed = 5;
  CheckResult res = check_family(fam, opts);
  CHECK(res.all_applicable_hold);
  for (const auto& r : res.reports) {
    if (r.id == TheoremId::SMOOTH_GOR || r.id == TheoremId::UB_E) {
      CHECK(r.verdict == Verdict::Inapplicable);  // type 2, not Gorenstein
    }
    if (r.id == TheoremId::CURVEIN3_INDEG) {
      CHECK(r.verdict == Verdict::Holds);
      CHECK(r.lhs == Fraction(0));
      CHECK(r.rhs == Fraction(0));  // a1 + a2 - 4 with a = (2,2,2)
    }
    if (r.id == TheoremId::SMOOTH) CHECK(r.verdict == Verdict::Holds);
  }
}

TEST_CASE("projection: twisted cubic to a nodal plane cubic") {
  FamilyCurve fam = family_rational_normal(3, Field::prime(32003));
  CurveAnalysis an = analyze_curve(fam.spec);
  DerivationModule der = derivation_module(an, 11);
  ProjectionResult pr = general_projection(an, der, 11);

  CHECK(pr.plane_poly.degree() == 3);
  CHECK(pr.a_plane == 0);
  CHECK(pr.a_curve == -1);
  CHECK(pr.sandwich.verdict == Verdict::Holds);
  // findeg_R = 0 >= indeg_A - a(A) + a(R) = 1 - 0 - 1 = 0: equality
  CHECK(pr.sandwich.lhs == Fraction(0));
  CHECK(pr.sandwich.rhs == Fraction(0));

  // the projected cubic is singular with tau = 1 (one new node)
  CurveAnalysis pan = analyze_curve(pr.plane);
  CHECK(!pan.smooth);
  CHECK(tjurina_total(pan) == 1);

  // seed determinism
  ProjectionResult pr2 = general_projection(an, der, 11);
  CHECK(pr2.plane_poly == pr.plane_poly);
  CHECK(pr2.sandwich.to_json() == pr.sandwich.to_json());
}

TEST_CASE("plane curve projects to itself") {
  FamilyCurve fam = nodal_cubic(Field::prime(32003));
  CurveAnalysis an = analyze_curve(fam.spec);
  DerivationModule der = derivation_module(an, 2);
  ProjectionResult pr = general_projection(an, der, 2);
  CHECK(pr.plane_poly.degree() == 3);
  CHECK(pr.a_plane == an.a_inv);
  CHECK(pr.sandwich.verdict == Verdict::Holds);
  CHECK(pr.indeg_plane == *der.indeg);
}

TEST_CASE("report serialization is schema stable") {
  FamilyCurve fam = nodal_cubic(Field::prime(32003));
  CheckOptions opts;
  opts.seed = 3;
  opts.ids = {TheoremId::EQUALITY};
  CheckResult res = check_family(fam, opts);
  REQUIRE(res.reports.size() == 1);
  std::string j = res.reports.front().to_json();
  CHECK(j.find("\"theorem\": \"EQUALITY\"") != std::string::npos);
  CHECK(j.find("\"hypotheses\"") != std::string::npos);
  CHECK(j.find("\"inputs\"") != std::string::npos);
  CHECK(j.find("\"lhs\"") != std::string::npos);
  CHECK(j.find("\"rhs\"") != std::string::npos);
  CHECK(j.find("\"relation\"") != std::string::npos);
  CHECK(j.find("\"verdict\": \"holds\"") != std::string::npos);
  CHECK(j.find("\"seed\"") != std::string::npos);
}

// Heavier curves than the default suite: a degree-15 space curve in P^4 and
// the rational normal quintic. Runs as its own ctest entry.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "derkit/suite.hpp"

using namespace derkit;

TEST_CASE("degree-15 determinantal curve in P^4") {
  Field f = Field::prime(suitable_prime_for_root_count(2));
  FamilyCurve fam = family_beauty(5, 2, f);
  CurveAnalysis an = analyze_curve(fam.spec);
  CHECK(an.degree == 15);
  CHECK(an.p_a == 17);
  CHECK(an.acm);
  CHECK(an.cm_type == 3);
  CHECK(tjurina_total(an) == 20);
  CHECK(fam.spec.points.size() == 2);

  // sigma via the local value semigroup <4,6,7>
  NumericalSemigroup sg = semigroup_invariants(fam.pred.local_semigroup);
  CHECK(sg.gens == std::vector<long long>{4, 6, 7});
  CHECK(sigma_from_semigroup(sg) == 5);
  long long sigma = 2 * sigma_from_semigroup(sg);
  CHECK(sigma == 10);
  CHECK(tjurina_from_genus_lemma(sg) == 10);  // symmetric semigroup: tau = 2 sigma
  long long p_g = an.p_a - sigma + 1 - 1;
  CHECK(p_g == 7);

  DerivationModule der = derivation_module(an, 15);
  CHECK(der.indeg.value() == 1);  // r - 1
  REQUIRE(der.findeg.determined);
  CHECK(der.findeg.value == 1);

  // the closed-form derivation vector works in P^4 too
  REQUIRE(fam.pred.special_generator.has_value());
  CHECK(derivation_sound(an, *fam.pred.special_generator));

  // genus-route bound is an equality here as well
  CHECK((2 * an.p_a - 20) % (an.degree - 1) == 0);
  CHECK((2 * an.p_a - 20) / (an.degree - 1) == 1);

  CheckOptions opts;
  opts.seed = 15;
  opts.ids = {TheoremId::TURINA_B, TheoremId::UB_B, TheoremId::RTYPE_BOUND};
  CheckResult res = check_family(fam, opts);
  CHECK(res.all_applicable_hold);
  for (const auto& rep : res.reports) {
    if (rep.id == TheoremId::TURINA_B) {
      CHECK(rep.verdict == Verdict::Holds);
      CHECK(rep.rhs == Fraction(1));
      CHECK(rep.lhs == Fraction(1));
    }
  }
}

TEST_CASE("rational normal quintic") {
  Field f = Field::prime(32003);
  FamilyCurve fam = family_rational_normal(5, f);
  CurveAnalysis an = analyze_curve(fam.spec);
  CHECK(an.degree == 5);
  CHECK(an.smooth);
  CHECK(an.acm);
  DerivationModule der = derivation_module(an, 5);
  CHECK(der.der.ngens() == 4);
  CHECK(der.der_gen_degrees == std::vector<long long>{0, 0, 0, 0});
  CHECK(der.mu == 3);
  CHECK(der.indeg.value() == 0);
  ModuleGB gb = buchberger(der.ambient, der.gens);
  for (const auto& g : fam.pred.der_generators) {
    CHECK(derivation_sound(an, g));
    CHECK(in_submodule(gb, g));
  }
}

TEST_CASE("dual of the Euler kernel for the rational normal quartic") {
  Field f = Field::prime(32003);
  FamilyCurve fam = family_rational_normal(4, f);
  CurveAnalysis an = analyze_curve(fam.spec);
  PresentedModule ls = minimalize(dual_module(euler_kernel(an)));
  CHECK(minimal_gen_degrees(ls) == std::vector<long long>{0, 0, 0});
  std::vector<Polynomial> first3{Polynomial::variable(an.ring(), 0),
                                 Polynomial::variable(an.ring(), 1),
                                 Polynomial::variable(an.ring(), 2)};
  PresentedModule shifted = ideal_as_module(an.ring(), first3, an.spec.ideal);
  CHECK(module_hf(ls, 0, 6) == module_hf(shifted, 1, 7));
}

TEST_CASE("full pipeline over the rationals") {
  FamilyCurve fam = nodal_cubic(Field::rationals());
  CheckOptions opts;
  opts.seed = 2;
  CheckResult res = check_family(fam, opts);
  CHECK(res.all_applicable_hold);
  CHECK(res.invariants.char_p == 0);
  CHECK(res.invariants.findeg_der->value == 1);
  CHECK(res.invariants.tau->value == 1);
  for (const auto& rep : res.reports) {
    if (rep.id == TheoremId::EQUALITY) CHECK(rep.verdict == Verdict::Holds);
    if (rep.id == TheoremId::DPW_EK_B) {
      CHECK(rep.verdict == Verdict::Holds);
      CHECK(rep.rhs == Fraction(1));
    }
  }
}

TEST_CASE("independent checks can run concurrently") {
  Field f = Field::prime(32003);
  CheckOptions opts;
  opts.seed = 33;
  CheckResult serial_a = check_family(nodal_cubic(f), opts);
  CheckResult serial_b = check_family(cuspidal_cubic(f), opts);

  CheckResult par_a, par_b;
  std::thread ta([&] { par_a = check_family(nodal_cubic(f), opts); });
  std::thread tb([&] { par_b = check_family(cuspidal_cubic(f), opts); });
  ta.join();
  tb.join();

  REQUIRE(par_a.reports.size() == serial_a.reports.size());
  REQUIRE(par_b.reports.size() == serial_b.reports.size());
  for (size_t i = 0; i < serial_a.reports.size(); ++i)
    CHECK(par_a.reports[i].to_json() == serial_a.reports[i].to_json());
  for (size_t i = 0; i < serial_b.reports.size(); ++i)
    CHECK(par_b.reports[i].to_json() == serial_b.reports[i].to_json());
}

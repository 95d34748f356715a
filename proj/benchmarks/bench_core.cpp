#include <benchmark/benchmark.h>

#include "derkit/suite.hpp"

using namespace derkit;

namespace {

std::vector<Polynomial> twisted_cubic(const RingPtr& r4) {
  return {parse_polynomial("x0*x2 - x1^2", r4), parse_polynomial("x1*x3 - x2^2", r4),
          parse_polynomial("x0*x3 - x1*x2", r4)};
}

void BM_GroebnerScroll(benchmark::State& state) {
  Field f = Field::prime(32003);
  RingPtr ring = make_ring_n(f, (int)state.range(0) + 1, "x");
  FamilyCurve fam = family_rational_normal((int)state.range(0), f);
  for (auto _ : state) {
    IdealGB gb = ideal_gb(fam.spec.ring, fam.spec.ideal);
    benchmark::DoNotOptimize(gb.gb.size());
  }
}
BENCHMARK(BM_GroebnerScroll)->Arg(3)->Arg(5)->Arg(7);

void BM_Syzygies(benchmark::State& state) {
  Field f = Field::prime(32003);
  RingPtr r4 = make_ring_n(f, 4, "x");
  std::vector<Polynomial> gens = twisted_cubic(r4);
  for (auto _ : state) {
    auto syz = syzygies_of_polys(r4, gens);
    benchmark::DoNotOptimize(syz.size());
  }
}
BENCHMARK(BM_Syzygies);

void BM_Resolution(benchmark::State& state) {
  Field f = Field::prime(32003);
  FamilyCurve fam = family_beauty(4, (int)state.range(0), f);
  for (auto _ : state) {
    FreeResolution res = free_resolution_quotient(fam.spec.ring, fam.spec.ideal);
    benchmark::DoNotOptimize(res.length());
  }
}
BENCHMARK(BM_Resolution)->Arg(2)->Arg(3);

void BM_HilbertSeries(benchmark::State& state) {
  Field f = Field::prime(32003);
  FamilyCurve fam = family_beauty(4, 3, f);
  CurveAnalysis an = analyze_curve(fam.spec);
  std::vector<Polynomial> jac = an.jacobian_with_ideal();
  for (auto _ : state) {
    HilbertSeries hs = hilbert_series_quotient(fam.spec.ring, jac);
    benchmark::DoNotOptimize(hs.e0);
  }
}
BENCHMARK(BM_HilbertSeries);

void BM_DerivationModule(benchmark::State& state) {
  Field f = Field::prime(32003);
  FamilyCurve fam = family_beauty(4, (int)state.range(0), f);
  CurveAnalysis an = analyze_curve(fam.spec);
  for (auto _ : state) {
    DerivationModule der = derivation_module(an, 1);
    benchmark::DoNotOptimize(der.mu);
  }
}
BENCHMARK(BM_DerivationModule)->Arg(2)->Arg(3);

void BM_NormalForm(benchmark::State& state) {
  Field f = Field::prime(32003);
  RingPtr r4 = make_ring_n(f, 4, "x");
  IdealGB gb = ideal_gb(r4, twisted_cubic(r4));
  Polynomial probe = parse_polynomial("x1^9 + x0^4*x3^5 - x2^9", r4);
  for (auto _ : state) {
    Polynomial nf = nf_ideal(gb, probe);
    benchmark::DoNotOptimize(nf.size());
  }
}
BENCHMARK(BM_NormalForm);

}  // namespace

BENCHMARK_MAIN();

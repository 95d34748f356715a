#include "derkit/suite.hpp"

#include <algorithm>
#include <functional>

namespace derkit {

namespace {

RingPtr plane_ring(const Field& field) { return make_ring(field, {"x", "y", "z"}); }

}  // namespace

FamilyCurve nodal_cubic(const Field& field) {
  RingPtr ring = plane_ring(field);
  Polynomial f = parse_polynomial("y^2*z - x^3 - x^2*z", ring);
  ProjPoint node;
  node.coords = {field.zero(), field.zero(), field.one()};
  FamilyCurve out = family_plane(f, {flag::reduced, flag::irreducible, flag::domain,
                                     flag::nodes_only},
                                 {node});
  out.spec.name = "nodal_cubic";
  out.spec.asserted_sigma = 1;
  out.spec.asserted_p_g = 0;
  out.spec.asserted_components = 1;
  out.pred.d = 3;
  out.pred.tau = 1;
  out.pred.p_g = 0;
  out.pred.sigma = 1;
  out.pred.ncomponents = 1;
  out.pred.indeg = 1;
  return out;
}

FamilyCurve cuspidal_cubic(const Field& field) {
  RingPtr ring = plane_ring(field);
  Polynomial f = parse_polynomial("y^2*z - x^3", ring);
  ProjPoint cusp;
  cusp.coords = {field.zero(), field.zero(), field.one()};
  FamilyCurve out = family_plane(
      f, {flag::reduced, flag::irreducible, flag::locally_irreducible, flag::domain}, {cusp});
  out.spec.name = "cuspidal_cubic";
  out.spec.local_semigroup = {2, 3};
  out.spec.asserted_components = 1;
  out.pred.d = 3;
  out.pred.tau = 2;
  out.pred.p_g = 0;
  out.pred.sigma = 1;
  out.pred.ncomponents = 1;
  out.pred.local_semigroup = {2, 3};
  return out;
}

FamilyCurve fermat_plane(int d, const Field& field) {
  RingPtr ring = plane_ring(field);
  std::string text = "x^" + std::to_string(d) + " + y^" + std::to_string(d) + " + z^" +
                     std::to_string(d);
  FamilyCurve out = family_plane(parse_polynomial(text, ring),
                                 {flag::reduced, flag::irreducible, flag::domain});
  out.spec.name = "fermat_d" + std::to_string(d);
  out.pred.d = d;
  out.pred.tau = 0;
  out.pred.sigma = 0;
  out.pred.ncomponents = 1;
  out.pred.indeg = d - 2;
  return out;
}

FamilyCurve triangle_cubic(const Field& field) {
  RingPtr ring = plane_ring(field);
  Polynomial f = parse_polynomial("x*y*z", ring);
  std::vector<ProjPoint> pts(3);
  pts[0].coords = {field.one(), field.zero(), field.zero()};
  pts[1].coords = {field.zero(), field.one(), field.zero()};
  pts[2].coords = {field.zero(), field.zero(), field.one()};
  FamilyCurve out = family_plane(f, {flag::reduced, flag::nodes_only}, pts);
  out.spec.name = "triangle";
  out.spec.asserted_sigma = 3;
  out.spec.asserted_p_g = 0;
  out.spec.asserted_components = 3;
  out.pred.d = 3;
  out.pred.tau = 3;
  out.pred.sigma = 3;
  out.pred.ncomponents = 3;
  return out;
}

FamilyCurve elliptic_quartic_ci(const Field& field, std::uint64_t seed) {
  RingPtr ring = make_ring_n(field, 4, "x");
  for (int attempt = 0; attempt < 64; ++attempt) {
    Prng rng(seed + (std::uint64_t)attempt * 1315423911ULL);
    std::vector<Polynomial> quadrics;
    for (int q = 0; q < 2; ++q) {
      std::vector<Term> terms;
      for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
          Coeff c = rng.coeff(field);
          if (field.is_zero(c)) continue;
          Monomial m = Ring::mul(ring->var_power(i, 1), ring->var_power(j, 1));
          terms.push_back(Term{std::move(m), std::move(c)});
        }
      }
      quadrics.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    CurveSpec spec;
    spec.ring = ring;
    spec.ideal = quadrics;
    spec.name = "elliptic_quartic";
    spec.flags = {flag::reduced, flag::irreducible, flag::domain, flag::lci};
    try {
      CurveAnalysis an = analyze_curve(spec);
      if (an.dim != 2 || an.degree != 4 || !an.smooth || !an.acm || !an.complete_intersection)
        continue;
      FamilyCurve out;
      out.spec = std::move(spec);
      out.pred.d = 4;
      out.pred.p_a = 1;
      out.pred.tau = 0;
      out.pred.indeg = 1;  // a(R) + 1 with a = 0
      return out;
    } catch (const std::exception&) {
      continue;
    }
  }
  throw std::runtime_error("no smooth (2,2) complete intersection found from the seed");
}

FamilyCurve quintic_233(const Field& field, std::uint64_t seed) {
  RingPtr ring = make_ring_n(field, 4, "x");
  for (int attempt = 0; attempt < 64; ++attempt) {
    Prng rng(seed + (std::uint64_t)attempt * 2654435761ULL);
    // 3 x 2 presentation matrix: first row quadrics, other rows linear
    auto random_form = [&](int deg) {
      std::vector<Term> terms;
      std::function<void(int, int, std::vector<int>&)> rec = [&](int pos, int left,
                                                                 std::vector<int>& exp) {
        if (pos == 3) {
          exp[3] = left;
          Coeff c = rng.coeff(field);
          if (!field.is_zero(c)) terms.push_back(Term{ring->monomial(exp), c});
          exp[3] = 0;
          return;
        }
        for (int e = 0; e <= left; ++e) {
          exp[pos] = e;
          rec(pos + 1, left - e, exp);
          exp[pos] = 0;
        }
      };
      std::vector<int> exp(4, 0);
      rec(0, deg, exp);
      return Polynomial::from_terms(ring, std::move(terms));
    };
    PolyMatrix mat(3);
    for (int c = 0; c < 2; ++c) mat[0].push_back(random_form(2));
    for (int r = 1; r < 3; ++r)
      for (int c = 0; c < 2; ++c) mat[r].push_back(random_form(1));
    std::vector<Polynomial> gens = minors(ring, mat, 2);
    CurveSpec spec;
    spec.ring = ring;
    spec.ideal = gens;
    spec.name = "quintic_233";
    spec.flags = {flag::reduced, flag::irreducible, flag::domain};
    try {
      CurveAnalysis an = analyze_curve(spec);
      if (an.dim != 2 || an.degree != 5 || !an.smooth || !an.acm) continue;
      std::vector<long long> a_shifts = an.res.shifts[1];
      std::sort(a_shifts.begin(), a_shifts.end());
      if (a_shifts != std::vector<long long>{2, 3, 3}) continue;
      FamilyCurve out;
      out.spec = std::move(spec);
      out.pred.d = 5;
      out.pred.p_a = 2;
      out.pred.tau = 0;
      out.pred.indeg = 1;  // a_1 + a_2 - 4
      return out;
    } catch (const std::exception&) {
      continue;
    }
  }
  throw std::runtime_error("no smooth (2,3,3) determinantal quintic found from the seed");
}

std::vector<SuiteEntry> builtin_suite(std::uint64_t seed) {
  Field f0 = Field::prime(32003);
  std::vector<SuiteEntry> out;
  out.push_back({family_rational_normal(3, f0), true});
  out.push_back({family_rational_normal(4, f0), false});
  out.push_back({fermat_plane(3, f0), false});
  out.push_back({fermat_plane(4, f0), false});
  out.push_back({fermat_plane(5, f0), false});
  out.push_back({nodal_cubic(f0), false});
  out.push_back({cuspidal_cubic(f0), false});
  out.push_back({triangle_cubic(f0), false});
  Field fb2 = Field::prime(suitable_prime_for_root_count(2));
  out.push_back({family_beauty(4, 2, fb2), true});
  Field fb3 = Field::prime(suitable_prime_for_root_count(3));
  out.push_back({family_beauty(4, 3, fb3), false});
  out.push_back({elliptic_quartic_ci(f0, seed), false});
  out.push_back({quintic_233(f0, seed), false});
  return out;
}

}  // namespace derkit

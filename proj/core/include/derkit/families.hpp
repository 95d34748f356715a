#pragma once

#include "derkit/derivations.hpp"

namespace derkit {

/// Closed-form values a family attaches to the curve it constructs, to be
/// verified against computation.
struct FamilyPrediction {
  std::optional<long long> d, p_a, p_g, tau, sigma, indeg, mu_der, mu_der_mod_euler;
  std::optional<long long> ncomponents;
  std::vector<Vec> der_generators;  // predicted derivation vectors
  std::optional<Vec> special_generator;
  std::vector<long long> local_semigroup;  // at each singular point
};

struct FamilyCurve {
  CurveSpec spec;
  FamilyPrediction pred;
};

/// Coordinate ring of the degree-n rational normal curve in P^n
/// (n+1 variables); the four degree-zero derivation generators are attached
/// as predictions.
FamilyCurve family_rational_normal(int n, const Field& field);

/// Determinantal family from the 2 x (n-1) matrix with linear first row and
/// degree-r second row that twists the last entry; singular exactly at the
/// r points (1:0:...:0:rho) with rho^r = -1.
FamilyCurve family_beauty(int n, int r, const Field& field);

/// Plane curve from one cubic-or-higher form; flags supplied by the caller.
FamilyCurve family_plane(const Polynomial& f, std::set<std::string> flags,
                         std::vector<ProjPoint> points = {});

/// Smallest prime >= start with p = 1 mod 2r, so x^r = -1 has exactly r
/// roots in F_p.
long long suitable_prime_for_root_count(int r, long long start = 32003);
std::vector<Coeff> roots_of_minus_one(const Field& field, int r);

}  // namespace derkit

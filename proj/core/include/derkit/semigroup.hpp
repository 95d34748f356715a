#pragma once

#include <vector>

namespace derkit {

/// Numerical semigroup generated by positive integers, with its gap set
/// computed exactly by a sieve. When gcd(gens) = g > 1 the data refers to the
/// semigroup divided by g; `gcd` records the factor.
struct NumericalSemigroup {
  std::vector<long long> gens;
  long long gcd = 1;
  std::vector<long long> gaps;  // of the gcd-reduced semigroup
  long long frobenius = -1;     // largest gap (-1 when there are none)
  long long conductor = 0;      // frobenius + 1
  long long delta = 0;          // number of gaps = local singularity degree
};

NumericalSemigroup semigroup_invariants(std::vector<long long> generators);

/// Tjurina number of the monomial-curve local ring attached to the
/// semigroup: (frobenius + largest-gap convention) a + 1 over the gcd.
long long tjurina_from_genus_lemma(const NumericalSemigroup& s);

/// Singularity degree of the local ring = number of gaps.
long long sigma_from_semigroup(const NumericalSemigroup& s);

}  // namespace derkit

#include "derkit/semigroup.hpp"

#include <numeric>
#include <stdexcept>

namespace derkit {

NumericalSemigroup semigroup_invariants(std::vector<long long> generators) {
  if (generators.empty()) throw std::invalid_argument("semigroup needs at least one generator");
  for (long long g : generators)
    if (g < 1) throw std::invalid_argument("semigroup generators must be positive");

  NumericalSemigroup s;
  s.gens = generators;
  long long g = 0;
  for (long long x : generators) g = std::gcd(g, x);
  s.gcd = g;
  std::vector<long long> red;
  for (long long x : generators) red.push_back(x / g);

  // sieve reachable sums up to a safe bound (Frobenius < min * max for gcd 1)
  long long mn = red.front(), mx = red.front();
  for (long long x : red) {
    mn = std::min(mn, x);
    mx = std::max(mx, x);
  }
  long long bound = mn * mx + mx + 1;
  std::vector<char> hit(bound + 1, 0);
  hit[0] = 1;
  for (long long v = 1; v <= bound; ++v) {
    for (long long x : red) {
      if (v - x >= 0 && hit[v - x]) {
        hit[v] = 1;
        break;
      }
    }
  }
  for (long long v = 1; v <= bound; ++v)
    if (!hit[v]) s.gaps.push_back(v);
  s.delta = (long long)s.gaps.size();
  s.frobenius = s.gaps.empty() ? -1 : s.gaps.back();
  s.conductor = s.frobenius + 1;
  return s;
}

long long tjurina_from_genus_lemma(const NumericalSemigroup& s) {
  // a-invariant of the graded local model is the Frobenius number of the
  // reduced semigroup; tau = (a + 1)/gcd evaluates on the reduced data
  return s.frobenius + 1;
}

long long sigma_from_semigroup(const NumericalSemigroup& s) { return s.delta; }

}  // namespace derkit

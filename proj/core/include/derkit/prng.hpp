#pragma once

#include <cstdint>

#include "derkit/scalar.hpp"

namespace derkit {

/// splitmix64: deterministic across platforms, seeded explicitly.
/// Every randomized routine in the library takes one of these by value or
/// reference so runs are reproducible from a recorded seed.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  Coeff coeff(const Field& f, long long span = 1000) {
    if (f.kind() == FieldKind::PrimeField) return f.from_int((long long)below((std::uint64_t)f.characteristic()));
    return f.from_int((long long)below((std::uint64_t)(2 * span + 1)) - span);
  }

  Coeff nonzero_coeff(const Field& f, long long span = 1000) {
    for (;;) {
      Coeff c = coeff(f, span);
      if (!f.is_zero(c)) return c;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace derkit

#pragma once

#include "derkit/bounds.hpp"

namespace derkit {

/// Built-in example curves with their verification options.
struct SuiteEntry {
  FamilyCurve fam;
  bool with_projection = false;
};

FamilyCurve nodal_cubic(const Field& field);
FamilyCurve cuspidal_cubic(const Field& field);
FamilyCurve fermat_plane(int d, const Field& field);
/// Three concurrent-free lines (a reduced, reducible plane cubic with three
/// nodes).
FamilyCurve triangle_cubic(const Field& field);

/// Smooth (2,2) complete intersection space curve, seeded-random with
/// smoothness verified; retries deterministically.
FamilyCurve elliptic_quartic_ci(const Field& field, std::uint64_t seed);
/// Smooth determinantal space quintic with generator degrees (2,3,3),
/// seeded-random with smoothness and the resolution shape verified.
FamilyCurve quintic_233(const Field& field, std::uint64_t seed);

/// The full verification battery: every built-in example plus projections.
std::vector<SuiteEntry> builtin_suite(std::uint64_t seed);

}  // namespace derkit

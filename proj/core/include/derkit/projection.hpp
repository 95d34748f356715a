#pragma once

#include "derkit/bounds.hpp"

namespace derkit {

/// Outcome of projecting a space curve to the plane through three seeded
/// general linear forms, with the degree-comparison record between the
/// curve's derivation numbers and the plane image's.
struct ProjectionResult {
  CurveSpec plane;
  Polynomial plane_poly;
  std::vector<ProjPoint> image_points;  // images of the supplied points
  std::uint64_t seed_used = 0;
  int retries = 0;

  long long a_plane = 0;
  long long a_curve = 0;
  long long indeg_plane = 0;
  long long findeg_plane = 0;
  long long indeg_curve = 0;
  long long findeg_curve = 0;

  BoundReport sandwich;  // GP_SANDWICH
};

/// Project to a plane curve by three general linear forms (genericity is
/// verified a posteriori: the contraction is principal of the same degree;
/// degenerate draws are reseeded a bounded number of times).
ProjectionResult general_projection(const CurveAnalysis& an, const DerivationModule& der,
                                    std::uint64_t seed);

}  // namespace derkit

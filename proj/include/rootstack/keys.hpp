#pragma once

#include <compare>

#include "rootstack/errors.hpp"

namespace rootstack {

// The target geometry: the projective plane rooted to order 2 along a
// smooth plane curve of degree delta >= 1.
//
// Cohomology classes are indexed 0..4 everywhere in this library:
//   0  unit class of the plane
//   1  hyperplane class
//   2  point class of the plane
//   3  unit of the twisted sector (the curve itself)
//   4  point class of the twisted sector
struct GeometryConfig {
  int delta;

  explicit GeometryConfig(int delta_) : delta(delta_) {
    if (delta < 1) throw UsageError("curve degree must be at least 1");
  }
};

// A genus-0 invariant of positive curve degree d with point insertions
// only: n2 plane points, n3 untwisted curve points, n4 twisted curve
// points.  Unit/hyperplane insertions reduce away and are handled by
// GeneralKey.
struct InvariantKey {
  int d, n2, n3, n4;

  InvariantKey(int d_, int n2_, int n3_, int n4_)
      : d(d_), n2(n2_), n3(n3_), n4(n4_) {
    if (d < 1) throw UsageError("curve degree of an invariant must be >= 1");
    if (n2 < 0 || n3 < 0 || n4 < 0)
      throw UsageError("insertion counts must be non-negative");
  }

  auto operator<=>(const InvariantKey&) const = default;
};

// An invariant in the full basis, allowing unit (n0) and hyperplane (n1)
// insertions and degree 0.  Degree 0 needs at least three insertions.
struct GeneralKey {
  int d, n0, n1, n2, n3, n4;

  GeneralKey(int d_, int n0_, int n1_, int n2_, int n3_, int n4_)
      : d(d_), n0(n0_), n1(n1_), n2(n2_), n3(n3_), n4(n4_) {
    if (d < 0) throw UsageError("curve degree must be non-negative");
    if (n0 < 0 || n1 < 0 || n2 < 0 || n3 < 0 || n4 < 0)
      throw UsageError("insertion counts must be non-negative");
    if (d == 0 && n0 + n1 + n2 + n3 + n4 < 3)
      throw UsageError("degree 0 requires at least three insertions");
  }

  auto operator<=>(const GeneralKey&) const = default;
};

}  // namespace rootstack

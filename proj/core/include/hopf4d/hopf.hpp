#pragma once

// Hopf map, spherical and Hopf coordinates, and fiber circles on the unit
// 3-sphere centered at the origin. The translated visualization frame lives
// in projection.hpp.

#include <cstddef>

#include "hopf4d/types.hpp"

namespace hopf4d {

/// h(z1, z2) = (Re(2 z1 conj z2), Im(2 z1 conj z2), |z1|^2 - |z2|^2).
/// Throws Error(NotOnSphere) when |p| differs from 1 by more than 1e-9.
Point3 hopf_map(const Point4& p);

/// (sin psi cos phi, sin psi sin phi, cos psi).
Point3 spherical_point(const BaseAngles& b) noexcept;

struct BaseAnglesResult {
  BaseAngles angles;
  /// Set when psi is 0 or pi; phi is then reported as 0.
  bool pole_degenerate = false;
};

/// Inverse of spherical_point. Throws Error(NotOnSphere).
BaseAnglesResult angles_from_base_point(const Point3& q);

/// (cos(psi/2) cos(phi+beta), cos(psi/2) sin(phi+beta), sin(psi/2) cos beta, sin(psi/2) sin beta).
Point4 fiber_point(const FiberParams& f) noexcept;

/// Unit circle through the origin-centered fiber of b with u = fiber_point(b, 0)
/// and v = fiber_point(b, pi/2), so that at(beta) == fiber_point(b, beta).
Circle4 fiber_circle(const BaseAngles& b) noexcept;

/// n vertices fiber_point(b, 2 pi k / n). Throws Error(BadSampleCount) for n < 3.
Polyline4 sample_fiber(const BaseAngles& b, std::size_t n = kDefaultFiberSamples);

/// The point opposite fiber_point(f) on the same fiber (beta + pi).
Point4 antipodal_point(const FiberParams& f) noexcept;

}  // namespace hopf4d

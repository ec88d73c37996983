#pragma once

// Double orthogonal projection (the conjugated Xi and Omega images) and the
// stereographic projection of the translated 3-sphere onto its tangent
// 3-space y = 0.

#include <array>

#include "hopf4d/types.hpp"

namespace hopf4d {

/// Placement of the 3-sphere used for drawing. The defaults put the sphere
/// at [0,1,0,1], project from N = [0,2,0,1] and touch the tangent 3-space
/// y = 0 at M = [0,0,0,1]. Stereographic images are reported in that
/// 3-space's (x, z, w) coordinates.
struct ViewFrame {
  Point4 sphere_center{0.0, 1.0, 0.0, 1.0};
  Point4 projection_center{0.0, 2.0, 0.0, 1.0};
  Point4 tangent_point{0.0, 0.0, 0.0, 1.0};

  /// Throws Error(InvalidArgument) unless N and M are antipodal points of the
  /// translated unit sphere and the tangent 3-space is y = M.y.
  void validate() const;
};

/// 2-sphere section of the translated 3-sphere by the 3-space w = w_level.
struct LatitudeSphere {
  Point3 center3;  // Xi image of the section's center
  double radius = 0.0;
  double w_level = 0.0;
};

struct SphereImage {
  Point3 center;  // (x, z, w)
  double radius = 0.0;
};

Point4 translate_to_view(const Point4& p, const ViewFrame& frame = {}) noexcept;

/// Xi image: (x, y, z).
constexpr Point3 xi_image(const Point4& p) noexcept { return {p.x, p.y, p.z}; }

/// Omega image in modeling coordinates: (x, -w, z).
constexpr Point3 omega_image(const Point4& p) noexcept { return {p.x, -p.w, p.z}; }

/// Intersects the ray from N through p with the tangent 3-space and returns
/// the (x, z, w) coordinates of the intersection. p is in the translated frame.
/// Throws Error(NotOnSphere) or Error(AtProjectionCenter).
Point3 stereographic_point(const Point4& p, const ViewFrame& frame = {});

/// Denominator 1 - cos(psi/2) sin(phi + beta) of the closed-form projection.
double stereographic_denominator(const FiberParams& f) noexcept;

/// Closed-form stereographic image of fiber_point(f) for the default frame.
/// Throws Error(SingularDenominator) when |D| <= 1e-9.
Point3 stereographic_closed_form(const FiberParams& f);

/// Section of the translated sphere through p parallel to the Xi 3-space.
/// Throws Error(NotOnSphere).
LatitudeSphere latitude_sphere_of(const Point4& p, const ViewFrame& frame = {});

/// Stereographic image of a latitude sphere. Throws Error(PassesThroughCenter)
/// when the section contains N (its image is then the plane w = N.w).
SphereImage stereographic_sphere_image(const LatitudeSphere& s, const ViewFrame& frame = {});

/// Lifts a point (x, z) of the plane y = 0 onto the base sphere (unit, center
/// [0,1,0], tangent to the plane at the origin) by inverse stereographic
/// projection from the antipode [0,2,0] of the tangency point. Returns the
/// lifted point in the translated Xi frame.
Point3 inverse_stereo_plane_to_base(std::array<double, 2> xz) noexcept;

/// Forward projection matching inverse_stereo_plane_to_base. The input is a
/// point of the translated base sphere other than [0,2,0].
std::array<double, 2> stereo_base_to_plane(const Point3& q);

}  // namespace hopf4d

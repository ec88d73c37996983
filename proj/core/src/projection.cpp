#include "hopf4d/projection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hopf4d/error.hpp"

namespace hopf4d {
namespace {

void require_on_view_sphere(const Point4& p, const ViewFrame& frame) {
  const double r = distance(p, frame.sphere_center);
  if (!std::isfinite(r) || std::abs(r - 1.0) > kInputTolerance) {
    throw Error(Errc::NotOnSphere,
                "point is at distance " + std::to_string(r) + " from the sphere center, expected 1");
  }
}

}  // namespace

void ViewFrame::validate() const {
  const Point4 n = projection_center - sphere_center;
  const Point4 m = tangent_point - sphere_center;
  if (std::abs(norm(n) - 1.0) > kIdentityTolerance || std::abs(norm(m) - 1.0) > kIdentityTolerance) {
    throw Error(Errc::InvalidArgument, "N and M must lie on the translated unit sphere");
  }
  if (norm(n + m) > kIdentityTolerance) {
    throw Error(Errc::InvalidArgument, "N and M must be antipodal");
  }
  if (std::abs(n.x) > kIdentityTolerance || std::abs(n.z) > kIdentityTolerance ||
      std::abs(n.w) > kIdentityTolerance) {
    throw Error(Errc::InvalidArgument, "the projection axis must be parallel to y");
  }
}

Point4 translate_to_view(const Point4& p, const ViewFrame& frame) noexcept {
  return p + frame.sphere_center;
}

Point3 stereographic_point(const Point4& p, const ViewFrame& frame) {
  require_on_view_sphere(p, frame);
  const Point4& n = frame.projection_center;
  const Point4 ray = p - n;
  if (norm(ray) < kInputTolerance) {
    throw Error(Errc::AtProjectionCenter, "the projection center has its image at infinity");
  }
  // Hyperplane through M with normal N - M.
  const Point4 normal = n - frame.tangent_point;
  const double t = dot(normal, frame.tangent_point - n) / dot(normal, ray);
  const Point4 hit = n + t * ray;
  return {hit.x, hit.z, hit.w};
}

double stereographic_denominator(const FiberParams& f) noexcept {
  return 1.0 - f.base.r_a() * std::sin(f.base.phi + f.beta);
}

Point3 stereographic_closed_form(const FiberParams& f) {
  const double d = stereographic_denominator(f);
  if (std::abs(d) <= kInputTolerance) {
    throw Error(Errc::SingularDenominator, "the fiber point coincides with the projection center");
  }
  const double ra = f.base.r_a();
  const double rb = f.base.r_b();
  return {2.0 * ra * std::cos(f.base.phi + f.beta) / d, 2.0 * rb * std::cos(f.beta) / d,
          2.0 * rb * std::sin(f.beta) / d + 1.0};
}

LatitudeSphere latitude_sphere_of(const Point4& p, const ViewFrame& frame) {
  require_on_view_sphere(p, frame);
  const double dw = p.w - frame.sphere_center.w;
  return {xi_image(frame.sphere_center), std::sqrt(std::max(0.0, 1.0 - dw * dw)), p.w};
}

SphereImage stereographic_sphere_image(const LatitudeSphere& s, const ViewFrame& frame) {
  if (std::abs(s.w_level - frame.projection_center.w) <= kInputTolerance) {
    throw Error(Errc::PassesThroughCenter,
                "the section contains the projection center; its image is the plane w = " +
                    std::to_string(frame.projection_center.w));
  }
  // The section and N share the mirror planes x = const and z = const, so the
  // image sphere is centered on the image of the line through the section's
  // center parallel to y; the two section points on that line map to the
  // ends of a diameter.
  const Point4 c{s.center3.x, s.center3.y, s.center3.z, s.w_level};
  const Point4 axis{0.0, 1.0, 0.0, 0.0};
  const Point3 a = stereographic_point(c + s.radius * axis, frame);
  const Point3 b = stereographic_point(c - s.radius * axis, frame);
  return {0.5 * (a + b), 0.5 * distance(a, b)};
}

Point3 inverse_stereo_plane_to_base(std::array<double, 2> xz) noexcept {
  const auto [x, z] = xz;
  // Ray from the pole S = (0,2,0) towards (x,0,z) meets the sphere at
  // S + t (P - S) with t = 4 / (x^2 + z^2 + 4).
  const double t = 4.0 / (x * x + z * z + 4.0);
  return {t * x, 2.0 - 2.0 * t, t * z};
}

std::array<double, 2> stereo_base_to_plane(const Point3& q) {
  const double h = 2.0 - q.y;
  if (h <= kIdentityTolerance) {
    throw Error(Errc::AtProjectionCenter, "the pole of the base sphere maps to infinity");
  }
  const double t = 2.0 / h;
  return {t * q.x, t * q.z};
}

}  // namespace hopf4d

#include "hopf4d/hopf.hpp"

#include <cmath>
#include <string>

#include "hopf4d/error.hpp"

namespace hopf4d {
namespace {

void require_unit(double length, const char* what) {
  if (!std::isfinite(length) || std::abs(length - 1.0) > kInputTolerance) {
    throw Error(Errc::NotOnSphere,
                std::string(what) + " has norm " + std::to_string(length) + ", expected 1");
  }
}

}  // namespace

Point3 hopf_map(const Point4& p) {
  require_unit(norm(p), "hopf_map input");
  const auto [z1, z2] = ComplexPair::from_point(p);
  // z1 * conj(z2)
  const double re = z1[0] * z2[0] + z1[1] * z2[1];
  const double im = z1[1] * z2[0] - z1[0] * z2[1];
  const double n1 = z1[0] * z1[0] + z1[1] * z1[1];
  const double n2 = z2[0] * z2[0] + z2[1] * z2[1];
  return {2.0 * re, 2.0 * im, n1 - n2};
}

Point3 spherical_point(const BaseAngles& b) noexcept {
  const double s = std::sin(b.psi);
  return {s * std::cos(b.phi), s * std::sin(b.phi), std::cos(b.psi)};
}

BaseAnglesResult angles_from_base_point(const Point3& q) {
  require_unit(norm(q), "base point");
  const double rho = std::hypot(q.x, q.y);
  if (rho <= 1e-14) {
    return {{0.0, q.z > 0.0 ? 0.0 : kPi}, true};
  }
  return {{reduce_angle(std::atan2(q.y, q.x)), std::atan2(rho, q.z)}, false};
}

Point4 fiber_point(const FiberParams& f) noexcept {
  const double ra = f.base.r_a();
  const double rb = f.base.r_b();
  const double alpha = f.base.phi + f.beta;
  return {ra * std::cos(alpha), ra * std::sin(alpha), rb * std::cos(f.beta), rb * std::sin(f.beta)};
}

Circle4 fiber_circle(const BaseAngles& b) noexcept {
  return {Point4{}, fiber_point({b, 0.0}), fiber_point({b, 0.5 * kPi}), 1.0};
}

Polyline4 sample_fiber(const BaseAngles& b, std::size_t n) {
  if (n < 3) {
    throw Error(Errc::BadSampleCount, "a fiber needs at least 3 samples, got " + std::to_string(n));
  }
  Polyline4 out;
  out.closed = true;
  out.vertices.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.vertices.push_back(fiber_point({b, kTwoPi * static_cast<double>(k) / static_cast<double>(n)}));
  }
  return out;
}

Point4 antipodal_point(const FiberParams& f) noexcept {
  return fiber_point({f.base, f.beta + kPi});
}

}  // namespace hopf4d

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace hopf4d {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Tolerance for validating that inputs lie on a unit sphere.
inline constexpr double kInputTolerance = 1e-9;
/// Tolerance for identities evaluated in a single step.
inline constexpr double kIdentityTolerance = 1e-12;

/// Default number of samples along a fiber.
inline constexpr std::size_t kDefaultFiberSamples = 256;

/// Reduces an angle to its representative in [0, 2pi).
double reduce_angle(double radians) noexcept;

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr Point3 operator+(const Point3& a, const Point3& b) noexcept {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr Point3 operator-(const Point3& a, const Point3& b) noexcept {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr Point3 operator-(const Point3& a) noexcept { return {-a.x, -a.y, -a.z}; }
  friend constexpr Point3 operator*(double s, const Point3& a) noexcept {
    return {s * a.x, s * a.y, s * a.z};
  }
  friend constexpr bool operator==(const Point3&, const Point3&) = default;

  [[nodiscard]] constexpr double operator[](std::size_t i) const noexcept {
    return i == 0 ? x : (i == 1 ? y : z);
  }
  static constexpr std::size_t size() noexcept { return 3; }
};

struct Point4 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double w = 0.0;

  friend constexpr Point4 operator+(const Point4& a, const Point4& b) noexcept {
    return {a.x + b.x, a.y + b.y, a.z + b.z, a.w + b.w};
  }
  friend constexpr Point4 operator-(const Point4& a, const Point4& b) noexcept {
    return {a.x - b.x, a.y - b.y, a.z - b.z, a.w - b.w};
  }
  friend constexpr Point4 operator-(const Point4& a) noexcept { return {-a.x, -a.y, -a.z, -a.w}; }
  friend constexpr Point4 operator*(double s, const Point4& a) noexcept {
    return {s * a.x, s * a.y, s * a.z, s * a.w};
  }
  friend constexpr bool operator==(const Point4&, const Point4&) = default;

  [[nodiscard]] constexpr double operator[](std::size_t i) const noexcept {
    return i == 0 ? x : (i == 1 ? y : (i == 2 ? z : w));
  }
  static constexpr std::size_t size() noexcept { return 4; }
};

constexpr double dot(const Point3& a, const Point3& b) noexcept {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
constexpr double dot(const Point4& a, const Point4& b) noexcept {
  return a.x * b.x + a.y * b.y + a.z * b.z + a.w * b.w;
}
constexpr Point3 cross(const Point3& a, const Point3& b) noexcept {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Point3& a) noexcept { return std::sqrt(dot(a, a)); }
inline double norm(const Point4& a) noexcept { return std::sqrt(dot(a, a)); }
inline double distance(const Point3& a, const Point3& b) noexcept { return norm(a - b); }
inline double distance(const Point4& a, const Point4& b) noexcept { return norm(a - b); }

inline bool is_finite(const Point3& p) noexcept {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}
inline bool is_finite(const Point4& p) noexcept {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z) && std::isfinite(p.w);
}

/// A point of R^4 viewed as (z1, z2) = (x + iy, z + iw).
struct ComplexPair {
  std::array<double, 2> z1{};  // re, im
  std::array<double, 2> z2{};

  static constexpr ComplexPair from_point(const Point4& p) noexcept {
    return {{p.x, p.y}, {p.z, p.w}};
  }
  [[nodiscard]] constexpr Point4 to_point() const noexcept { return {z1[0], z1[1], z2[0], z2[1]}; }
  friend constexpr bool operator==(const ComplexPair&, const ComplexPair&) = default;
};

/// Spherical coordinates of a point on the base 2-sphere.
/// phi is the azimuth in [0, 2pi), psi the polar angle from +z in [0, pi].
struct BaseAngles {
  double phi = 0.0;
  double psi = 0.0;

  /// Reduces phi mod 2pi and validates psi; throws Error(InvalidArgument)
  /// when psi is outside [0, pi] or either angle is not finite.
  static BaseAngles make(double phi, double psi);

  [[nodiscard]] double gamma() const noexcept { return 0.5 * psi; }
  /// Modulus of z1 on the fiber.
  [[nodiscard]] double r_a() const noexcept { return std::cos(gamma()); }
  /// Modulus of z2 on the fiber.
  [[nodiscard]] double r_b() const noexcept { return std::sin(gamma()); }

  friend constexpr bool operator==(const BaseAngles&, const BaseAngles&) = default;
};

/// Hopf coordinates of a point on the unit 3-sphere.
struct FiberParams {
  BaseAngles base;
  double beta = 0.0;

  static FiberParams make(double phi, double psi, double beta);

  /// Argument of z1, phi + beta reduced to [0, 2pi).
  [[nodiscard]] double alpha() const noexcept { return reduce_angle(base.phi + beta); }

  friend constexpr bool operator==(const FiberParams&, const FiberParams&) = default;
};

/// Circle in R^4: p(t) = center + radius * (cos t * u + sin t * v).
struct Circle4 {
  Point4 center;
  Point4 u;
  Point4 v;
  double radius = 1.0;

  [[nodiscard]] Point4 at(double t) const noexcept {
    return center + radius * (std::cos(t) * u + std::sin(t) * v);
  }
};

template <class P>
struct Polyline {
  std::vector<P> vertices;
  bool closed = false;

  [[nodiscard]] std::size_t size() const noexcept { return vertices.size(); }
  /// Number of edges, counting last->first when closed.
  [[nodiscard]] std::size_t edge_count() const noexcept {
    if (vertices.size() < 2) return 0;
    return closed ? vertices.size() : vertices.size() - 1;
  }
};

using Polyline3 = Polyline<Point3>;
using Polyline4 = Polyline<Point4>;

}  // namespace hopf4d

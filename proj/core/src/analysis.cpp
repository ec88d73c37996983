#include "hopf4d/analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hopf4d/error.hpp"

namespace hopf4d {
namespace {

// Relative eigenvalue floor below which a spread direction counts as empty.
constexpr double kFlatRatio = 1e-20;
constexpr double kTooClose = 1e-6;
constexpr double kLinkingGate = 0.05;

Eigen::Vector3d to_eigen(const Point3& p) { return {p.x, p.y, p.z}; }
Point3 to_point(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }

struct Circle2 {
  double cx = 0.0;
  double cy = 0.0;
  double r = 0.0;
};

// Algebraic fit of x^2 + y^2 + D x + E y + F = 0 followed by one Gauss-Newton
// step on the geometric residuals |p - c| - r. Coordinates should be centered
// and of unit scale. Returns nullopt when the points are collinear.
std::optional<Circle2> fit_circle_2d(const Eigen::MatrixX2d& pts) {
  const Eigen::Index n = pts.rows();
  Eigen::Matrix2d cov = pts.transpose() * pts / static_cast<double>(n);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(cov);
  if (!(es.eigenvalues()(1) > 0.0) || es.eigenvalues()(0) <= kFlatRatio * es.eigenvalues()(1)) {
    return std::nullopt;
  }

  Eigen::MatrixXd a(n, 3);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = pts(i, 0);
    const double y = pts(i, 1);
    a(i, 0) = x;
    a(i, 1) = y;
    a(i, 2) = 1.0;
    b(i) = -(x * x + y * y);
  }
  const Eigen::Vector3d def = a.colPivHouseholderQr().solve(b);
  Circle2 c{-0.5 * def(0), -0.5 * def(1), 0.0};
  c.r = std::sqrt(std::max(0.0, c.cx * c.cx + c.cy * c.cy - def(2)));

  Eigen::MatrixXd jac(n, 3);
  Eigen::VectorXd res(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double dx = pts(i, 0) - c.cx;
    const double dy = pts(i, 1) - c.cy;
    const double d = std::hypot(dx, dy);
    if (d == 0.0) return c;  // a sample sits on the center; keep the algebraic estimate
    jac(i, 0) = -dx / d;
    jac(i, 1) = -dy / d;
    jac(i, 2) = -1.0;
    res(i) = d - c.r;
  }
  const Eigen::Vector3d step = jac.colPivHouseholderQr().solve(-res);
  if (step.allFinite()) {
    c.cx += step(0);
    c.cy += step(1);
    c.r += step(2);
  }
  return c;
}

template <class P>
double segment_distance_impl(const P& p0, const P& p1, const P& q0, const P& q1) {
  const P d1 = p1 - p0;
  const P d2 = q1 - q0;
  const P r = p0 - q0;
  const double a = dot(d1, d1);
  const double e = dot(d2, d2);
  const double f = dot(d2, r);
  constexpr double tiny = std::numeric_limits<double>::min();
  double s = 0.0;
  double t = 0.0;
  if (a <= tiny && e <= tiny) return norm(r);
  if (a <= tiny) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    const double c = dot(d1, r);
    if (e <= tiny) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      const double b = dot(d1, d2);
      const double denom = a * e - b * b;
      s = denom > 0.0 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  return norm((p0 + s * d1) - (q0 + t * d2));
}

template <class P>
double min_distance_impl(const Polyline<P>& a, const Polyline<P>& b) {
  if (a.vertices.empty() || b.vertices.empty()) {
    throw Error(Errc::DegenerateInput, "min_distance needs non-empty polylines");
  }
  const std::size_t na = std::max<std::size_t>(a.edge_count(), 1);
  const std::size_t nb = std::max<std::size_t>(b.edge_count(), 1);
  const auto& va = a.vertices;
  const auto& vb = b.vertices;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < na; ++i) {
    const P& a0 = va[i];
    const P& a1 = va[(i + 1) % va.size()];
    for (std::size_t j = 0; j < nb; ++j) {
      best = std::min(best, segment_distance_impl(a0, a1, vb[j], vb[(j + 1) % vb.size()]));
    }
  }
  return best;
}

Point3 unit_or_zero(const Point3& v) {
  const double n = norm(v);
  return n > 0.0 ? (1.0 / n) * v : Point3{};
}

double safe_asin(double x) { return std::asin(std::clamp(x, -1.0, 1.0)); }

// Signed solid angle subtended by segment pair (p1->p2, p3->p4); the sum over
// all pairs divided by 4 pi is the linking number of two closed polygons.
double segment_pair_solid_angle(const Point3& p1, const Point3& p2, const Point3& p3,
                                const Point3& p4) {
  const Point3 r13 = p3 - p1;
  const Point3 r14 = p4 - p1;
  const Point3 r23 = p3 - p2;
  const Point3 r24 = p4 - p2;
  const Point3 n1 = unit_or_zero(cross(r13, r14));
  const Point3 n2 = unit_or_zero(cross(r14, r24));
  const Point3 n3 = unit_or_zero(cross(r24, r23));
  const Point3 n4 = unit_or_zero(cross(r23, r13));
  const double omega = safe_asin(dot(n1, n2)) + safe_asin(dot(n2, n3)) + safe_asin(dot(n3, n4)) +
                       safe_asin(dot(n4, n1));
  const double orientation = dot(cross(p4 - p3, p2 - p1), r13);
  if (orientation > 0.0) return omega;
  if (orientation < 0.0) return -omega;
  return 0.0;
}

}  // namespace

CircleFit fit_circle(std::span<const Point3> points) {
  if (points.size() < 3) {
    throw Error(Errc::CollinearInput, "a circle fit needs at least 3 points");
  }
  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
  for (const auto& p : points) centroid += to_eigen(p);
  centroid /= static_cast<double>(points.size());
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (const auto& p : points) {
    const Eigen::Vector3d d = to_eigen(p) - centroid;
    cov += d * d.transpose();
  }
  cov /= static_cast<double>(points.size());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(cov);
  const Eigen::Vector3d evals = es.eigenvalues();
  if (!(evals(2) > 0.0) || evals(1) <= kFlatRatio * evals(2)) {
    throw Error(Errc::CollinearInput, "points are collinear");
  }
  const Eigen::Vector3d normal = es.eigenvectors().col(0).normalized();
  const Eigen::Vector3d e1 = es.eigenvectors().col(2).normalized();
  const Eigen::Vector3d e2 = normal.cross(e1).normalized();
  const double scale = std::sqrt(evals(2));

  Eigen::MatrixX2d local(static_cast<Eigen::Index>(points.size()), 2);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Eigen::Vector3d d = (to_eigen(points[i]) - centroid) / scale;
    local(static_cast<Eigen::Index>(i), 0) = d.dot(e1);
    local(static_cast<Eigen::Index>(i), 1) = d.dot(e2);
  }
  const auto c2 = fit_circle_2d(local);
  if (!c2) throw Error(Errc::CollinearInput, "points are collinear");

  CircleFit fit;
  fit.center = to_point(centroid + scale * (c2->cx * e1 + c2->cy * e2));
  fit.radius = scale * c2->r;
  fit.normal = to_point(normal);
  double sum_sq = 0.0;
  for (const auto& p : points) {
    const Point3 d = p - fit.center;
    const double h = dot(d, fit.normal);
    const Point3 in_plane = d - h * fit.normal;
    const double dev = std::abs(norm(in_plane) - fit.radius) + std::abs(h);
    sum_sq += dev * dev;
    fit.max_dev = std::max(fit.max_dev, dev);
  }
  fit.rms = std::sqrt(sum_sq / static_cast<double>(points.size()));
  return fit;
}

double collinearity_deviation(std::span<const Point3> points) {
  if (points.size() < 2) return 0.0;
  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
  for (const auto& p : points) centroid += to_eigen(p);
  centroid /= static_cast<double>(points.size());
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (const auto& p : points) {
    const Eigen::Vector3d d = to_eigen(p) - centroid;
    cov += d * d.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(cov);
  const Eigen::Vector3d dir = es.eigenvectors().col(2).normalized();
  double worst = 0.0;
  for (const auto& p : points) {
    const Eigen::Vector3d d = to_eigen(p) - centroid;
    worst = std::max(worst, (d - d.dot(dir) * dir).norm());
  }
  return worst;
}

LinkingResult linking_number(const Polyline3& a, const Polyline3& b) {
  if (!a.closed || !b.closed || a.size() < 3 || b.size() < 3) {
    throw Error(Errc::DegenerateInput, "linking number needs two closed polylines of >= 3 vertices");
  }
  const double gap = min_distance(a, b);
  if (gap < kTooClose) {
    throw Error(Errc::CurvesTooClose, "curves are " + std::to_string(gap) + " apart");
  }
  const auto& va = a.vertices;
  const auto& vb = b.vertices;
  double total = 0.0;
  for (std::size_t i = 0; i < va.size(); ++i) {
    const Point3& a0 = va[i];
    const Point3& a1 = va[(i + 1) % va.size()];
    for (std::size_t j = 0; j < vb.size(); ++j) {
      total += segment_pair_solid_angle(a0, a1, vb[j], vb[(j + 1) % vb.size()]);
    }
  }
  const double lk = total / (4.0 * kPi);
  const double rounded = std::round(lk);
  LinkingResult out{static_cast<int>(rounded), lk - rounded};
  if (!(std::abs(out.residual) < kLinkingGate)) {
    throw Error(Errc::LinkingUnresolved,
                "Gauss sum " + std::to_string(lk) + " is not close to an integer");
  }
  return out;
}

double min_distance(const Polyline3& a, const Polyline3& b) { return min_distance_impl(a, b); }
double min_distance(const Polyline4& a, const Polyline4& b) { return min_distance_impl(a, b); }

double min_distance(const AnyPolyline& a, const AnyPolyline& b) {
  if (a.index() != b.index()) {
    throw Error(Errc::DimensionMismatch, "cannot compare a 3D polyline with a 4D polyline");
  }
  return std::visit(
      [&b](const auto& lhs) {
        using T = std::decay_t<decltype(lhs)>;
        return min_distance(lhs, std::get<T>(b));
      },
      a);
}

CylinderFit fit_cylinder(std::span<const Point3> points, const Point3& axis_hint) {
  if (points.size() < 6) throw Error(Errc::DegenerateInput, "a cylinder fit needs at least 6 points");
  const double hint_len = norm(axis_hint);
  if (!(hint_len > 0.0) || !std::isfinite(hint_len)) {
    throw Error(Errc::DegenerateInput, "axis hint must be a nonzero vector");
  }
  const Eigen::Vector3d dir = to_eigen(axis_hint) / hint_len;
  Eigen::Vector3d seed = std::abs(dir.x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
  const Eigen::Vector3d e1 = (seed - seed.dot(dir) * dir).normalized();
  const Eigen::Vector3d e2 = dir.cross(e1);

  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
  for (const auto& p : points) centroid += to_eigen(p);
  centroid /= static_cast<double>(points.size());

  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixX2d local(n, 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Vector3d d = to_eigen(points[static_cast<std::size_t>(i)]) - centroid;
    local(i, 0) = d.dot(e1);
    local(i, 1) = d.dot(e2);
  }
  const double scale = std::sqrt(local.squaredNorm() / static_cast<double>(n));
  if (!(scale > 0.0)) throw Error(Errc::DegenerateInput, "points project to a single point");
  local /= scale;
  const auto c2 = fit_circle_2d(local);
  if (!c2) throw Error(Errc::DegenerateInput, "projected points are collinear");

  CylinderFit fit;
  fit.axis_point = to_point(centroid + scale * (c2->cx * e1 + c2->cy * e2));
  fit.axis_dir = to_point(dir);
  fit.radius = scale * c2->r;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double dev = std::abs(scale * std::hypot(local(i, 0) - c2->cx, local(i, 1) - c2->cy) - fit.radius);
    fit.max_dev = std::max(fit.max_dev, dev);
  }
  return fit;
}

double segment_distance(const Point3& p0, const Point3& p1, const Point3& q0, const Point3& q1) {
  return segment_distance_impl(p0, p1, q0, q1);
}
double segment_distance(const Point4& p0, const Point4& p1, const Point4& q0, const Point4& q1) {
  return segment_distance_impl(p0, p1, q0, q1);
}

}  // namespace hopf4d

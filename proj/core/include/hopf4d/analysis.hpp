#pragma once

// Numerical checks used to verify geometric claims: circle and cylinder
// fits, collinearity, curve-to-curve distance and linking numbers.

#include <span>
#include <variant>

#include "hopf4d/types.hpp"

namespace hopf4d {

struct CircleFit {
  Point3 center;
  double radius = 0.0;
  Point3 normal;
  double rms = 0.0;
  double max_dev = 0.0;
};

struct CylinderFit {
  Point3 axis_point;
  Point3 axis_dir;
  double radius = 0.0;
  double max_dev = 0.0;
};

struct LinkingResult {
  int value = 0;
  /// Unrounded Gauss sum minus value.
  double residual = 0.0;
};

/// Least-squares plane, algebraic circle in that plane, then one geometric
/// Gauss-Newton step. The deviation of a point is its in-plane radial error
/// plus its distance from the plane. Throws Error(CollinearInput).
CircleFit fit_circle(std::span<const Point3> points);
inline CircleFit fit_circle(const Polyline3& line) { return fit_circle(line.vertices); }

/// Maximum distance from the principal line through the centroid.
double collinearity_deviation(std::span<const Point3> points);
inline double collinearity_deviation(const Polyline3& line) {
  return collinearity_deviation(line.vertices);
}

/// Gauss linking number of two closed polylines, computed exactly per
/// segment pair from the signed solid angle of the two segments.
/// Throws Error(CurvesTooClose) when the curves come within 1e-6 and
/// Error(LinkingUnresolved) when the sum is not within 0.05 of an integer.
LinkingResult linking_number(const Polyline3& a, const Polyline3& b);

/// Minimum distance between two polylines over all segment pairs.
double min_distance(const Polyline3& a, const Polyline3& b);
double min_distance(const Polyline4& a, const Polyline4& b);

using AnyPolyline = std::variant<Polyline3, Polyline4>;
/// Throws Error(DimensionMismatch) when a and b live in different spaces.
double min_distance(const AnyPolyline& a, const AnyPolyline& b);

/// Fits a circular cylinder whose axis is parallel to axis_hint.
/// Throws Error(DegenerateInput) for fewer than 6 points, a zero hint, or
/// points whose projections along the hint are collinear.
CylinderFit fit_cylinder(std::span<const Point3> points, const Point3& axis_hint);

/// Closest distance between segments [p0,p1] and [q0,q1] in any dimension.
double segment_distance(const Point3& p0, const Point3& p1, const Point3& q0, const Point3& q1);
double segment_distance(const Point4& p0, const Point4& p1, const Point4& q0, const Point4& q1);

}  // namespace hopf4d

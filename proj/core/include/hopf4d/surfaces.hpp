#pragma once

// Surfaces swept by Hopf fibers: the tori over circles of the base sphere,
// nested families of them, and cyclic surfaces over arbitrary base curves.
//
// Grid layout: u is the fiber parameter beta' (column index i), v the
// parameter along the base curve (row index j); vertex index = j * n_u + i,
// so every row is one sampled fiber.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "hopf4d/types.hpp"

namespace hopf4d {

enum class Space { base, xi, omega, stereo };

std::string_view to_string(Space space) noexcept;

struct Interval {
  double lo = 0.0;
  double hi = kTwoPi;
};

struct ParamGrid {
  std::size_t n_u = 96;
  std::size_t n_v = 96;
  Interval u_range{0.0, kTwoPi};
  Interval v_range{0.0, kTwoPi};
  bool closed_u = true;
  bool closed_v = true;

  /// beta' and phi' both over [0, 2pi), wrapping.
  static ParamGrid torus(std::size_t n_u = 96, std::size_t n_v = 96);
  /// beta' over [0, 2pi) wrapping, psi' over [0, pi] inclusive.
  static ParamGrid meridian(std::size_t n_u = 96, std::size_t n_v = 96);

  /// A closed direction samples [lo, hi) with step (hi-lo)/n; an open one
  /// samples [lo, hi] with step (hi-lo)/(n-1).
  [[nodiscard]] double u_at(std::size_t i) const noexcept;
  [[nodiscard]] double v_at(std::size_t j) const noexcept;
  [[nodiscard]] std::size_t vertex_count() const noexcept { return n_u * n_v; }

  /// Throws Error(BadSampleCount) when n_u or n_v < 3, Error(InvalidArgument)
  /// for empty or non-finite ranges.
  void validate() const;
};

using Quad = std::array<std::uint32_t, 4>;

struct SurfaceMesh {
  Space space = Space::xi;
  std::vector<Point3> vertices;
  std::vector<Quad> quads;
  /// Grid index of each vertex when vertices were dropped; empty means the
  /// identity mapping.
  std::vector<std::size_t> source_index;
};

/// Quads of a grid, wrapping in closed directions.
std::vector<Quad> grid_quads(const ParamGrid& grid);

/// A surface made of sampled fibers, with its conjugated images.
struct FiberSurface {
  ParamGrid grid;
  std::vector<FiberParams> params;  // per grid vertex
  std::vector<Point4> points4;      // untranslated, per grid vertex
  SurfaceMesh xi;
  SurfaceMesh omega;

  /// The fiber sampled in row j (closed polyline over the u samples when u wraps).
  [[nodiscard]] Polyline4 row(std::size_t j) const;
};

/// Torus over the circle of the base sphere at polar angle psi:
/// (beta', phi') -> fiber_point(phi', psi, beta'). Throws Error(DegenerateTorus)
/// for psi at 0 or pi.
FiberSurface torus_kappa(double psi, const ParamGrid& grid = ParamGrid::torus());

/// Torus over the meridian at azimuth phi: (beta', psi') -> fiber_point(phi, psi', beta').
FiberSurface torus_mu(double phi, const ParamGrid& grid = ParamGrid::meridian());

/// Stereographic image of a fiber surface in the default view frame. Vertices
/// with |D| <= 1e-6 are dropped along with every face touching them.
SurfaceMesh torus_stereo(const FiberSurface& surface);

inline constexpr double kStereoMask = 1e-6;

/// Display window for beta' used with the nested xy family.
inline constexpr Interval kNestedXyBetaWindow{kPi / 6.0, 1.5 * kPi};

struct NestedFamily {
  std::vector<double> angles;  // psi (xy family) or phi (z family) per torus
  std::vector<FiberSurface> tori;
  /// Degenerate members of the xy family: the fibers over the poles.
  std::vector<BaseAngles> circle_bases;
  std::vector<Polyline4> circles;
};

/// Tori at psi = k pi / count for k = 1..count-1 plus the pole fibers.
/// Throws Error(BadCount) for count < 2.
NestedFamily nested_family_xy(std::size_t count = 12, const ParamGrid& grid = ParamGrid::torus());

/// Tori at phi = k pi / count for k = 0..count. Throws Error(BadCount).
NestedFamily nested_family_z(std::size_t count = 6, const ParamGrid& grid = ParamGrid::meridian());

/// Ordered samples of a curve on the base sphere.
struct BaseCurve {
  std::vector<BaseAngles> samples;
  bool closed = false;
};

/// Largest angular step allowed between consecutive samples after resampling.
inline constexpr double kMaxCurveStep = kPi / 8.0;

/// Redistributes samples uniformly by arc length, keeping the first sample
/// (and the last one for open curves). The sample count never decreases and
/// grows until every step is below kMaxCurveStep. Throws Error(InvalidArgument)
/// for fewer than 3 samples.
BaseCurve resample_uniform(const BaseCurve& curve);

struct CurveLift {
  BaseCurve curve;  // the resampled curve the rows follow
  FiberSurface surface;
  SurfaceMesh stereo;
};

/// Cyclic surface swept by the fibers of the curve's samples.
CurveLift lift_base_curve(const BaseCurve& curve, std::size_t n_beta = 96);

/// Arc of a circle in the (x, z) plane: center + radius * (cos t, sin t) for
/// t from start to start + sweep.
struct PlanarArc {
  std::array<double, 2> center{};
  double radius = 1.0;
  double start = 0.0;
  double sweep = kTwoPi;

  [[nodiscard]] std::array<double, 2> at(double fraction) const noexcept;
  [[nodiscard]] std::array<double, 2> start_point() const noexcept { return at(0.0); }
  [[nodiscard]] std::array<double, 2> end_point() const noexcept { return at(1.0); }
};

struct ArcsShape {
  BaseCurve base_curve;  // all arcs lifted to the base sphere, in order
  std::vector<CurveLift> parts;
  /// Fibers over the arc junctions, each shared by two adjacent parts.
  std::vector<BaseAngles> junctions;
};

/// Lifts a chain of planar arcs to the base sphere and sweeps one cyclic
/// surface per arc. A single arc whose ends meet is treated as a closed
/// curve. Throws Error(DisconnectedArcs) when consecutive arcs do not meet
/// within 1e-9.
ArcsShape arcs_shape_pipeline(const std::vector<PlanarArc>& arcs, std::size_t samples_per_arc = 64,
                              std::size_t n_beta = 96);

}  // namespace hopf4d

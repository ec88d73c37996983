#include "hopf4d/surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "hopf4d/error.hpp"
#include "hopf4d/hopf.hpp"
#include "hopf4d/projection.hpp"

namespace hopf4d {
namespace {

constexpr double kPoleGuard = 1e-12;
constexpr double kArcGap = 1e-9;

FiberSurface build_surface(const ParamGrid& grid,
                           const std::function<FiberParams(double u, double v)>& param_at) {
  grid.validate();
  FiberSurface s;
  s.grid = grid;
  const std::size_t n = grid.vertex_count();
  s.params.reserve(n);
  s.points4.reserve(n);
  s.xi.space = Space::xi;
  s.omega.space = Space::omega;
  s.xi.vertices.reserve(n);
  s.omega.vertices.reserve(n);
  const ViewFrame frame;
  for (std::size_t j = 0; j < grid.n_v; ++j) {
    const double v = grid.v_at(j);
    for (std::size_t i = 0; i < grid.n_u; ++i) {
      const FiberParams f = param_at(grid.u_at(i), v);
      const Point4 p = fiber_point(f);
      const Point4 shown = translate_to_view(p, frame);
      s.params.push_back(f);
      s.points4.push_back(p);
      s.xi.vertices.push_back(xi_image(shown));
      s.omega.vertices.push_back(omega_image(shown));
    }
  }
  s.xi.quads = grid_quads(grid);
  s.omega.quads = s.xi.quads;
  return s;
}

Point3 unit_vector(const BaseAngles& b) { return spherical_point(b); }

BaseAngles angles_of(const Point3& q) {
  return angles_from_base_point((1.0 / norm(q)) * q).angles;
}

double arc_angle(const Point3& a, const Point3& b) { return std::atan2(norm(cross(a, b)), dot(a, b)); }

Point3 slerp(const Point3& a, const Point3& b, double theta, double t) {
  if (theta < 1e-9) {
    const Point3 p = (1.0 - t) * a + t * b;
    return (1.0 / norm(p)) * p;
  }
  const double s = std::sin(theta);
  return (std::sin((1.0 - t) * theta) / s) * a + (std::sin(t * theta) / s) * b;
}

BaseAngles lift_plane_point(std::array<double, 2> xz) {
  const Point3 q = inverse_stereo_plane_to_base(xz) - Point3{0.0, 1.0, 0.0};
  return angles_of(q);
}

double plane_gap(std::array<double, 2> a, std::array<double, 2> b) {
  return std::hypot(a[0] - b[0], a[1] - b[1]);
}

}  // namespace

std::string_view to_string(Space space) noexcept {
  switch (space) {
    case Space::base: return "base";
    case Space::xi: return "xi";
    case Space::omega: return "omega";
    case Space::stereo: return "stereo";
  }
  return "unknown";
}

ParamGrid ParamGrid::torus(std::size_t n_u, std::size_t n_v) {
  return {n_u, n_v, {0.0, kTwoPi}, {0.0, kTwoPi}, true, true};
}

ParamGrid ParamGrid::meridian(std::size_t n_u, std::size_t n_v) {
  return {n_u, n_v, {0.0, kTwoPi}, {0.0, kPi}, true, false};
}

double ParamGrid::u_at(std::size_t i) const noexcept {
  const double span = u_range.hi - u_range.lo;
  const double steps = closed_u ? static_cast<double>(n_u) : static_cast<double>(n_u - 1);
  return u_range.lo + span * static_cast<double>(i) / steps;
}

double ParamGrid::v_at(std::size_t j) const noexcept {
  const double span = v_range.hi - v_range.lo;
  const double steps = closed_v ? static_cast<double>(n_v) : static_cast<double>(n_v - 1);
  return v_range.lo + span * static_cast<double>(j) / steps;
}

void ParamGrid::validate() const {
  if (n_u < 3 || n_v < 3) {
    throw Error(Errc::BadSampleCount, "grid needs at least 3x3 samples, got " + std::to_string(n_u) +
                                          "x" + std::to_string(n_v));
  }
  if (n_u * n_v > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(Errc::InvalidArgument, "grid is too large for 32-bit indices");
  }
  for (const Interval& r : {u_range, v_range}) {
    if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || !(r.hi > r.lo)) {
      throw Error(Errc::InvalidArgument, "grid ranges must be finite and non-empty");
    }
  }
}

std::vector<Quad> grid_quads(const ParamGrid& grid) {
  const std::size_t cu = grid.closed_u ? grid.n_u : grid.n_u - 1;
  const std::size_t cv = grid.closed_v ? grid.n_v : grid.n_v - 1;
  std::vector<Quad> quads;
  quads.reserve(cu * cv);
  const auto index = [&grid](std::size_t i, std::size_t j) {
    return static_cast<std::uint32_t>((j % grid.n_v) * grid.n_u + (i % grid.n_u));
  };
  for (std::size_t j = 0; j < cv; ++j) {
    for (std::size_t i = 0; i < cu; ++i) {
      quads.push_back({index(i, j), index(i + 1, j), index(i + 1, j + 1), index(i, j + 1)});
    }
  }
  return quads;
}

Polyline4 FiberSurface::row(std::size_t j) const {
  Polyline4 out;
  out.closed = grid.closed_u;
  const auto first = points4.begin() + static_cast<std::ptrdiff_t>(j * grid.n_u);
  out.vertices.assign(first, first + static_cast<std::ptrdiff_t>(grid.n_u));
  return out;
}

FiberSurface torus_kappa(double psi, const ParamGrid& grid) {
  if (!std::isfinite(psi) || psi < 0.0 || psi > kPi) {
    throw Error(Errc::InvalidArgument, "psi must lie in [0, pi]");
  }
  if (psi <= kPoleGuard || psi >= kPi - kPoleGuard) {
    throw Error(Errc::DegenerateTorus, "the circle at psi = " + std::to_string(psi) +
                                           " is a pole; its torus collapses to one fiber");
  }
  return build_surface(grid, [psi](double beta, double phi) {
    return FiberParams{{reduce_angle(phi), psi}, reduce_angle(beta)};
  });
}

FiberSurface torus_mu(double phi, const ParamGrid& grid) {
  if (!std::isfinite(phi)) throw Error(Errc::InvalidArgument, "phi must be finite");
  const double azimuth = reduce_angle(phi);
  return build_surface(grid, [azimuth](double beta, double psi) {
    return FiberParams{{azimuth, std::clamp(psi, 0.0, kPi)}, reduce_angle(beta)};
  });
}

SurfaceMesh torus_stereo(const FiberSurface& surface) {
  SurfaceMesh out;
  out.space = Space::stereo;
  const std::size_t n = surface.params.size();
  constexpr auto kDropped = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> remap(n, kDropped);
  bool any_dropped = false;
  for (std::size_t k = 0; k < n; ++k) {
    const FiberParams& f = surface.params[k];
    if (std::abs(stereographic_denominator(f)) <= kStereoMask) {
      any_dropped = true;
      continue;
    }
    remap[k] = static_cast<std::uint32_t>(out.vertices.size());
    out.vertices.push_back(stereographic_closed_form(f));
    out.source_index.push_back(k);
  }
  const auto quads = grid_quads(surface.grid);
  out.quads.reserve(quads.size());
  for (const Quad& q : quads) {
    if (std::any_of(q.begin(), q.end(), [&](std::uint32_t v) { return remap[v] == kDropped; })) {
      continue;
    }
    out.quads.push_back({remap[q[0]], remap[q[1]], remap[q[2]], remap[q[3]]});
  }
  if (!any_dropped) out.source_index.clear();
  return out;
}

NestedFamily nested_family_xy(std::size_t count, const ParamGrid& grid) {
  if (count < 2) throw Error(Errc::BadCount, "a nested family needs count >= 2");
  grid.validate();
  NestedFamily fam;
  for (std::size_t k = 1; k < count; ++k) {
    const double psi = kPi * static_cast<double>(k) / static_cast<double>(count);
    fam.angles.push_back(psi);
    fam.tori.push_back(torus_kappa(psi, grid));
  }
  for (const double psi : {0.0, kPi}) {
    fam.circle_bases.push_back({0.0, psi});
    fam.circles.push_back(sample_fiber(fam.circle_bases.back(), grid.n_u));
  }
  return fam;
}

NestedFamily nested_family_z(std::size_t count, const ParamGrid& grid) {
  if (count < 2) throw Error(Errc::BadCount, "a nested family needs count >= 2");
  NestedFamily fam;
  for (std::size_t k = 0; k <= count; ++k) {
    const double phi = kPi * static_cast<double>(k) / static_cast<double>(count);
    fam.angles.push_back(phi);
    fam.tori.push_back(torus_mu(phi, grid));
  }
  return fam;
}

BaseCurve resample_uniform(const BaseCurve& curve) {
  const std::size_t n = curve.samples.size();
  if (n < 3) throw Error(Errc::InvalidArgument, "a base curve needs at least 3 samples");
  std::vector<Point3> pts;
  pts.reserve(n);
  for (const auto& b : curve.samples) pts.push_back(unit_vector(b));

  const std::size_t segments_in = curve.closed ? n : n - 1;
  std::vector<double> seg(segments_in);
  double total = 0.0;
  for (std::size_t k = 0; k < segments_in; ++k) {
    seg[k] = arc_angle(pts[k], pts[(k + 1) % n]);
    total += seg[k];
  }
  if (!(total > 0.0)) return curve;

  const auto needed = static_cast<std::size_t>(std::floor(total / kMaxCurveStep)) + 1;
  const std::size_t segments_out = std::max(segments_in, needed);
  const std::size_t count_out = curve.closed ? segments_out : segments_out + 1;

  BaseCurve out;
  out.closed = curve.closed;
  out.samples.reserve(count_out);
  out.samples.push_back(curve.samples.front());
  std::size_t k = 0;
  double seg_start = 0.0;
  for (std::size_t m = 1; m < count_out; ++m) {
    if (!curve.closed && m + 1 == count_out) {
      out.samples.push_back(curve.samples.back());
      break;
    }
    const double target = total * static_cast<double>(m) / static_cast<double>(segments_out);
    while (k + 1 < segments_in && seg_start + seg[k] < target) {
      seg_start += seg[k];
      ++k;
    }
    const double t = seg[k] > 0.0 ? std::clamp((target - seg_start) / seg[k], 0.0, 1.0) : 0.0;
    out.samples.push_back(angles_of(slerp(pts[k], pts[(k + 1) % n], seg[k], t)));
  }
  return out;
}

CurveLift lift_base_curve(const BaseCurve& curve, std::size_t n_beta) {
  CurveLift lift;
  lift.curve = resample_uniform(curve);
  const auto& samples = lift.curve.samples;
  // v runs over sample indices: [0, n) wrapping or [0, n-1] inclusive.
  const auto rows = static_cast<double>(samples.size());
  ParamGrid grid{n_beta, samples.size(), {0.0, kTwoPi}, {0.0, lift.curve.closed ? rows : rows - 1.0},
                 true, lift.curve.closed};
  lift.surface = build_surface(grid, [&samples](double beta, double v) {
    const auto j = static_cast<std::size_t>(std::lround(v));
    return FiberParams{samples[std::min(j, samples.size() - 1)], reduce_angle(beta)};
  });
  lift.stereo = torus_stereo(lift.surface);
  return lift;
}

std::array<double, 2> PlanarArc::at(double fraction) const noexcept {
  const double t = start + fraction * sweep;
  return {center[0] + radius * std::cos(t), center[1] + radius * std::sin(t)};
}

ArcsShape arcs_shape_pipeline(const std::vector<PlanarArc>& arcs, std::size_t samples_per_arc,
                              std::size_t n_beta) {
  if (arcs.empty()) throw Error(Errc::InvalidArgument, "no arcs given");
  if (samples_per_arc < 3) throw Error(Errc::BadSampleCount, "need at least 3 samples per arc");
  for (const auto& arc : arcs) {
    if (!(arc.radius > 0.0) || !std::isfinite(arc.radius) || !std::isfinite(arc.sweep) ||
        arc.sweep == 0.0) {
      throw Error(Errc::InvalidArgument, "arcs need a positive radius and a nonzero sweep");
    }
  }
  for (std::size_t k = 0; k + 1 < arcs.size(); ++k) {
    const double gap = plane_gap(arcs[k].end_point(), arcs[k + 1].start_point());
    if (gap >= kArcGap) {
      throw Error(Errc::DisconnectedArcs, "arc " + std::to_string(k) + " ends " +
                                              std::to_string(gap) + " away from the next arc");
    }
  }
  const bool loop = plane_gap(arcs.back().end_point(), arcs.front().start_point()) < kArcGap;

  ArcsShape shape;
  shape.base_curve.closed = loop;
  const auto denom = static_cast<double>(samples_per_arc);
  if (arcs.size() == 1 && loop) {
    BaseCurve curve{{}, true};
    for (std::size_t s = 0; s < samples_per_arc; ++s) {
      curve.samples.push_back(lift_plane_point(arcs[0].at(static_cast<double>(s) / denom)));
    }
    shape.base_curve = curve;
    shape.parts.push_back(lift_base_curve(curve, n_beta));
    return shape;
  }

  for (std::size_t k = 0; k < arcs.size(); ++k) {
    BaseCurve curve{{}, false};
    for (std::size_t s = 0; s <= samples_per_arc; ++s) {
      curve.samples.push_back(lift_plane_point(arcs[k].at(static_cast<double>(s) / denom)));
    }
    const std::size_t keep = (k + 1 == arcs.size() && loop) ? samples_per_arc : samples_per_arc + 1;
    const std::size_t skip = k == 0 ? 0 : 1;
    shape.base_curve.samples.insert(shape.base_curve.samples.end(),
                                    curve.samples.begin() + static_cast<std::ptrdiff_t>(skip),
                                    curve.samples.begin() + static_cast<std::ptrdiff_t>(keep));
    if (k > 0) shape.junctions.push_back(curve.samples.front());
    shape.parts.push_back(lift_base_curve(curve, n_beta));
  }
  if (loop) shape.junctions.push_back(lift_plane_point(arcs.front().start_point()));
  return shape;
}

}  // namespace hopf4d

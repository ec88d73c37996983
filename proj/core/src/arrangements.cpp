#include "hopf4d/arrangements.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "hopf4d/error.hpp"
#include "hopf4d/hopf.hpp"
#include "hopf4d/projection.hpp"

namespace hopf4d {
namespace {

constexpr double kGolden = std::numbers::phi;
constexpr double kTangencyTolerance = 1e-6;
constexpr double kFilamentRelTolerance = 0.05;

Point3 unit(const Point3& p) { return (1.0 / norm(p)) * p; }

// Every sign combination of (a, b, c), skipping duplicates from zero entries.
void push_signed(std::vector<Point3>& out, double a, double b, double c) {
  for (const double sa : {1.0, -1.0}) {
    if (a == 0.0 && sa < 0.0) continue;
    for (const double sb : {1.0, -1.0}) {
      if (b == 0.0 && sb < 0.0) continue;
      for (const double sc : {1.0, -1.0}) {
        if (c == 0.0 && sc < 0.0) continue;
        out.push_back(unit({sa * a, sb * b, sc * c}));
      }
    }
  }
}

// Signed combinations of the three cyclic permutations of (a, b, c).
void push_cyclic(std::vector<Point3>& out, double a, double b, double c) {
  push_signed(out, a, b, c);
  push_signed(out, c, a, b);
  push_signed(out, b, c, a);
}

std::vector<Point3> cube() {
  std::vector<Point3> out;
  push_signed(out, 1.0, 1.0, 1.0);
  return out;
}

std::vector<Point3> octahedron() {
  return {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
}

// Largest singular value of the 2x2 matrix [[a, b], [c, d]].
double max_singular_value(double a, double b, double c, double d) {
  return 0.5 * (std::hypot(a + d, c - b) + std::hypot(a - d, b + c));
}

}  // namespace

std::string_view to_string(PolyhedronKind kind) noexcept {
  switch (kind) {
    case PolyhedronKind::triangle: return "triangle";
    case PolyhedronKind::tetrahedron: return "tetrahedron";
    case PolyhedronKind::hexahedron: return "hexahedron";
    case PolyhedronKind::octahedron: return "octahedron";
    case PolyhedronKind::icosahedron: return "icosahedron";
    case PolyhedronKind::dodecahedron: return "dodecahedron";
    case PolyhedronKind::tetrakis_hexahedron: return "tetrakis_hexahedron";
    case PolyhedronKind::buckminsterfullerene: return "buckminsterfullerene";
  }
  return "unknown";
}

PolyhedronKind polyhedron_kind_from_string(std::string_view name) {
  static constexpr std::array<PolyhedronKind, 8> kAll{
      PolyhedronKind::triangle,     PolyhedronKind::tetrahedron,         PolyhedronKind::hexahedron,
      PolyhedronKind::octahedron,   PolyhedronKind::icosahedron,         PolyhedronKind::dodecahedron,
      PolyhedronKind::tetrakis_hexahedron, PolyhedronKind::buckminsterfullerene};
  for (const auto kind : kAll) {
    if (name == to_string(kind)) return kind;
  }
  if (name == "tetrakis") return PolyhedronKind::tetrakis_hexahedron;
  if (name == "cube") return PolyhedronKind::hexahedron;
  if (name == "fullerene") return PolyhedronKind::buckminsterfullerene;
  throw Error(Errc::UnknownKind, "unknown polyhedron '" + std::string(name) + "'");
}

VertexSet polyhedron_vertices(PolyhedronKind kind) {
  VertexSet vs{std::string(to_string(kind)), {}};
  auto& pts = vs.points;
  switch (kind) {
    case PolyhedronKind::triangle:
      for (int k = 0; k < 3; ++k) {
        const double t = kTwoPi * k / 3.0;
        pts.push_back({std::cos(t), std::sin(t), 0.0});
      }
      break;
    case PolyhedronKind::tetrahedron:
      for (const Point3& p : {Point3{1, 1, 1}, Point3{1, -1, -1}, Point3{-1, 1, -1}, Point3{-1, -1, 1}}) {
        pts.push_back(unit(p));
      }
      break;
    case PolyhedronKind::hexahedron:
      pts = cube();
      break;
    case PolyhedronKind::octahedron:
      pts = octahedron();
      break;
    case PolyhedronKind::icosahedron:
      push_cyclic(pts, 0.0, 1.0, kGolden);
      break;
    case PolyhedronKind::dodecahedron:
      pts = cube();
      push_cyclic(pts, 0.0, 1.0 / kGolden, kGolden);
      break;
    case PolyhedronKind::tetrakis_hexahedron:
      pts = cube();
      for (const auto& p : octahedron()) pts.push_back(p);
      break;
    case PolyhedronKind::buckminsterfullerene:
      push_cyclic(pts, 0.0, 1.0, 3.0 * kGolden);
      push_cyclic(pts, 1.0, 2.0 + kGolden, 2.0 * kGolden);
      push_cyclic(pts, kGolden, 2.0, 2.0 * kGolden + 1.0);
      break;
  }
  return vs;
}

Constellation modulation_constellation(const VertexSet& vs, std::size_t m, double beta_offset) {
  if (m < 1) throw Error(Errc::BadPhaseCount, "each fiber needs at least one phase point");
  if (!std::isfinite(beta_offset)) throw Error(Errc::InvalidArgument, "beta offset must be finite");
  Constellation c;
  c.source = vs;
  c.m = m;
  c.beta_offset = beta_offset;
  c.points4.reserve(vs.points.size() * m);
  c.params.reserve(vs.points.size() * m);
  for (const auto& q : vs.points) {
    const BaseAngles base = angles_from_base_point(q).angles;
    for (std::size_t k = 0; k < m; ++k) {
      const double beta = beta_offset + kTwoPi * static_cast<double>(k) / static_cast<double>(m);
      const FiberParams f{base, reduce_angle(beta)};
      c.params.push_back(f);
      c.points4.push_back(fiber_point(f));
    }
  }
  return c;
}

double angular_distance(const Point3& a, const Point3& b) noexcept {
  return std::atan2(norm(cross(a, b)), dot(a, b));
}

TangencyGraph disk_tangency_graph(const VertexSet& vs, std::optional<double> radius) {
  const std::size_t n = vs.points.size();
  double min_angle = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      min_angle = std::min(min_angle, angular_distance(vs.points[i], vs.points[j]));
    }
  }
  TangencyGraph g;
  g.nodes = n;
  if (n < 2) {
    g.disk_radius = radius.value_or(0.0);
    return g;
  }
  const double bound = 0.5 * min_angle;
  if (radius) {
    if (!(*radius >= 0.0) || *radius > bound + kInputTolerance) {
      throw Error(Errc::RadiusTooLarge, "disks of radius " + std::to_string(*radius) +
                                            " overlap; the packing bound is " + std::to_string(bound));
    }
  }
  g.disk_radius = radius.value_or(bound);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(angular_distance(vs.points[i], vs.points[j]) - 2.0 * g.disk_radius) <=
          kTangencyTolerance) {
        g.edges.emplace_back(i, j);
      }
    }
  }
  return g;
}

std::vector<Filament> filament_backbones(const VertexSet& vs, std::size_t samples) {
  std::vector<Filament> out;
  out.reserve(vs.points.size());
  for (const auto& q : vs.points) {
    const BaseAngles base = angles_from_base_point(q).angles;
    Filament f;
    f.backbone = sample_fiber(base, samples);
    f.through_center = 1.0 - base.r_a() <= kInputTolerance;
    if (f.through_center) {
      f.stereo.closed = false;
      f.stereo.vertices = {{-kLineHalfLength, 0.0, 1.0}, {kLineHalfLength, 0.0, 1.0}};
    } else {
      f.stereo.closed = true;
      f.stereo.vertices.reserve(samples);
      for (std::size_t k = 0; k < samples; ++k) {
        const double beta = kTwoPi * static_cast<double>(k) / static_cast<double>(samples);
        f.stereo.vertices.push_back(stereographic_closed_form({base, beta}));
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

double fiber_distance(const Point3& base_a, const Point3& base_b) {
  const Circle4 a = fiber_circle(angles_from_base_point(base_a).angles);
  const Circle4 b = fiber_circle(angles_from_base_point(base_b).angles);
  const double cos_min = std::min(
      1.0, max_singular_value(dot(a.u, b.u), dot(a.u, b.v), dot(a.v, b.u), dot(a.v, b.v)));
  // Two unit great circles at smallest principal angle theta are 2 sin(theta/2) apart.
  return 2.0 * std::sin(0.5 * std::acos(cos_min));
}

TangencyGraph filament_tangency_graph(const VertexSet& vs, std::optional<double> tube_radius) {
  const std::size_t n = vs.points.size();
  std::vector<double> dist(n * n, 0.0);
  double min_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = fiber_distance(vs.points[i], vs.points[j]);
      dist[i * n + j] = d;
      min_dist = std::min(min_dist, d);
    }
  }
  TangencyGraph g;
  g.nodes = n;
  if (n < 2) return g;
  const double tube = tube_radius.value_or(0.5 * min_dist);
  const double contact = 2.0 * tube;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(dist[i * n + j] - contact) <= kFilamentRelTolerance * contact) {
        g.edges.emplace_back(i, j);
      }
    }
  }
  g.disk_radius = 2.0 * std::asin(std::min(1.0, tube));
  return g;
}

}  // namespace hopf4d

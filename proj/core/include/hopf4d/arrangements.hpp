#pragma once

// Vertex arrangements on the base sphere and the fiber structures built from
// them: nPolSK-mPSK constellations and twisted-filament packings.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopf4d/types.hpp"

namespace hopf4d {

enum class PolyhedronKind {
  triangle,
  tetrahedron,
  hexahedron,
  octahedron,
  icosahedron,
  dodecahedron,
  tetrakis_hexahedron,
  buckminsterfullerene,
};

std::string_view to_string(PolyhedronKind kind) noexcept;
/// Accepts the enumerator names plus the short forms "tetrakis", "cube" and
/// "fullerene". Throws Error(UnknownKind).
PolyhedronKind polyhedron_kind_from_string(std::string_view name);

struct VertexSet {
  std::string name;
  std::vector<Point3> points;  // unit vectors, untranslated base frame
};

/// Canonical orientations: the triangle lies on the equator starting at +x,
/// cube and octahedron are axis aligned, the tetrahedron uses alternate cube
/// corners, and the icosahedron, dodecahedron and truncated icosahedron use
/// the golden-ratio coordinates that keep the coordinate axes as 2-fold axes.
/// The tetrakis hexahedron is the union of the cube and octahedron vertices.
VertexSet polyhedron_vertices(PolyhedronKind kind);

struct Constellation {
  VertexSet source;
  std::size_t m = 0;
  double beta_offset = 0.0;
  /// Fiber-major: points4[v * m + k] is phase k on the fiber of vertex v.
  std::vector<Point4> points4;
  std::vector<FiberParams> params;
};

/// Samples each vertex's fiber at beta = beta_offset + 2 pi k / m.
/// Throws Error(BadPhaseCount) for m < 1.
Constellation modulation_constellation(const VertexSet& vs, std::size_t m, double beta_offset = 0.0);

struct TangencyGraph {
  std::size_t nodes = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
  double disk_radius = 0.0;                                // angular radius on the base sphere

  friend bool operator==(const TangencyGraph& a, const TangencyGraph& b) {
    return a.nodes == b.nodes && a.edges == b.edges;
  }
};

/// Angle between two unit vectors, accurate near 0 and pi.
double angular_distance(const Point3& a, const Point3& b) noexcept;

/// Equal disks centered at the vertices. The default radius is half the
/// minimum pairwise angular distance; (i, j) is an edge when the disks touch
/// (angular distance equals twice the radius within 1e-6). Throws
/// Error(RadiusTooLarge) when the disks would overlap.
TangencyGraph disk_tangency_graph(const VertexSet& vs, std::optional<double> radius = std::nullopt);

struct Filament {
  Polyline4 backbone;
  /// Stereographic image. The fiber through the projection center maps to a
  /// line, stored as an open two-vertex segment clipped to |x| <= kLineHalfLength.
  Polyline3 stereo;
  bool through_center = false;
};

inline constexpr double kLineHalfLength = 500.0;

std::vector<Filament> filament_backbones(const VertexSet& vs,
                                         std::size_t samples = kDefaultFiberSamples);

/// Exact minimum distance between the Hopf fibers of two base points,
/// from the principal angles between the fibers' planes.
double fiber_distance(const Point3& base_a, const Point3& base_b);

/// Filaments as tubes around the backbones. tube_radius defaults to half the
/// smallest backbone distance; (i, j) is an edge when the backbone distance
/// equals twice the tube radius within 5% relative. disk_radius reports the
/// equivalent angular disk radius on the base sphere.
TangencyGraph filament_tangency_graph(const VertexSet& vs,
                                      std::optional<double> tube_radius = std::nullopt);

}  // namespace hopf4d

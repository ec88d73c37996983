#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "hopf4d/analysis.hpp"
#include "hopf4d/arrangements.hpp"
#include "hopf4d/hopf.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace hopf4d;
using testing_support::code_of;
using testing_support::expect_near;

namespace {

constexpr std::array<PolyhedronKind, 6> kPackingKinds{PolyhedronKind::triangle,   PolyhedronKind::tetrahedron,
                                                      PolyhedronKind::hexahedron, PolyhedronKind::octahedron,
                                                      PolyhedronKind::icosahedron, PolyhedronKind::dodecahedron};

bool contains(const std::vector<Point3>& set, const Point3& p, double tol = 1e-12) {
  return std::any_of(set.begin(), set.end(), [&](const Point3& q) { return distance(p, q) <= tol; });
}

bool same_set(const std::vector<Point3>& a, const std::vector<Point3>& b, double tol = 1e-12) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](const Point3& p) { return contains(b, p, tol); });
}

// Number of nearest neighbors of each vertex (all should agree for a
// vertex-transitive solid).
std::set<std::size_t> nearest_degrees(const std::vector<Point3>& pts) {
  double min_d = 1e300;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) min_d = std::min(min_d, distance(pts[i], pts[j]));
  }
  std::set<std::size_t> degrees;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::size_t d = 0;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i != j && std::abs(distance(pts[i], pts[j]) - min_d) < 1e-9) ++d;
    }
    degrees.insert(d);
  }
  return degrees;
}

// Brute-force tangency: pairs at the minimum pairwise angle.
std::vector<std::pair<std::size_t, std::size_t>> min_angle_pairs(const std::vector<Point3>& pts) {
  double min_a = 1e300;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      min_a = std::min(min_a, std::acos(std::clamp(dot(pts[i], pts[j]), -1.0, 1.0)));
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (std::acos(std::clamp(dot(pts[i], pts[j]), -1.0, 1.0)) - min_a < 1e-7) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace

TEST(PolyhedronVertices, CountsAndUnitNorm) {
  const std::vector<std::pair<PolyhedronKind, std::size_t>> expected{
      {PolyhedronKind::triangle, 3},     {PolyhedronKind::tetrahedron, 4},
      {PolyhedronKind::hexahedron, 8},   {PolyhedronKind::octahedron, 6},
      {PolyhedronKind::icosahedron, 12}, {PolyhedronKind::dodecahedron, 20},
      {PolyhedronKind::tetrakis_hexahedron, 14}, {PolyhedronKind::buckminsterfullerene, 60}};
  for (const auto& [kind, count] : expected) {
    const VertexSet vs = polyhedron_vertices(kind);
    EXPECT_EQ(vs.points.size(), count) << to_string(kind);
    for (const auto& p : vs.points) EXPECT_NEAR(norm(p), 1.0, 1e-15);
    for (std::size_t i = 0; i < vs.points.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.points.size(); ++j) EXPECT_GT(distance(vs.points[i], vs.points[j]), 1e-3);
    }
  }
}

TEST(PolyhedronVertices, OctahedronIsAxisAligned) {
  EXPECT_TRUE(same_set(polyhedron_vertices(PolyhedronKind::octahedron).points,
                       {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}));
}

TEST(PolyhedronVertices, TetrakisIsCubeUnionOctahedron) {
  auto both = polyhedron_vertices(PolyhedronKind::hexahedron).points;
  for (const auto& p : polyhedron_vertices(PolyhedronKind::octahedron).points) both.push_back(p);
  EXPECT_TRUE(same_set(polyhedron_vertices(PolyhedronKind::tetrakis_hexahedron).points, both));
}

TEST(PolyhedronVertices, NearestNeighborDegrees) {
  EXPECT_EQ(nearest_degrees(polyhedron_vertices(PolyhedronKind::tetrahedron).points), std::set<std::size_t>{3});
  EXPECT_EQ(nearest_degrees(polyhedron_vertices(PolyhedronKind::hexahedron).points), std::set<std::size_t>{3});
  EXPECT_EQ(nearest_degrees(polyhedron_vertices(PolyhedronKind::octahedron).points), std::set<std::size_t>{4});
  EXPECT_EQ(nearest_degrees(polyhedron_vertices(PolyhedronKind::icosahedron).points), std::set<std::size_t>{5});
  EXPECT_EQ(nearest_degrees(polyhedron_vertices(PolyhedronKind::dodecahedron).points), std::set<std::size_t>{3});
  // Truncated icosahedron: pentagon edges and hexagon-hexagon edges share one
  // length, so every vertex has exactly three nearest neighbors.
  EXPECT_EQ(nearest_degrees(polyhedron_vertices(PolyhedronKind::buckminsterfullerene).points),
            std::set<std::size_t>{3});
}

TEST(PolyhedronVertices, FullereneHasIcosahedralSymmetry) {
  const auto pts = polyhedron_vertices(PolyhedronKind::buckminsterfullerene).points;
  const double g = std::numbers::phi;
  const std::vector<std::pair<Point3, double>> rotations{
      {{0, 1, g}, 2 * kPi / 5},  // through an icosahedron vertex: 5-fold
      {{1, 1, 1}, 2 * kPi / 3},  // 3-fold
      {{0, 0, 1}, kPi},          // 2-fold
  };
  for (const auto& [axis, angle] : rotations) {
    std::vector<Point3> moved;
    for (const auto& p : pts) moved.push_back(oracle::rotate(p, axis, angle));
    EXPECT_TRUE(same_set(moved, pts, 1e-12));
  }
  // A generic rotation is not a symmetry.
  std::vector<Point3> moved;
  for (const auto& p : pts) moved.push_back(oracle::rotate(p, {0.3, 0.1, 1.0}, 0.5));
  EXPECT_FALSE(same_set(moved, pts, 1e-6));
}

TEST(PolyhedronKind, Names) {
  EXPECT_EQ(polyhedron_kind_from_string("tetrakis"), PolyhedronKind::tetrakis_hexahedron);
  EXPECT_EQ(polyhedron_kind_from_string("cube"), PolyhedronKind::hexahedron);
  EXPECT_EQ(polyhedron_kind_from_string("fullerene"), PolyhedronKind::buckminsterfullerene);
  EXPECT_EQ(polyhedron_kind_from_string("icosahedron"), PolyhedronKind::icosahedron);
  EXPECT_EQ(code_of([] { polyhedron_kind_from_string("sphere"); }), Errc::UnknownKind);
}

TEST(ModulationConstellation, TetrakisEightPhases) {
  const Constellation c = modulation_constellation(polyhedron_vertices(PolyhedronKind::tetrakis_hexahedron), 8);
  ASSERT_EQ(c.points4.size(), 112u);
  const double chord = 2.0 * std::sin(kPi / 8);
  for (std::size_t v = 0; v < 14; ++v) {
    const Point3 q = c.source.points[v];
    for (std::size_t k = 0; k < 8; ++k) {
      const Point4& p = c.points4[v * 8 + k];
      EXPECT_NEAR(norm(p), 1.0, 1e-12);
      EXPECT_NEAR(distance(p, c.points4[v * 8 + (k + 1) % 8]), chord, 1e-12);
      expect_near(oracle::hopf(p), q, 1e-12);
    }
  }
  double min_pair = 1e300;
  for (std::size_t i = 0; i < 112; ++i) {
    for (std::size_t j = i + 1; j < 112; ++j) min_pair = std::min(min_pair, distance(c.points4[i], c.points4[j]));
  }
  EXPECT_GT(min_pair, 0.0);
}

TEST(ModulationConstellation, SinglePhaseAndOffset) {
  const VertexSet vs = polyhedron_vertices(PolyhedronKind::octahedron);
  const Constellation one = modulation_constellation(vs, 1);
  EXPECT_EQ(one.points4.size(), vs.points.size());
  const Constellation shifted = modulation_constellation(vs, 4, 0.3);
  for (std::size_t k = 0; k < shifted.params.size(); ++k) {
    EXPECT_NEAR(std::remainder(shifted.params[k].beta - 0.3 - kPi / 2 * static_cast<double>(k % 4), kTwoPi), 0.0,
                1e-12);
  }
  EXPECT_EQ(code_of([&] { modulation_constellation(vs, 0); }), Errc::BadPhaseCount);
}

TEST(DiskTangencyGraph, OctahedronAndTetrahedron) {
  const TangencyGraph oct = disk_tangency_graph(polyhedron_vertices(PolyhedronKind::octahedron));
  EXPECT_NEAR(oct.disk_radius, kPi / 4, 1e-12);
  EXPECT_EQ(oct.edges.size(), 12u);
  std::vector<int> degree(6, 0);
  for (const auto& [i, j] : oct.edges) {
    ++degree[i];
    ++degree[j];
  }
  EXPECT_TRUE(std::all_of(degree.begin(), degree.end(), [](int d) { return d == 4; }));
  EXPECT_EQ(disk_tangency_graph(polyhedron_vertices(PolyhedronKind::tetrahedron)).edges.size(), 6u);
}

TEST(DiskTangencyGraph, MatchesBruteForce) {
  for (const auto kind : kPackingKinds) {
    const VertexSet vs = polyhedron_vertices(kind);
    EXPECT_EQ(disk_tangency_graph(vs).edges, min_angle_pairs(vs.points)) << to_string(kind);
  }
}

TEST(DiskTangencyGraph, RotationInvariant) {
  auto rng = oracle::rng(20);
  std::normal_distribution<double> g;
  for (const auto kind : kPackingKinds) {
    VertexSet vs = polyhedron_vertices(kind);
    const TangencyGraph before = disk_tangency_graph(vs);
    const Point3 axis{g(rng), g(rng), g(rng)};
    const double angle = g(rng);
    for (auto& p : vs.points) p = oracle::rotate(p, axis, angle);
    EXPECT_EQ(disk_tangency_graph(vs), before) << to_string(kind);
  }
}

TEST(DiskTangencyGraph, RadiusBounds) {
  const VertexSet vs = polyhedron_vertices(PolyhedronKind::octahedron);
  EXPECT_EQ(code_of([&] { disk_tangency_graph(vs, kPi / 4 + 1e-3); }), Errc::RadiusTooLarge);
  EXPECT_TRUE(disk_tangency_graph(vs, 0.5).edges.empty());
  const TangencyGraph single = disk_tangency_graph({"one", {{0, 0, 1}}});
  EXPECT_EQ(single.nodes, 1u);
  EXPECT_TRUE(single.edges.empty());
}

TEST(FilamentBackbones, OctahedronBackbones) {
  const auto filaments = filament_backbones(polyhedron_vertices(PolyhedronKind::octahedron));
  ASSERT_EQ(filaments.size(), 6u);
  int through = 0;
  for (const auto& f : filaments) {
    through += f.through_center ? 1 : 0;
    EXPECT_EQ(f.stereo.closed, !f.through_center);
  }
  EXPECT_EQ(through, 1);  // the fiber over the north pole
  for (std::size_t i = 0; i < filaments.size(); ++i) {
    for (std::size_t j = i + 1; j < filaments.size(); ++j) {
      EXPECT_GT(min_distance(filaments[i].backbone, filaments[j].backbone), 1e-4);
    }
  }
}

TEST(FiberDistance, MatchesBruteForceAndHalfAngleLaw) {
  auto rng = oracle::rng(21);
  std::uniform_real_distribution<double> a(0.0, kTwoPi);
  std::uniform_real_distribution<double> z(-1.0, 1.0);
  for (int n = 0; n < 20; ++n) {
    const double phi_a = a(rng), psi_a = std::acos(z(rng));
    const double phi_b = a(rng), psi_b = std::acos(z(rng));
    const Point3 qa = spherical_point({phi_a, psi_a});
    const Point3 qb = spherical_point({phi_b, psi_b});
    const double d = fiber_distance(qa, qb);
    const double brute = oracle::brute_min_distance([&](double t) { return oracle::fiber(phi_a, psi_a, t); },
                                                    [&](double t) { return oracle::fiber(phi_b, psi_b, t); }, 1500);
    EXPECT_NEAR(d, brute, 2e-5);
    EXPECT_LE(d, brute + 1e-12);
    const double theta = std::acos(std::clamp(dot(qa, qb), -1.0, 1.0));
    EXPECT_NEAR(d, 2.0 * std::sin(theta / 4.0), 1e-9);
  }
  EXPECT_NEAR(fiber_distance({0, 0, 1}, {0, 0, -1}), std::sqrt(2.0), 1e-12);
}

TEST(FilamentTangencyGraph, EqualsDiskGraph) {
  for (const auto kind : kPackingKinds) {
    const VertexSet vs = polyhedron_vertices(kind);
    EXPECT_EQ(filament_tangency_graph(vs), disk_tangency_graph(vs)) << to_string(kind);
  }
  EXPECT_EQ(filament_tangency_graph(polyhedron_vertices(PolyhedronKind::icosahedron)).edges.size(), 30u);
  EXPECT_EQ(filament_tangency_graph(polyhedron_vertices(PolyhedronKind::triangle)).edges.size(), 3u);
  EXPECT_TRUE(filament_tangency_graph({"one", {{1, 0, 0}}}).edges.empty());
}

TEST(FilamentTangencyGraph, DiskRadiusMatchesTubeRadius) {
  const VertexSet vs = polyhedron_vertices(PolyhedronKind::octahedron);
  EXPECT_NEAR(filament_tangency_graph(vs).disk_radius, disk_tangency_graph(vs).disk_radius, 1e-12);
}

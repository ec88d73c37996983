#include "hopf4d/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "hopf4d/analysis.hpp"
#include "hopf4d/arrangements.hpp"
#include "hopf4d/error.hpp"
#include "hopf4d/hopf.hpp"
#include "hopf4d/projection.hpp"
#include "hopf4d/scene.hpp"
#include "hopf4d/surfaces.hpp"

namespace hopf4d::verify {
namespace {

using Rng = std::mt19937_64;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// Uniform on the base sphere.
BaseAngles random_base(Rng& rng) {
  std::uniform_real_distribution<double> phi(0.0, kTwoPi);
  std::uniform_real_distribution<double> z(-1.0, 1.0);
  return BaseAngles::make(phi(rng), std::acos(z(rng)));
}

double random_beta(Rng& rng) { return std::uniform_real_distribution<double>(0.0, kTwoPi)(rng); }

Polyline3 stereo_fiber(const BaseAngles& b, std::size_t n) {
  Polyline3 out;
  out.closed = true;
  for (std::size_t k = 0; k < n; ++k) {
    out.vertices.push_back(stereographic_closed_form({b, kTwoPi * static_cast<double>(k) / static_cast<double>(n)}));
  }
  return out;
}

CheckResult prop1(std::uint64_t) {
  double worst = 0.0;
  for (int i = 0; i < 32; ++i) {
    for (int j = 0; j <= 16; ++j) {
      for (int k = 0; k < 32; ++k) {
        const FiberParams f{{kTwoPi * i / 32.0, kPi * j / 16.0}, kTwoPi * k / 32.0};
        worst = std::max(worst, std::abs(norm(fiber_point(f)) - 1.0));
      }
    }
  }
  return {"prop1", worst <= 1e-12, "32x17x32 grid, max |norm - 1| = " + sci(worst)};
}

CheckResult prop2(std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const BaseAngles b = random_base(rng);
    const Point3 q = spherical_point(b);
    for (const auto& p : sample_fiber(b, 64).vertices) worst = std::max(worst, distance(hopf_map(p), q));
  }
  return {"prop2", worst <= 1e-12, "1000 fibers x 64 samples, max |h(p) - q| = " + sci(worst)};
}

// Second point at a log-uniform angle in (1e-3, pi) from the first, so
// near pairs are well represented.
Point3 nearby(const Point3& q, Rng& rng) {
  std::normal_distribution<double> g;
  Point3 t{g(rng), g(rng), g(rng)};
  t = t - dot(t, q) * q;
  t = (1.0 / norm(t)) * t;
  const double lo = std::log(1.001e-3);
  const double theta = std::exp(std::uniform_real_distribution<double>(lo, std::log(kPi))(rng));
  const Point3 p = std::cos(theta) * q + std::sin(theta) * t;
  return (1.0 / norm(p)) * p;
}

CheckResult prop3(std::uint64_t seed) {
  Rng rng(seed + 3);
  double worst = std::numeric_limits<double>::infinity();
  double closest_pair = kPi;
  int pairs = 0;
  while (pairs < 1000) {
    const Point3 qa = spherical_point(random_base(rng));
    const Point3 qb = nearby(qa, rng);
    const double sep = angular_distance(qa, qb);
    if (sep <= 1e-3) continue;
    closest_pair = std::min(closest_pair, sep);
    const BaseAngles a = angles_from_base_point(qa).angles;
    const BaseAngles b = angles_from_base_point(qb).angles;
    worst = std::min(worst, min_distance(sample_fiber(a), sample_fiber(b)));
    ++pairs;
  }
  return {"prop3", worst > 1e-4,
          "1000 pairs (closest base separation " + sci(closest_pair) + "), smallest sampled fiber distance = " +
              sci(worst)};
}

CheckResult stereo(std::uint64_t seed) {
  Rng rng(seed + 4);
  const ViewFrame frame;
  double worst = 0.0;
  int samples = 0;
  while (samples < 10000) {
    const FiberParams f{random_base(rng), random_beta(rng)};
    if (std::abs(stereographic_denominator(f)) <= 0.05) continue;
    const Point3 generic = stereographic_point(translate_to_view(fiber_point(f), frame), frame);
    worst = std::max(worst, distance(generic, stereographic_closed_form(f)));
    ++samples;
  }
  return {"stereo", worst < 1e-10, "10000 samples, max |generic - closed form| = " + sci(worst)};
}

CheckResult conformality(std::uint64_t seed) {
  Rng rng(seed + 5);
  double worst = 0.0;
  for (int n = 0; n < 100;) {
    const BaseAngles b = random_base(rng);
    if (b.psi < 0.2) continue;  // keep the image radius moderate
    worst = std::max(worst, fit_circle(stereo_fiber(b, kDefaultFiberSamples)).max_dev);
    ++n;
  }
  const ViewFrame frame;
  std::vector<Point3> line;
  for (std::size_t k = 0; k < kDefaultFiberSamples; ++k) {
    const FiberParams f{{0.0, 0.0}, kTwoPi * static_cast<double>(k) / kDefaultFiberSamples};
    if (std::abs(stereographic_denominator(f)) <= 0.05) continue;
    line.push_back(stereographic_point(translate_to_view(fiber_point(f), frame), frame));
  }
  const double collinear = collinearity_deviation(line);
  return {"conformality", worst < 1e-9 && collinear < 1e-9,
          "100 fibers, max circle deviation = " + sci(worst) + ", N-fiber line deviation = " + sci(collinear)};
}

CheckResult linking(std::uint64_t seed) {
  Rng rng(seed + 6);
  int positive = 0;
  int negative = 0;
  double worst = 0.0;
  bool unit = true;
  for (int n = 0; n < 50;) {
    const BaseAngles a = random_base(rng);
    const BaseAngles b = random_base(rng);
    if (a.psi < 0.2 || b.psi < 0.2 || angular_distance(spherical_point(a), spherical_point(b)) < 0.1) continue;
    const LinkingResult lk = linking_number(stereo_fiber(a, kDefaultFiberSamples), stereo_fiber(b, kDefaultFiberSamples));
    unit = unit && std::abs(lk.value) == 1;
    (lk.value > 0 ? positive : negative) += 1;
    worst = std::max(worst, std::abs(lk.residual));
    ++n;
  }
  const bool consistent = positive == 0 || negative == 0;
  return {"linking", unit && consistent && worst < 0.05,
          "50 pairs, +1: " + std::to_string(positive) + ", -1: " + std::to_string(negative) +
              ", max residual = " + sci(worst)};
}

CheckResult torus(std::uint64_t) {
  const FiberSurface k = torus_kappa(kPi / 2.0);
  const CylinderFit xi = fit_cylinder(k.xi.vertices, {0, 0, 1});
  const CylinderFit om = fit_cylinder(k.omega.vertices, {1, 0, 0});
  const double r = std::sqrt(0.5);
  const double radius_err = std::max(std::abs(xi.radius - r), std::abs(om.radius - r));
  const double axis_err = std::max(1.0 - std::abs(xi.axis_dir.z), 1.0 - std::abs(om.axis_dir.x));
  double mu_err = 0.0;
  for (int j = 0; j < 12; ++j) {
    const FiberSurface m = torus_mu(kPi * j / 6.0);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : m.points4) best = std::min(best, distance(p, Point4{0, 1, 0, 0}));
    mu_err = std::max(mu_err, best);
  }
  return {"torus", radius_err <= 1e-9 && axis_err <= 1e-9 && mu_err <= 1e-12,
          "cylinder radius error = " + sci(radius_err) + ", axis error = " + sci(axis_err) +
              ", mu distance to (0,1,0,0) = " + sci(mu_err)};
}

double row_set_distance(const Polyline4& a, const Polyline4& b) {
  double worst = 0.0;
  for (const auto& p : a.vertices) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : b.vertices) best = std::min(best, distance(p, q));
    worst = std::max(worst, best);
  }
  return worst;
}

CheckResult nested(std::uint64_t) {
  const NestedFamily xy = nested_family_xy(12);
  bool decreasing = xy.tori.size() == 11 && xy.circles.size() == 2;
  double previous = std::numeric_limits<double>::infinity();
  for (const auto& t : xy.tori) {
    const double r = fit_cylinder(t.xi.vertices, {0, 0, 1}).radius;
    decreasing = decreasing && r < previous;
    previous = r;
  }

  const NestedFamily z = nested_family_z(6);
  double shared = 0.0;
  double separation = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < z.tori.size(); ++a) {
    for (std::size_t b = a + 1; b < z.tori.size(); ++b) {
      const FiberSurface& s = z.tori[a];
      const FiberSurface& t = z.tori[b];
      const std::size_t last = s.grid.n_v - 1;
      shared = std::max({shared, row_set_distance(s.row(0), t.row(0)), row_set_distance(s.row(last), t.row(last))});
      // Interior rows are fibers over distinct base points.
      for (std::size_t i = 1; i < last; ++i) {
        const Point3 qa = hopf_map(s.row(i).vertices.front());
        for (std::size_t j = 1; j < last; ++j) {
          separation = std::min(separation, distance(qa, hopf_map(t.row(j).vertices.front())));
        }
      }
    }
  }
  return {"nested", decreasing && shared <= 1e-10 && separation > 1e-10,
          "xy: " + std::to_string(xy.tori.size()) + " tori + " + std::to_string(xy.circles.size()) +
              " circles, radii decreasing = " + (decreasing ? "yes" : "no") + "; z: shared row error = " +
              sci(shared) + ", other fibers apart by >= " + sci(separation)};
}

CheckResult modulation(std::uint64_t) {
  const std::size_t m = 8;
  const Constellation c = modulation_constellation(polyhedron_vertices(PolyhedronKind::tetrakis_hexahedron), m);
  double norm_err = 0.0;
  double spacing_err = 0.0;
  const double chord = 2.0 * std::sin(kPi / static_cast<double>(m));
  for (std::size_t v = 0; v < c.points4.size() / m; ++v) {
    for (std::size_t k = 0; k < m; ++k) {
      const Point4& p = c.points4[v * m + k];
      norm_err = std::max(norm_err, std::abs(norm(p) - 1.0));
      spacing_err = std::max(spacing_err, std::abs(distance(p, c.points4[v * m + (k + 1) % m]) - chord));
    }
  }
  double min_pair = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < c.points4.size(); ++i) {
    for (std::size_t j = i + 1; j < c.points4.size(); ++j) {
      min_pair = std::min(min_pair, distance(c.points4[i], c.points4[j]));
    }
  }
  return {"modulation",
          c.points4.size() == 112 && norm_err <= 1e-12 && spacing_err <= 1e-12 && min_pair > 0.0,
          std::to_string(c.points4.size()) + " points, norm error = " + sci(norm_err) + ", spacing error = " +
              sci(spacing_err) + ", min distance = " + sci(min_pair)};
}

CheckResult packing(std::uint64_t) {
  std::ostringstream detail;
  bool all = true;
  for (const auto kind : {PolyhedronKind::triangle, PolyhedronKind::tetrahedron, PolyhedronKind::hexahedron,
                          PolyhedronKind::octahedron, PolyhedronKind::icosahedron, PolyhedronKind::dodecahedron}) {
    const VertexSet vs = polyhedron_vertices(kind);
    const TangencyGraph disks = disk_tangency_graph(vs);
    const TangencyGraph tubes = filament_tangency_graph(vs);
    const bool same = disks == tubes;
    all = all && same;
    detail << to_string(kind) << " " << disks.edges.size() << (same ? "=" : "!=") << tubes.edges.size() << "; ";
  }
  std::string text = detail.str();
  text.resize(text.size() - 2);
  return {"packing", all, text};
}

std::size_t count_prefix(const std::string& text, std::string_view prefix) {
  std::size_t n = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.starts_with(prefix)) ++n;
  }
  return n;
}

CheckResult determinism(std::uint64_t) {
  const SceneRequest req = NestedRequest{NestedFamilyKind::xy, 12};
  const bool same = write_scene(build_scene(req)) == write_scene(build_scene(req));
  const std::string obj = export_obj(build_scene(TorusRequest{TorusMode::kappa, kPi / 2.0, 96, 96}), Space::xi);
  const std::size_t v = count_prefix(obj, "v ");
  const std::size_t f = count_prefix(obj, "f ");
  return {"determinism", same && v == 9216 && f == 9216,
          std::string("nested scene bytes identical = ") + (same ? "yes" : "no") + ", torus OBJ v = " +
              std::to_string(v) + ", f = " + std::to_string(f)};
}

using Suite = std::function<CheckResult(std::uint64_t)>;

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> suites{
      {"prop1", prop1},         {"prop2", prop2},     {"prop3", prop3},   {"stereo", stereo},
      {"conformality", conformality}, {"linking", linking}, {"torus", torus}, {"nested", nested},
      {"modulation", modulation}, {"packing", packing}, {"determinism", determinism}};
  return suites;
}

}  // namespace

std::uint64_t seed_from_env() {
  const char* raw = std::getenv("HOPF4D_SEED");
  if (raw == nullptr || *raw == '\0') return kDefaultSeed;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 0);
  return *end == '\0' ? v : kDefaultSeed;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, suite] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<CheckResult> run_suite(std::string_view name, std::uint64_t seed) {
  std::vector<CheckResult> out;
  for (const auto& [suite_name, suite] : registry()) {
    if (name != "all" && name != suite_name) continue;
    try {
      out.push_back(suite(seed));
    } catch (const Error& e) {
      out.push_back({suite_name, false, std::string("error: ") + e.what()});
    }
  }
  if (out.empty()) throw Error(Errc::InvalidArgument, "unknown suite '" + std::string(name) + "'");
  return out;
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::string out;
  for (const auto& r : results) out += (r.passed ? "PASS " : "FAIL ") + r.name + ": " + r.detail + "\n";
  return out;
}

}  // namespace hopf4d::verify

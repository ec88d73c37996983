#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <type_traits>

#include "hopf4d/error.hpp"
#include "hopf4d/hopf.hpp"
#include "hopf4d/scene.hpp"

namespace hopf4d {
namespace {

constexpr const char* kBaseColor = "#808080";
constexpr const char* kXiColor = "#1f77b4";
constexpr const char* kOmegaColor = "#d62728";
constexpr const char* kStereoColor = "#2ca02c";
constexpr const char* kFrameColor = "#c0c0c0";

const Point3 kBaseCenter{0.0, 1.0, 0.0};

std::string color_for(Space s) {
  switch (s) {
    case Space::base: return kBaseColor;
    case Space::xi: return kXiColor;
    case Space::omega: return kOmegaColor;
    case Space::stereo: return kStereoColor;
  }
  return kBaseColor;
}

std::string padded(std::size_t k, int width = 2) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%0*zu", width, k);
  return buf;
}

class SceneBuilder {
 public:
  SceneBuilder() { add_frame(); }

  SceneObject& add(std::string id, ObjectKind kind, Space space, std::vector<Point3> vertices,
                   const std::string& group) {
    SceneObject obj;
    obj.id = std::move(id);
    obj.kind = kind;
    obj.space = space;
    obj.vertices = std::move(vertices);
    obj.style.color = color_for(space);
    obj.meta["group"] = group;
    doc_.objects.push_back(std::move(obj));
    return doc_.objects.back();
  }

  SceneObject& add_polyline(std::string id, Space space, const Polyline3& line, const std::string& group) {
    SceneObject& obj = add(std::move(id), ObjectKind::polyline, space, line.vertices, group);
    obj.closed = line.closed;
    return obj;
  }

  SceneObject& add_mesh(std::string id, const SurfaceMesh& mesh, const std::string& group) {
    SceneObject& obj = add(std::move(id), ObjectKind::mesh, mesh.space, mesh.vertices, group);
    obj.faces.reserve(mesh.quads.size());
    for (const Quad& q : mesh.quads) obj.faces.emplace_back(q.begin(), q.end());
    return obj;
  }

  /// Base point, Xi, Omega and stereographic images of one fiber.
  void add_fiber_group(const std::string& group, const BaseAngles& base, std::size_t samples) {
    add(group + "/base", ObjectKind::point, Space::base, {kBaseCenter + spherical_point(base)}, group);
    const Polyline4 fiber = sample_fiber(base, samples);
    add_polyline(group + "/xi", Space::xi, image_of(fiber, Space::xi), group);
    add_polyline(group + "/omega", Space::omega, image_of(fiber, Space::omega), group);
    add_polyline(group + "/stereo", Space::stereo, stereo_of_fiber(base, samples), group);
    tag_group(group, base);
  }

  void add_surface_group(const std::string& group, const FiberSurface& s, const Polyline3& base_trace) {
    add_polyline(group + "/base", Space::base, base_trace, group);
    add_mesh(group + "/xi", s.xi, group);
    add_mesh(group + "/omega", s.omega, group);
    add_mesh(group + "/stereo", torus_stereo(s), group);
  }

  void set_meta(const std::string& group, const std::string& key, MetaValue value) {
    for (auto& obj : doc_.objects) {
      const auto it = obj.meta.find("group");
      if (it != obj.meta.end() && std::get<std::string>(it->second) == group) obj.meta[key] = value;
    }
  }

  SceneDocument finish() && { return std::move(doc_); }

  static Polyline3 image_of(const Polyline4& line, Space space) {
    Polyline3 out;
    out.closed = line.closed;
    const ViewFrame frame;
    for (const auto& p : line.vertices) {
      const Point4 shown = translate_to_view(p, frame);
      out.vertices.push_back(space == Space::xi ? xi_image(shown) : omega_image(shown));
    }
    return out;
  }

  static Polyline3 stereo_of_fiber(const BaseAngles& base, std::size_t samples) {
    const VertexSet single{"", {spherical_point(base)}};
    return filament_backbones(single, samples).front().stereo;
  }

  static Polyline3 base_trace(const std::vector<BaseAngles>& samples, bool closed) {
    Polyline3 out;
    out.closed = closed;
    for (const auto& b : samples) out.vertices.push_back(kBaseCenter + spherical_point(b));
    return out;
  }

 private:
  void add_frame() {
    const auto sphere = [this](const char* id, Space space, Point3 center) {
      SceneObject& s = add(id, ObjectKind::sphere, space, {center}, "frame");
      s.style = {kFrameColor, 0.15};
      s.meta["radius"] = 1.0;
    };
    sphere("frame/base_sphere", Space::base, kBaseCenter);
    sphere("frame/xi_contour", Space::xi, xi_image(doc_.frame.sphere_center));
    sphere("frame/omega_contour", Space::omega, omega_image(doc_.frame.sphere_center));
  }

  void tag_group(const std::string& group, const BaseAngles& base) {
    set_meta(group, "phi", base.phi);
    set_meta(group, "psi", base.psi);
  }

  SceneDocument doc_;
};

SceneDocument build_fiber(const FiberRequest& r) {
  const BaseAngles base = BaseAngles::make(r.phi, r.psi);
  if (r.samples < 3) throw Error(Errc::BadSampleCount, "a fiber needs at least 3 samples");
  SceneBuilder b;
  b.add_fiber_group("fiber", base, r.samples);
  return std::move(b).finish();
}

Polyline3 kappa_trace(double psi, std::size_t n) {
  std::vector<BaseAngles> s;
  for (std::size_t k = 0; k < n; ++k) s.push_back({kTwoPi * static_cast<double>(k) / static_cast<double>(n), psi});
  return SceneBuilder::base_trace(s, true);
}

Polyline3 mu_trace(double phi, std::size_t n) {
  std::vector<BaseAngles> s;
  for (std::size_t k = 0; k < n; ++k) {
    s.push_back({reduce_angle(phi), kPi * static_cast<double>(k) / static_cast<double>(n - 1)});
  }
  return SceneBuilder::base_trace(s, false);
}

SceneDocument build_torus(const TorusRequest& r) {
  SceneBuilder b;
  if (r.mode == TorusMode::kappa) {
    const FiberSurface s = torus_kappa(r.angle, ParamGrid::torus(r.n_u, r.n_v));
    b.add_surface_group("torus", s, kappa_trace(r.angle, r.n_v));
    b.set_meta("torus", "mode", std::string("kappa"));
    b.set_meta("torus", "psi", r.angle);
  } else {
    const FiberSurface s = torus_mu(r.angle, ParamGrid::meridian(r.n_u, r.n_v));
    b.add_surface_group("torus", s, mu_trace(r.angle, r.n_v));
    b.set_meta("torus", "mode", std::string("mu"));
    b.set_meta("torus", "phi", reduce_angle(r.angle));
  }
  return std::move(b).finish();
}

SceneDocument build_nested(const NestedRequest& r) {
  SceneBuilder b;
  if (r.family == NestedFamilyKind::xy) {
    ParamGrid grid = ParamGrid::torus(r.n_u, r.n_v);
    if (r.beta_window) {
      grid.u_range = kNestedXyBetaWindow;
      grid.closed_u = false;
    }
    const NestedFamily fam = nested_family_xy(r.count, grid);
    for (std::size_t t = 0; t < fam.tori.size(); ++t) {
      const std::size_t k = t + 1;
      const std::string group = "torus_" + padded(k);
      b.add_surface_group(group, fam.tori[t], kappa_trace(fam.angles[t], r.n_v));
      b.set_meta(group, "psi", fam.angles[t]);
      b.set_meta(group, "psi_family_index", static_cast<double>(k));
    }
    for (std::size_t c = 0; c < fam.circles.size(); ++c) {
      const std::size_t k = c == 0 ? 0 : r.count;
      const std::string group = "circle_" + padded(k);
      b.add_fiber_group(group, fam.circle_bases[c], r.n_u);
      b.set_meta(group, "psi_family_index", static_cast<double>(k));
    }
  } else {
    const NestedFamily fam = nested_family_z(r.count, ParamGrid::meridian(r.n_u, r.n_v));
    for (std::size_t t = 0; t < fam.tori.size(); ++t) {
      const std::string group = "torus_" + padded(t);
      b.add_surface_group(group, fam.tori[t], mu_trace(fam.angles[t], r.n_v));
      b.set_meta(group, "phi", fam.angles[t]);
      b.set_meta(group, "phi_family_index", static_cast<double>(t));
    }
  }
  return std::move(b).finish();
}

SceneDocument build_lift(const CurveLiftRequest& r) {
  const CurveLift lift = lift_base_curve(r.curve, r.n_beta);
  SceneBuilder b;
  b.add_polyline("lift/base", Space::base, SceneBuilder::base_trace(lift.curve.samples, lift.curve.closed), "lift");
  b.add_mesh("lift/xi", lift.surface.xi, "lift");
  b.add_mesh("lift/omega", lift.surface.omega, "lift");
  b.add_mesh("lift/stereo", lift.stereo, "lift");
  return std::move(b).finish();
}

SceneDocument build_arcs(const ArcsRequest& r) {
  const ArcsShape shape = arcs_shape_pipeline(r.arcs, r.samples_per_arc, r.n_beta);
  SceneBuilder b;
  for (std::size_t p = 0; p < shape.parts.size(); ++p) {
    const CurveLift& part = shape.parts[p];
    const std::string group = "part_" + padded(p);
    b.add_polyline(group + "/base", Space::base,
                   SceneBuilder::base_trace(part.curve.samples, part.curve.closed), group);
    b.add_mesh(group + "/xi", part.surface.xi, group);
    b.add_mesh(group + "/omega", part.surface.omega, group);
    b.add_mesh(group + "/stereo", part.stereo, group);
    b.set_meta(group, "part_index", static_cast<double>(p));
  }
  for (std::size_t k = 0; k < shape.junctions.size(); ++k) {
    const std::string group = "junction_" + padded(k);
    b.add_fiber_group(group, shape.junctions[k], r.n_beta);
  }
  return std::move(b).finish();
}

SceneDocument build_modulation(const ModulationRequest& r) {
  const VertexSet vs = polyhedron_vertices(r.poly);
  const Constellation c = modulation_constellation(vs, r.m, r.beta_offset);
  SceneBuilder b;
  const ViewFrame frame;
  for (std::size_t v = 0; v < vs.points.size(); ++v) {
    const std::string group = "fiber_" + padded(v);
    std::vector<Point3> xi;
    std::vector<Point3> omega;
    std::vector<Point3> stereo;
    double masked = 0.0;
    for (std::size_t k = 0; k < r.m; ++k) {
      const std::size_t idx = v * r.m + k;
      const Point4 shown = translate_to_view(c.points4[idx], frame);
      xi.push_back(xi_image(shown));
      omega.push_back(omega_image(shown));
      if (std::abs(stereographic_denominator(c.params[idx])) <= kStereoMask) {
        masked += 1.0;
      } else {
        stereo.push_back(stereographic_closed_form(c.params[idx]));
      }
    }
    b.add(group + "/base", ObjectKind::point, Space::base, {kBaseCenter + vs.points[v]}, group);
    b.add(group + "/xi", ObjectKind::point, Space::xi, xi, group).meta["role"] = std::string("constellation");
    b.add(group + "/omega", ObjectKind::point, Space::omega, omega, group).meta["role"] =
        std::string("constellation");
    if (!stereo.empty()) {
      auto& s = b.add(group + "/stereo", ObjectKind::point, Space::stereo, stereo, group);
      s.meta["role"] = std::string("constellation");
      s.meta["masked_points"] = masked;
    }
    const BaseAngles base = c.params[v * r.m].base;
    const Polyline4 fiber = sample_fiber(base, kDefaultFiberSamples);
    b.add_polyline(group + "/xi_fiber", Space::xi, SceneBuilder::image_of(fiber, Space::xi), group)
        .meta["role"] = std::string("backbone");
    b.add_polyline(group + "/omega_fiber", Space::omega, SceneBuilder::image_of(fiber, Space::omega), group)
        .meta["role"] = std::string("backbone");
    b.add_polyline(group + "/stereo_fiber", Space::stereo,
                   SceneBuilder::stereo_of_fiber(base, kDefaultFiberSamples), group)
        .meta["role"] = std::string("backbone");
    b.set_meta(group, "phases", static_cast<double>(r.m));
  }
  return std::move(b).finish();
}

SceneDocument build_packing(const PackingRequest& r) {
  const VertexSet vs = polyhedron_vertices(r.poly);
  const TangencyGraph disks = disk_tangency_graph(vs, r.radius);
  const std::vector<Filament> filaments = filament_backbones(vs, r.samples);
  std::vector<std::vector<std::size_t>> neighbors(vs.points.size());
  for (const auto& [i, j] : disks.edges) {
    neighbors[i].push_back(j);
    neighbors[j].push_back(i);
  }
  SceneBuilder b;
  for (std::size_t v = 0; v < vs.points.size(); ++v) {
    const std::string group = "filament_" + padded(v);
    b.add(group + "/base", ObjectKind::point, Space::base, {kBaseCenter + vs.points[v]}, group);
    b.add_polyline(group + "/xi", Space::xi, SceneBuilder::image_of(filaments[v].backbone, Space::xi), group);
    b.add_polyline(group + "/omega", Space::omega, SceneBuilder::image_of(filaments[v].backbone, Space::omega),
                   group);
    b.add_polyline(group + "/stereo", Space::stereo, filaments[v].stereo, group);
    std::ostringstream list;
    for (std::size_t k = 0; k < neighbors[v].size(); ++k) list << (k ? "," : "") << neighbors[v][k];
    b.set_meta(group, "neighbors", list.str());
    b.set_meta(group, "disk_radius", disks.disk_radius);
  }
  return std::move(b).finish();
}

}  // namespace

std::string describe(const SceneRequest& request) {
  std::ostringstream out;
  out.precision(17);
  std::visit(
      [&out](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, FiberRequest>) {
          out << "fiber(phi=" << r.phi << ", psi=" << r.psi << ", samples=" << r.samples << ")";
        } else if constexpr (std::is_same_v<T, TorusRequest>) {
          const bool kappa = r.mode == TorusMode::kappa;
          out << "torus(mode=" << (kappa ? "kappa, psi=" : "mu, phi=") << r.angle << ", grid=" << r.n_u << "x"
              << r.n_v << ")";
        } else if constexpr (std::is_same_v<T, NestedRequest>) {
          out << "nested(family=" << (r.family == NestedFamilyKind::xy ? "xy" : "z") << ", count=" << r.count
              << (r.beta_window ? ", beta_window" : "") << ")";
        } else if constexpr (std::is_same_v<T, CurveLiftRequest>) {
          out << "curve_lift(samples=" << r.curve.samples.size() << ", closed=" << r.curve.closed << ")";
        } else if constexpr (std::is_same_v<T, ArcsRequest>) {
          out << "arcs_shape(arcs=" << r.arcs.size() << ")";
        } else if constexpr (std::is_same_v<T, ModulationRequest>) {
          out << "modulation(poly=" << to_string(r.poly) << ", m=" << r.m << ")";
        } else {
          out << "packing(poly=" << to_string(r.poly) << ")";
        }
      },
      request);
  return out.str();
}

SceneDocument build_scene(const SceneRequest& request) {
  try {
    return std::visit(
        [](const auto& r) {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, FiberRequest>) return build_fiber(r);
          else if constexpr (std::is_same_v<T, TorusRequest>) return build_torus(r);
          else if constexpr (std::is_same_v<T, NestedRequest>) return build_nested(r);
          else if constexpr (std::is_same_v<T, CurveLiftRequest>) return build_lift(r);
          else if constexpr (std::is_same_v<T, ArcsRequest>) return build_arcs(r);
          else if constexpr (std::is_same_v<T, ModulationRequest>) return build_modulation(r);
          else return build_packing(r);
        },
        request);
  } catch (const Error& e) {
    throw Error(e.code(), describe(request) + ": " + e.message());
  }
}

}  // namespace hopf4d

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "hopf4d/error.hpp"
#include "hopf4d/scene.hpp"
#include "json.hpp"

namespace hopf4d {
namespace {

using nlohmann::json;

void append_real(std::string& out, double v) {
  if (!std::isfinite(v)) throw Error(Errc::InvalidScene, "non-finite number in scene");
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

void append_string(std::string& out, std::string_view s) {
  out += '"';
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void append_point4(std::string& out, const Point4& p) {
  out += '[';
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) out += ',';
    append_real(out, p[i]);
  }
  out += ']';
}

void append_object(std::string& out, const SceneObject& obj) {
  out += '{';
  if (obj.kind == ObjectKind::polyline) {
    out += "\"closed\":";
    out += obj.closed ? "true" : "false";
    out += ',';
  }
  if (obj.kind == ObjectKind::mesh) {
    out += "\"faces\":[";
    for (std::size_t f = 0; f < obj.faces.size(); ++f) {
      if (f) out += ',';
      out += '[';
      for (std::size_t k = 0; k < obj.faces[f].size(); ++k) {
        if (k) out += ',';
        out += std::to_string(obj.faces[f][k]);
      }
      out += ']';
    }
    out += "],";
  }
  out += "\"id\":";
  append_string(out, obj.id);
  out += ",\"kind\":";
  append_string(out, to_string(obj.kind));
  out += ",\"meta\":{";
  bool first = true;
  for (const auto& [key, value] : obj.meta) {
    if (!first) out += ',';
    first = false;
    append_string(out, key);
    out += ':';
    if (const auto* d = std::get_if<double>(&value)) {
      append_real(out, *d);
    } else {
      append_string(out, std::get<std::string>(value));
    }
  }
  out += "},\"space\":";
  append_string(out, to_string(obj.space));
  out += ",\"style\":{\"color\":";
  append_string(out, obj.style.color);
  out += ",\"opacity\":";
  append_real(out, obj.style.opacity);
  out += "},\"vertices\":[";
  for (std::size_t v = 0; v < obj.vertices.size(); ++v) {
    if (v) out += ',';
    append_real(out, obj.vertices[v].x);
    out += ',';
    append_real(out, obj.vertices[v].y);
    out += ',';
    append_real(out, obj.vertices[v].z);
  }
  out += "]}";
}

[[noreturn]] void invalid(const std::string& what) { throw Error(Errc::InvalidScene, what); }

const json& field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) invalid(std::string("missing field '") + key + "'");
  return *it;
}

double real_of(const json& j, const char* what) {
  if (!j.is_number()) invalid(std::string(what) + " must be a number");
  return j.get<double>();
}

Point4 point4_of(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 4) invalid(std::string(what) + " must be an array of 4 numbers");
  return {real_of(j[0], what), real_of(j[1], what), real_of(j[2], what), real_of(j[3], what)};
}

ObjectKind kind_from_string(const std::string& s) {
  for (const auto k : {ObjectKind::point, ObjectKind::polyline, ObjectKind::mesh, ObjectKind::sphere}) {
    if (s == to_string(k)) return k;
  }
  invalid("unknown object kind '" + s + "'");
}

SceneObject object_of(const json& j) {
  if (!j.is_object()) invalid("scene objects must be JSON objects");
  SceneObject obj;
  const json& id = field(j, "id");
  if (!id.is_string()) invalid("object id must be a string");
  obj.id = id.get<std::string>();
  const json& kind = field(j, "kind");
  if (!kind.is_string()) invalid("object kind must be a string");
  obj.kind = kind_from_string(kind.get<std::string>());
  const json& space = field(j, "space");
  if (!space.is_string()) invalid("object space must be a string");
  try {
    obj.space = space_from_string(space.get<std::string>());
  } catch (const Error& e) {
    invalid(e.what());
  }

  const json& verts = field(j, "vertices");
  if (!verts.is_array() || verts.size() % 3 != 0) invalid("vertices must be a flat array of triples");
  obj.vertices.reserve(verts.size() / 3);
  for (std::size_t k = 0; k < verts.size(); k += 3) {
    obj.vertices.push_back(
        {real_of(verts[k], "vertex"), real_of(verts[k + 1], "vertex"), real_of(verts[k + 2], "vertex")});
  }

  if (const auto it = j.find("faces"); it != j.end()) {
    if (!it->is_array()) invalid("faces must be an array");
    for (const auto& face : *it) {
      if (!face.is_array()) invalid("each face must be an array of indices");
      std::vector<std::uint32_t> idx;
      for (const auto& v : face) {
        if (!v.is_number_unsigned()) invalid("face indices must be unsigned integers");
        idx.push_back(v.get<std::uint32_t>());
      }
      obj.faces.push_back(std::move(idx));
    }
    if (obj.kind != ObjectKind::mesh) invalid("only meshes may carry faces");
  }
  if (const auto it = j.find("closed"); it != j.end()) {
    if (!it->is_boolean()) invalid("closed must be a boolean");
    obj.closed = it->get<bool>();
  }

  const json& style = field(j, "style");
  if (!style.is_object()) invalid("style must be an object");
  const json& color = field(style, "color");
  if (!color.is_string()) invalid("style.color must be a string");
  obj.style.color = color.get<std::string>();
  obj.style.opacity = real_of(field(style, "opacity"), "style.opacity");

  const json& meta = field(j, "meta");
  if (!meta.is_object()) invalid("meta must be an object");
  for (const auto& [key, value] : meta.items()) {
    if (value.is_number()) {
      obj.meta.emplace(key, value.get<double>());
    } else if (value.is_string()) {
      obj.meta.emplace(key, value.get<std::string>());
    } else {
      invalid("meta values must be numbers or strings");
    }
  }
  return obj;
}

bool valid_color(const std::string& c) {
  return c.size() == 7 && c[0] == '#' &&
         std::all_of(c.begin() + 1, c.end(), [](char ch) { return std::isxdigit(static_cast<unsigned char>(ch)); });
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n');
    const auto nl = text.rfind('\n', pos == 0 ? 0 : pos - 1);
    const std::size_t column = nl == std::string_view::npos ? pos + 1 : pos - nl;
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ", column " +
                                      std::to_string(column) + ": " + e.what());
  }
}

}  // namespace

std::string_view to_string(ObjectKind kind) noexcept {
  switch (kind) {
    case ObjectKind::point: return "point";
    case ObjectKind::polyline: return "polyline";
    case ObjectKind::mesh: return "mesh";
    case ObjectKind::sphere: return "sphere";
  }
  return "unknown";
}

Space space_from_string(std::string_view name) {
  for (const auto s : {Space::base, Space::xi, Space::omega, Space::stereo}) {
    if (name == to_string(s)) return s;
  }
  throw Error(Errc::InvalidArgument, "unknown space '" + std::string(name) + "'");
}

bool operator==(const SceneDocument& a, const SceneDocument& b) {
  return a.version == b.version && a.frame.sphere_center == b.frame.sphere_center &&
         a.frame.projection_center == b.frame.projection_center &&
         a.frame.tangent_point == b.frame.tangent_point && a.objects == b.objects;
}

void validate(const SceneDocument& doc) {
  if (doc.version != kSceneVersion) invalid("unsupported version " + std::to_string(doc.version));
  std::set<std::string_view> ids;
  for (const auto& obj : doc.objects) {
    if (obj.id.empty()) invalid("object ids must be non-empty");
    if (!ids.insert(obj.id).second) invalid("duplicate object id '" + obj.id + "'");
    const bool is_mesh = obj.kind == ObjectKind::mesh;
    if (is_mesh && obj.faces.empty()) invalid("mesh '" + obj.id + "' has no faces");
    if (!is_mesh && !obj.faces.empty()) invalid("'" + obj.id + "' is not a mesh but has faces");
    if (obj.kind == ObjectKind::polyline && obj.vertices.size() < 2) {
      invalid("polyline '" + obj.id + "' needs at least 2 vertices");
    }
    if (obj.kind == ObjectKind::sphere && obj.vertices.size() != 1) {
      invalid("sphere '" + obj.id + "' needs exactly one center vertex");
    }
    if (obj.kind != ObjectKind::polyline && obj.closed) {
      invalid("only polylines can be closed ('" + obj.id + "')");
    }
    for (const auto& face : obj.faces) {
      if (face.size() < 3) invalid("face with fewer than 3 vertices in '" + obj.id + "'");
      for (const auto idx : face) {
        if (idx >= obj.vertices.size()) invalid("face index out of range in '" + obj.id + "'");
      }
    }
    for (const auto& v : obj.vertices) {
      if (!is_finite(v)) invalid("non-finite vertex in '" + obj.id + "'");
    }
    if (!valid_color(obj.style.color)) invalid("bad color '" + obj.style.color + "'");
    if (!(obj.style.opacity >= 0.0 && obj.style.opacity <= 1.0)) invalid("opacity outside [0, 1]");
  }
}

std::string write_scene(const SceneDocument& doc) {
  validate(doc);
  std::string out;
  out += "{\"frame\":{\"projection_center\":";
  append_point4(out, doc.frame.projection_center);
  out += ",\"sphere_center\":";
  append_point4(out, doc.frame.sphere_center);
  out += ",\"tangent_point\":";
  append_point4(out, doc.frame.tangent_point);
  out += "},\"objects\":[";
  for (std::size_t k = 0; k < doc.objects.size(); ++k) {
    if (k) out += ',';
    append_object(out, doc.objects[k]);
  }
  out += "],\"version\":";
  out += std::to_string(doc.version);
  out += "}\n";
  return out;
}

SceneDocument read_scene(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) invalid("a scene must be a JSON object");
  const json& version = field(j, "version");
  if (!version.is_number_integer() || version.get<long long>() != kSceneVersion) {
    throw Error(Errc::UnknownVersion, "unsupported scene version " + version.dump());
  }
  SceneDocument doc;
  const json& frame = field(j, "frame");
  if (!frame.is_object()) invalid("frame must be an object");
  doc.frame.sphere_center = point4_of(field(frame, "sphere_center"), "sphere_center");
  doc.frame.projection_center = point4_of(field(frame, "projection_center"), "projection_center");
  doc.frame.tangent_point = point4_of(field(frame, "tangent_point"), "tangent_point");
  const json& objects = field(j, "objects");
  if (!objects.is_array()) invalid("objects must be an array");
  for (const auto& o : objects) doc.objects.push_back(object_of(o));
  validate(doc);
  return doc;
}

std::string export_obj(const SceneDocument& doc, Space space) {
  std::vector<const SceneObject*> selected;
  for (const auto& obj : doc.objects) {
    if (obj.space == space && (obj.kind == ObjectKind::mesh || obj.kind == ObjectKind::polyline)) {
      selected.push_back(&obj);
    }
  }
  if (selected.empty()) {
    throw Error(Errc::EmptySelection,
                "no meshes or polylines in the " + std::string(to_string(space)) + " space");
  }
  std::stable_sort(selected.begin(), selected.end(),
                   [](const SceneObject* a, const SceneObject* b) { return a->id < b->id; });
  std::string out;
  std::size_t base = 1;
  for (const SceneObject* obj : selected) {
    out += "o ";
    out += obj->id;
    out += '\n';
    for (const auto& v : obj->vertices) {
      out += "v ";
      append_real(out, v.x);
      out += ' ';
      append_real(out, v.y);
      out += ' ';
      append_real(out, v.z);
      out += '\n';
    }
    if (obj->kind == ObjectKind::mesh) {
      for (const auto& face : obj->faces) {
        out += 'f';
        for (const auto idx : face) {
          out += ' ';
          out += std::to_string(base + idx);
        }
        out += '\n';
      }
    } else {
      out += 'l';
      for (std::size_t k = 0; k < obj->vertices.size(); ++k) {
        out += ' ';
        out += std::to_string(base + k);
      }
      if (obj->closed) {
        out += ' ';
        out += std::to_string(base);
      }
      out += '\n';
    }
    base += obj->vertices.size();
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view bytes) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(Errc::IoError, "cannot open " + tmp.string() + " for writing");
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw Error(Errc::IoError, "failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(Errc::IoError, "cannot move output into place at " + path.string());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// Request parsing

namespace {

[[noreturn]] void bad_request(const std::string& what) { throw Error(Errc::InvalidArgument, what); }

double req_real(const json& j, const char* key, std::optional<double> fallback = std::nullopt) {
  const auto it = j.find(key);
  if (it == j.end()) {
    if (fallback) return *fallback;
    bad_request(std::string("request is missing '") + key + "'");
  }
  if (!it->is_number()) bad_request(std::string("'") + key + "' must be a number");
  return it->get<double>();
}

std::size_t req_count(const json& j, const char* key, std::size_t fallback) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number_unsigned()) bad_request(std::string("'") + key + "' must be a non-negative integer");
  return it->get<std::size_t>();
}

std::string req_string(const json& j, const char* key, std::optional<std::string> fallback = std::nullopt) {
  const auto it = j.find(key);
  if (it == j.end()) {
    if (fallback) return *fallback;
    bad_request(std::string("request is missing '") + key + "'");
  }
  if (!it->is_string()) bad_request(std::string("'") + key + "' must be a string");
  return it->get<std::string>();
}

PlanarArc arc_of(const json& a) {
  if (!a.is_object()) bad_request("each arc must be an object");
  const json& c = a.contains("center") ? a.at("center") : json();
  if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number()) {
    bad_request("arc center must be [x, z]");
  }
  return {{c[0].get<double>(), c[1].get<double>()}, req_real(a, "radius"), req_real(a, "start"),
          req_real(a, "sweep")};
}

std::vector<PlanarArc> arcs_of(const json& j) {
  const json* list = &j;
  if (j.is_object()) {
    if (!j.contains("arcs")) bad_request("expected an 'arcs' array");
    list = &j.at("arcs");
  }
  if (!list->is_array()) bad_request("arcs must be an array");
  std::vector<PlanarArc> arcs;
  for (const auto& a : *list) arcs.push_back(arc_of(a));
  return arcs;
}

json arc_to_json(const PlanarArc& a) {
  return {{"center", {a.center[0], a.center[1]}}, {"radius", a.radius}, {"start", a.start}, {"sweep", a.sweep}};
}

}  // namespace

std::vector<PlanarArc> arcs_from_json(std::string_view text) { return arcs_of(parse_json(text)); }

SceneRequest request_from_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) bad_request("a request must be a JSON object");
  const std::string type = req_string(j, "type");
  if (type == "fiber") {
    return FiberRequest{req_real(j, "phi"), req_real(j, "psi"), req_count(j, "samples", kDefaultFiberSamples)};
  }
  if (type == "torus") {
    const std::string mode = req_string(j, "mode", "kappa");
    TorusRequest r;
    if (mode == "kappa") {
      r.mode = TorusMode::kappa;
      r.angle = req_real(j, "psi");
    } else if (mode == "mu") {
      r.mode = TorusMode::mu;
      r.angle = req_real(j, "phi");
    } else {
      bad_request("torus mode must be 'kappa' or 'mu'");
    }
    r.n_u = req_count(j, "n_u", r.n_u);
    r.n_v = req_count(j, "n_v", r.n_v);
    return r;
  }
  if (type == "nested") {
    const std::string family = req_string(j, "family", "xy");
    NestedRequest r;
    if (family == "xy") {
      r.family = NestedFamilyKind::xy;
      r.count = 12;
    } else if (family == "z") {
      r.family = NestedFamilyKind::z;
      r.count = 6;
    } else {
      bad_request("nested family must be 'xy' or 'z'");
    }
    r.count = req_count(j, "count", r.count);
    r.n_u = req_count(j, "n_u", r.n_u);
    r.n_v = req_count(j, "n_v", r.n_v);
    if (const auto w = j.find("beta_window"); w != j.end()) {
      if (!w->is_boolean()) bad_request("'beta_window' must be a boolean");
      r.beta_window = w->get<bool>();
    }
    return r;
  }
  if (type == "curve_lift") {
    CurveLiftRequest r;
    const auto it = j.find("curve");
    if (it == j.end() || !it->is_array()) bad_request("curve_lift needs a 'curve' array of [phi, psi]");
    for (const auto& row : *it) {
      if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number()) {
        bad_request("curve rows must be [phi, psi]");
      }
      r.curve.samples.push_back(BaseAngles::make(row[0].get<double>(), row[1].get<double>()));
    }
    if (const auto c = j.find("closed"); c != j.end()) {
      if (!c->is_boolean()) bad_request("'closed' must be a boolean");
      r.curve.closed = c->get<bool>();
    }
    r.n_beta = req_count(j, "n_beta", r.n_beta);
    return r;
  }
  if (type == "arcs_shape") {
    ArcsRequest r;
    r.arcs = arcs_of(j);
    r.samples_per_arc = req_count(j, "samples_per_arc", r.samples_per_arc);
    r.n_beta = req_count(j, "n_beta", r.n_beta);
    return r;
  }
  if (type == "modulation") {
    ModulationRequest r;
    r.poly = polyhedron_kind_from_string(req_string(j, "poly", "tetrakis_hexahedron"));
    r.m = req_count(j, "m", r.m);
    r.beta_offset = req_real(j, "beta_offset", 0.0);
    return r;
  }
  if (type == "packing") {
    PackingRequest r;
    r.poly = polyhedron_kind_from_string(req_string(j, "poly", "octahedron"));
    if (j.contains("radius")) r.radius = req_real(j, "radius");
    r.samples = req_count(j, "samples", r.samples);
    return r;
  }
  bad_request("unknown request type '" + type + "'");
}

std::string request_to_json(const SceneRequest& request) {
  const json j = std::visit(
      [](const auto& r) -> json {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, FiberRequest>) {
          return {{"type", "fiber"}, {"phi", r.phi}, {"psi", r.psi}, {"samples", r.samples}};
        } else if constexpr (std::is_same_v<T, TorusRequest>) {
          const bool kappa = r.mode == TorusMode::kappa;
          return {{"type", "torus"}, {"mode", kappa ? "kappa" : "mu"}, {kappa ? "psi" : "phi", r.angle},
                  {"n_u", r.n_u}, {"n_v", r.n_v}};
        } else if constexpr (std::is_same_v<T, NestedRequest>) {
          return {{"type", "nested"}, {"family", r.family == NestedFamilyKind::xy ? "xy" : "z"},
                  {"count", r.count}, {"n_u", r.n_u}, {"n_v", r.n_v}, {"beta_window", r.beta_window}};
        } else if constexpr (std::is_same_v<T, CurveLiftRequest>) {
          json rows = json::array();
          for (const auto& b : r.curve.samples) rows.push_back({b.phi, b.psi});
          return {{"type", "curve_lift"}, {"curve", rows}, {"closed", r.curve.closed}, {"n_beta", r.n_beta}};
        } else if constexpr (std::is_same_v<T, ArcsRequest>) {
          json arcs = json::array();
          for (const auto& a : r.arcs) arcs.push_back(arc_to_json(a));
          return {{"type", "arcs_shape"}, {"arcs", arcs}, {"samples_per_arc", r.samples_per_arc},
                  {"n_beta", r.n_beta}};
        } else if constexpr (std::is_same_v<T, ModulationRequest>) {
          return {{"type", "modulation"}, {"poly", std::string(to_string(r.poly))}, {"m", r.m},
                  {"beta_offset", r.beta_offset}};
        } else {
          json out = {{"type", "packing"}, {"poly", std::string(to_string(r.poly))}, {"samples", r.samples}};
          if (r.radius) out["radius"] = *r.radius;
          return out;
        }
      },
      request);
  return j.dump();
}

std::vector<BaseAngles> curve_from_csv(std::string_view text) {
  std::vector<BaseAngles> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto comma = line.find(',');
    const auto fail = [&](const std::string& why) -> void {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + why);
    };
    if (comma == std::string::npos) fail("expected 'phi,psi'");
    double phi = 0.0;
    double psi = 0.0;
    try {
      std::size_t used = 0;
      phi = std::stod(line.substr(0, comma), &used);
      psi = std::stod(line.substr(comma + 1), &used);
    } catch (const std::exception&) {
      if (!seen_data && rows.empty()) {
        seen_data = true;  // header row
        continue;
      }
      fail("values must be numbers");
    }
    seen_data = true;
    try {
      rows.push_back(BaseAngles::make(phi, psi));
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  return rows;
}

}  // namespace hopf4d

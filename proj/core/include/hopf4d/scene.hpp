#pragma once

// Scene documents: the interchange format between the engine, the CLI and
// the viewer. Every 4D object appears as up to four linked depictions (base
// sphere trace, Xi image, Omega image, stereographic image) that share a
// meta "group" key.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hopf4d/arrangements.hpp"
#include "hopf4d/projection.hpp"
#include "hopf4d/surfaces.hpp"
#include "hopf4d/types.hpp"

namespace hopf4d {

enum class ObjectKind { point, polyline, mesh, sphere };

std::string_view to_string(ObjectKind kind) noexcept;

using MetaValue = std::variant<double, std::string>;

struct Style {
  std::string color = "#808080";
  double opacity = 1.0;

  friend bool operator==(const Style&, const Style&) = default;
};

struct SceneObject {
  std::string id;
  ObjectKind kind = ObjectKind::point;
  Space space = Space::base;
  std::vector<Point3> vertices;
  /// Polygon index lists; required for meshes, absent otherwise.
  std::vector<std::vector<std::uint32_t>> faces;
  /// Polylines only: whether the last vertex joins the first.
  bool closed = false;
  Style style;
  std::map<std::string, MetaValue> meta;

  friend bool operator==(const SceneObject&, const SceneObject&) = default;
};

inline constexpr int kSceneVersion = 1;

struct SceneDocument {
  int version = kSceneVersion;
  ViewFrame frame;
  std::vector<SceneObject> objects;
};

bool operator==(const SceneDocument& a, const SceneDocument& b);

/// Throws Error(InvalidScene) describing the first violated invariant.
void validate(const SceneDocument& doc);

// ---------------------------------------------------------------------------
// Requests

struct FiberRequest {
  double phi = 0.0;
  double psi = 0.0;
  std::size_t samples = kDefaultFiberSamples;
};

enum class TorusMode { kappa, mu };

struct TorusRequest {
  TorusMode mode = TorusMode::kappa;
  double angle = kPi / 2.0;  // psi for kappa, phi for mu
  std::size_t n_u = 96;
  std::size_t n_v = 96;
};

enum class NestedFamilyKind { xy, z };

struct NestedRequest {
  NestedFamilyKind family = NestedFamilyKind::xy;
  std::size_t count = 12;
  std::size_t n_u = 96;
  std::size_t n_v = 96;
  /// xy family only: restrict beta' to kNestedXyBetaWindow so the inner
  /// tori stay visible.
  bool beta_window = false;
};

struct CurveLiftRequest {
  BaseCurve curve;
  std::size_t n_beta = 96;
};

struct ArcsRequest {
  std::vector<PlanarArc> arcs;
  std::size_t samples_per_arc = 64;
  std::size_t n_beta = 96;
};

struct ModulationRequest {
  PolyhedronKind poly = PolyhedronKind::tetrakis_hexahedron;
  std::size_t m = 8;
  double beta_offset = 0.0;
};

struct PackingRequest {
  PolyhedronKind poly = PolyhedronKind::octahedron;
  std::optional<double> radius;
  std::size_t samples = kDefaultFiberSamples;
};

using SceneRequest = std::variant<FiberRequest, TorusRequest, NestedRequest, CurveLiftRequest,
                                  ArcsRequest, ModulationRequest, PackingRequest>;

/// Short human-readable description, used to give errors request context.
std::string describe(const SceneRequest& request);

/// Builds the scene for a request. Module errors are rethrown with the same
/// code and the request description prepended.
SceneDocument build_scene(const SceneRequest& request);

/// Request JSON: {"type": "fiber" | "torus" | "nested" | "curve_lift" |
/// "arcs_shape" | "modulation" | "packing", ...parameters}. Throws
/// Error(ParseError) for malformed text and Error(InvalidArgument) for bad fields.
SceneRequest request_from_json(std::string_view text);
std::string request_to_json(const SceneRequest& request);

/// Parses arcs given either as {"arcs": [...]} or as a bare array of
/// {"center": [x, z], "radius": r, "start": t0, "sweep": dt}.
std::vector<PlanarArc> arcs_from_json(std::string_view text);

/// Parses "phi,psi" rows; blank lines, '#' comments and a non-numeric header
/// row are skipped. Throws Error(ParseError) with the offending line number.
std::vector<BaseAngles> curve_from_csv(std::string_view text);

// ---------------------------------------------------------------------------
// Serialization

/// Canonical JSON: sorted keys, no insignificant whitespace, 17 significant
/// digits for reals, vertices as flat [x, y, z, ...] arrays, trailing newline.
std::string write_scene(const SceneDocument& doc);

/// Throws Error(ParseError) with line and column, Error(UnknownVersion), or
/// Error(InvalidScene).
SceneDocument read_scene(std::string_view text);

/// Wavefront OBJ of the meshes and polylines tagged with `space`, one `o`
/// group per object in id order. Throws Error(EmptySelection).
std::string export_obj(const SceneDocument& doc, Space space);

/// Throws Error(InvalidArgument) for unknown names.
Space space_from_string(std::string_view name);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);
/// Throws Error(IoError).
std::string read_file(const std::filesystem::path& path);

}  // namespace hopf4d

#include "hopf4d/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <regex>
#include <string>
#include <utility>

#include "hopf4d/error.hpp"
#include "hopf4d/scene.hpp"
#include "hopf4d/verify.hpp"

namespace hopf4d::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<std::size_t, std::size_t> parse_grid(const std::string& text) {
  static const std::regex pattern(R"((\d+)x(\d+))");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw UsageError("--grid expects NUxNV, e.g. 96x96, got '" + text + "'");
  return {std::stoul(m[1].str()), std::stoul(m[2].str())};
}

void emit(const std::string& bytes, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << bytes;
  } else {
    write_file_atomic(path, bytes);
  }
}

struct Options {
  std::string out_path;
  // fiber
  double phi = 0.0;
  double psi = 0.0;
  std::optional<double> phi_opt;
  std::optional<double> psi_opt;
  std::size_t samples = kDefaultFiberSamples;
  // torus, nested
  std::string mode;
  std::string grid = "96x96";
  std::string family;
  std::optional<std::size_t> count;
  bool beta_window = false;
  // lift, arcs
  std::string curve_path;
  bool closed = false;
  std::size_t n_beta = 96;
  std::string spec_path;
  std::size_t samples_per_arc = 64;
  // modulation, packing
  std::string poly;
  std::size_t m = 8;
  double beta_offset = 0.0;
  std::optional<double> radius;
  // export
  std::string in_path;
  std::string space;
  std::string format = "obj";
  // verify
  std::string suite = "all";
  // serve
  std::string host = "127.0.0.1";
  int port = 8080;
};

SceneRequest torus_request(const Options& o) {
  TorusRequest r;
  std::tie(r.n_u, r.n_v) = parse_grid(o.grid);
  if (o.mode == "kappa") {
    if (!o.psi_opt || o.phi_opt) throw UsageError("torus --mode kappa takes --psi");
    r.mode = TorusMode::kappa;
    r.angle = *o.psi_opt;
  } else {
    if (!o.phi_opt || o.psi_opt) throw UsageError("torus --mode mu takes --phi");
    r.mode = TorusMode::mu;
    r.angle = *o.phi_opt;
  }
  return r;
}

SceneRequest nested_request(const Options& o) {
  NestedRequest r;
  r.family = o.family == "xy" ? NestedFamilyKind::xy : NestedFamilyKind::z;
  r.count = o.count.value_or(r.family == NestedFamilyKind::xy ? 12 : 6);
  std::tie(r.n_u, r.n_v) = parse_grid(o.grid);
  if (o.beta_window && r.family != NestedFamilyKind::xy) throw UsageError("--beta-window applies to --family xy");
  r.beta_window = o.beta_window;
  return r;
}

int run_verify(const Options& o, std::ostream& out) {
  const std::uint64_t seed = verify::seed_from_env();
  const auto results = verify::run_suite(o.suite, seed);
  out << "seed " << seed << "\n" << verify::format_report(results);
  for (const auto& r : results) {
    if (!r.passed) return kExitUsage;
  }
  return kExitOk;
}

int run_export(const Options& o, std::ostream& out) {
  const SceneDocument doc = read_scene(read_file(o.in_path));
  emit(export_obj(doc, space_from_string(o.space)), o.out_path, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hopf fibration scenes: fibers, tori, cyclic surfaces and fiber arrangements", "hopf4d"};
  app.require_subcommand(1);
  Options o;

  const auto add_out = [&o](CLI::App* sub) {
    sub->add_option("--out", o.out_path, "Output path; standard output when omitted");
  };

  auto* fiber = app.add_subcommand("fiber", "One fiber and its images");
  fiber->add_option("--phi", o.phi, "Base longitude in radians")->required();
  fiber->add_option("--psi", o.psi, "Base polar angle in radians")->required();
  fiber->add_option("--samples", o.samples, "Samples along the fiber")->capture_default_str();
  add_out(fiber);

  auto* torus = app.add_subcommand("torus", "Hopf torus over a base circle");
  torus->add_option("--mode", o.mode, "kappa (fixed psi) or mu (fixed phi)")
      ->required()
      ->check(CLI::IsMember({"kappa", "mu"}));
  torus->add_option("--psi", o.psi_opt, "Polar angle for kappa");
  torus->add_option("--phi", o.phi_opt, "Longitude for mu");
  torus->add_option("--grid", o.grid, "Samples as NUxNV")->capture_default_str();
  add_out(torus);

  auto* nested = app.add_subcommand("nested", "Nested torus family");
  nested->add_option("--family", o.family, "xy or z")->required()->check(CLI::IsMember({"xy", "z"}));
  nested->add_option("--count", o.count, "Family size (12 for xy, 6 for z)");
  nested->add_option("--grid", o.grid, "Samples as NUxNV")->capture_default_str();
  nested->add_flag("--beta-window", o.beta_window, "Cut the xy tori open to beta' in [pi/6, 3pi/2]");
  add_out(nested);

  auto* lift = app.add_subcommand("lift", "Cyclic surface over a base curve");
  lift->add_option("--curve", o.curve_path, "CSV of phi,psi rows")->required();
  lift->add_flag("--closed", o.closed, "Treat the curve as closed");
  lift->add_option("--n-beta", o.n_beta, "Samples along each fiber")->capture_default_str();
  add_out(lift);

  auto* arcs = app.add_subcommand("arcs", "Shape pipeline from planar circular arcs");
  arcs->add_option("--spec", o.spec_path, "JSON file of arcs")->required();
  arcs->add_option("--samples-per-arc", o.samples_per_arc)->capture_default_str();
  arcs->add_option("--n-beta", o.n_beta, "Samples along each fiber")->capture_default_str();
  add_out(arcs);

  auto* modulation = app.add_subcommand("modulation", "PolSK-PSK constellation");
  modulation->add_option("--poly", o.poly, "Polyhedron kind")->required();
  modulation->add_option("--m", o.m, "Phase points per fiber")->required();
  modulation->add_option("--beta-offset", o.beta_offset)->capture_default_str();
  add_out(modulation);

  auto* packing = app.add_subcommand("packing", "Twisted filament packing");
  packing->add_option("--poly", o.poly, "Polyhedron kind")->required();
  packing->add_option("--radius", o.radius, "Angular disk radius; default is the largest");
  packing->add_option("--samples", o.samples, "Samples along each backbone")->capture_default_str();
  add_out(packing);

  auto* exporter = app.add_subcommand("export", "Export one space of a scene");
  exporter->add_option("--in", o.in_path, "Scene JSON")->required();
  exporter->add_option("--space", o.space, "xi, omega or stereo")
      ->required()
      ->check(CLI::IsMember({"xi", "omega", "stereo"}));
  exporter->add_option("--format", o.format)->check(CLI::IsMember({"obj"}))->capture_default_str();
  add_out(exporter);

  auto* verify = app.add_subcommand("verify", "Run the property suites");
  std::vector<std::string> suites = verify::suite_names();
  suites.emplace_back("all");
  verify->add_option("--suite", o.suite)->check(CLI::IsMember(suites))->capture_default_str();

  auto* serve_cmd = app.add_subcommand("serve", "Serve POST /scene over HTTP");
  serve_cmd->add_option("--host", o.host)->capture_default_str();
  serve_cmd->add_option("--port", o.port)->capture_default_str();

  std::vector<const char*> argv{"hopf4d"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::optional<SceneRequest> request;
    if (fiber->parsed()) {
      request = FiberRequest{o.phi, o.psi, o.samples};
    } else if (torus->parsed()) {
      request = torus_request(o);
    } else if (nested->parsed()) {
      request = nested_request(o);
    } else if (lift->parsed()) {
      CurveLiftRequest r;
      r.curve = {curve_from_csv(read_file(o.curve_path)), o.closed};
      r.n_beta = o.n_beta;
      request = r;
    } else if (arcs->parsed()) {
      request = ArcsRequest{arcs_from_json(read_file(o.spec_path)), o.samples_per_arc, o.n_beta};
    } else if (modulation->parsed()) {
      request = ModulationRequest{polyhedron_kind_from_string(o.poly), o.m, o.beta_offset};
    } else if (packing->parsed()) {
      request = PackingRequest{polyhedron_kind_from_string(o.poly), o.radius, o.samples};
    } else if (exporter->parsed()) {
      return run_export(o, out);
    } else if (verify->parsed()) {
      return run_verify(o, out);
    } else if (serve_cmd->parsed()) {
      return serve(o.host, o.port, err);
    }
    emit(write_scene(build_scene(*request)), o.out_path, out);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_math_domain(e.code()) ? kExitDomain : kExitUsage;
  }
}

HttpReply handle_scene_request(const std::string& body) {
  try {
    return {200, "application/json", write_scene(build_scene(request_from_json(body)))};
  } catch (const Error& e) {
    const nlohmann::json reply{{"error", std::string(to_string(e.code()))}, {"message", e.message()}};
    return {422, "application/json", reply.dump() + "\n"};
  }
}

}  // namespace hopf4d::cli

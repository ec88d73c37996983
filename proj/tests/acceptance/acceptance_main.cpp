// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any line fails.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hopf4d/cli.hpp"
#include "hopf4d/error.hpp"
#include "hopf4d/scene.hpp"
#include "hopf4d/verify.hpp"

namespace {

struct Criterion {
  const char* label;
  const char* suite;
};

const Criterion kCriteria[] = {
    {"fiber-norm", "prop1"},
    {"fiber-projects-to-point", "prop2"},
    {"fibers-disjoint", "prop3"},
    {"stereo-closed-form", "stereo"},
    {"stereo-conformal", "conformality"},
    {"fibers-linked", "linking"},
    {"torus-invariants", "torus"},
    {"nested-families", "nested"},
    {"modulation-constellation", "modulation"},
    {"packing-graphs", "packing"},
};

std::size_t count_prefix(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) {
    n += line.rfind(prefix, 0) == 0;
  }
  return n;
}

// The determinism criterion goes through the command line entry point so the
// file writing path is covered too.
hopf4d::verify::CheckResult cli_determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "hopf4d_acceptance";
  fs::create_directories(dir);
  const std::string a = (dir / "a.json").string();
  const std::string b = (dir / "b.json").string();
  const std::string torus = (dir / "torus.json").string();
  const std::string obj = (dir / "torus.obj").string();

  std::ostringstream out;
  std::ostringstream err;
  auto run = [&](const std::vector<std::string>& args) { return hopf4d::cli::run(args, out, err); };

  hopf4d::verify::CheckResult result{"determinism", false, ""};
  if (run({"nested", "--family", "xy", "--count", "12", "--out", a}) != 0 ||
      run({"nested", "--family", "xy", "--count", "12", "--out", b}) != 0 ||
      run({"torus", "--mode", "kappa", "--psi", "1.5707963267948966", "--grid", "96x96", "--out", torus}) != 0 ||
      run({"export", "--in", torus, "--space", "xi", "--format", "obj", "--out", obj}) != 0) {
    result.detail = "cli run failed: " + err.str();
    fs::remove_all(dir);
    return result;
  }
  const std::string bytes_a = hopf4d::read_file(a);
  const bool identical = bytes_a == hopf4d::read_file(b);
  const std::string text = hopf4d::read_file(obj);
  const std::size_t v = count_prefix(text, "v ");
  const std::size_t f = count_prefix(text, "f ");
  fs::remove_all(dir);

  result.passed = identical && v == 9216 && f == 9216;
  result.detail = std::string(identical ? "nested files identical" : "nested files differ") + " (" +
                  std::to_string(bytes_a.size()) + " bytes), obj " + std::to_string(v) + " v " +
                  std::to_string(f) + " f";
  return result;
}

bool report(const char* label, const std::vector<hopf4d::verify::CheckResult>& results) {
  bool ok = !results.empty();
  std::string detail;
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (!detail.empty()) detail += "; ";
    detail += r.name + ": " + r.detail;
  }
  std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", label, detail.c_str());
  return ok;
}

}  // namespace

int main() {
  const std::uint64_t seed = hopf4d::verify::seed_from_env();
  std::printf("seed %llu\n", static_cast<unsigned long long>(seed));
  bool all = true;
  for (const auto& c : kCriteria) {
    std::vector<hopf4d::verify::CheckResult> results;
    try {
      results = hopf4d::verify::run_suite(c.suite, seed);
    } catch (const std::exception& e) {
      results.push_back({c.suite, false, e.what()});
    }
    all = report(c.label, results) && all;
  }
  std::vector<hopf4d::verify::CheckResult> determinism;
  try {
    determinism = hopf4d::verify::run_suite("determinism", seed);
    determinism.push_back(cli_determinism());
  } catch (const std::exception& e) {
    determinism.push_back({"determinism", false, e.what()});
  }
  all = report("determinism", determinism) && all;
  std::fflush(stdout);
  return all ? 0 : 1;
}

#pragma once

// Property suites run by `hopf4d verify` and the acceptance binary.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hopf4d::verify {

/// Used when HOPF4D_SEED is unset.
inline constexpr std::uint64_t kDefaultSeed = 16625;

/// Reads HOPF4D_SEED (decimal or 0x-prefixed hex). Unset or unparsable
/// values give kDefaultSeed.
std::uint64_t seed_from_env();

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// prop1, prop2, prop3, stereo, conformality, linking, torus, nested,
/// modulation, packing, determinism.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws Error(InvalidArgument)
/// for unknown names.
std::vector<CheckResult> run_suite(std::string_view name, std::uint64_t seed);

/// One "PASS name: detail" or "FAIL name: detail" line per result.
std::string format_report(const std::vector<CheckResult>& results);

}  // namespace hopf4d::verify

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cuspsum {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

enum class VerifySuite { Identities, Theorem, Sharpness, Oracle };

/// Accepts identities, theorem, sharpness, oracle; throws std::invalid_argument otherwise.
VerifySuite parse_verify_suite(std::string_view name);
std::string_view to_string(VerifySuite suite);

/// Runs one invariant suite over denominators up to q_max. Randomized
/// sampling is driven by `seed` and is reproducible.
std::vector<CheckResult> run_verify_suite(VerifySuite suite, std::int64_t q_max, std::uint64_t seed);

}  // namespace cuspsum

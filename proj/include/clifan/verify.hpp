#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clifan/json_io.hpp"
#include "clifan/psi.hpp"

namespace clifan {

struct VerifyConfig {
  std::vector<int> dimensions{2, 3, 4, 5};
  int trials = 50;
  std::uint64_t seed = 1;
  /// Negative control: "recursion" swaps Ψ_1 for Ψ_1 + I on the right-hand
  /// side of the recursion identity.
  std::optional<std::string> fault;
};

struct IdentityResult {
  std::string name;
  int m = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::optional<Verdict> counterexample;  // first failure

  bool passed() const { return failures == 0; }
};

struct VerifyReport {
  std::vector<IdentityResult> results;
  bool all_passed() const;
};

/// Identity suite over every configured dimension. Output order is the
/// declaration order of the identities, then dimension.
VerifyReport run_verification(const VerifyConfig& config);

std::string format_text(const VerifyReport& report);
json report_to_json(const VerifyReport& report);

/// One worked example with its expected and computed outcome.
struct DemoCase {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
};

std::vector<DemoCase> run_demo();

}  // namespace clifan

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace psl2ogs {

/// Inputs that broke a check together with what was expected and found.
struct Counterexample {
  std::vector<std::pair<std::string, std::int64_t>> inputs;
  std::string expected;
  std::string actual;
};

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::optional<Counterexample> counterexample;  // set iff status == Fail
  std::string skip_reason;                        // set iff status == Skip
  double elapsed_ms = 0.0;

  bool passed() const noexcept { return status != CheckStatus::Fail; }
};

}  // namespace psl2ogs

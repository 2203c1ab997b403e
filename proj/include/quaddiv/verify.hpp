#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quaddiv/checked.hpp"

namespace quaddiv {

enum class VerifyLevel { Quick, Full };

struct SuiteResult {
  std::string name;
  u64 checks = 0;
  u64 failures = 0;
  std::vector<std::string> notes;

  bool passed() const { return failures == 0; }
};

/// Names accepted by run_suite, in a fixed order.
const std::vector<std::string>& suite_names();

/// Runs one self-check suite. Unknown names are rejected as invalid input.
SuiteResult run_suite(std::string_view name, VerifyLevel level);

}  // namespace quaddiv

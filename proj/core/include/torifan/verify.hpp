#pragma once

#include <string>
#include <vector>

namespace torifan {

enum class CheckStatus { Pass, Fail, Audit };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Audit: return "AUDIT";
  }
  return "?";
}

// One row of the verification table. PASS iff expected == computed byte for
// byte; the two AUDIT rows carry a claimed value that the engine knowingly
// contradicts, and fail instead if the engine stops reproducing its own value.
struct CheckResult {
  std::string id;
  std::string group;
  std::string expected;
  std::string computed;
  CheckStatus status;
  std::string citation;
};

std::vector<std::string> check_groups();

// Runs the fixed checklist, optionally restricted to one group.
std::vector<CheckResult> run_checks(const std::string& only = "");

}  // namespace torifan

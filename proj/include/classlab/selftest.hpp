#pragma once

#include <functional>
#include <string>
#include <vector>

#include "classlab/universe.hpp"

namespace classlab {

struct CheckResult {
  std::string name;
  std::string status;  // pass, fail or skipped
  std::size_t cases = 0;
  std::vector<std::string> witnesses;  // failing cases, or the skip reason
  double seconds = 0;
};

/// Collects the cases of one check.
class Recorder {
 public:
  void expect(bool ok, const std::string& witness);
  std::size_t cases() const { return cases_; }
  std::size_t failures() const { return failures_; }
  const std::vector<std::string>& witnesses() const { return witnesses_; }

 private:
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> witnesses_;
};

struct Check {
  std::string name;
  double budget_seconds = 0;  // 0 means no budget
  std::function<void(const Catalog&, Recorder&)> run;
};

/// Property checks of every module, named `<module>.<property>`.
std::vector<Check> invariant_checks();
/// Acceptance criteria 1 to 11, named `acceptance.acNN_<topic>`, with their
/// time budgets.
std::vector<Check> acceptance_checks();

/// Runs one check. CapExceeded marks it skipped; any other error fails it with
/// the message as witness. A check exceeding its budget fails.
CheckResult run_check(const Check& check, const Catalog& universe);

/// Runs every check whose name contains `filter`, in a fixed order.
std::vector<CheckResult> run_selftest(const Catalog& universe, const std::string& filter = "");

}  // namespace classlab

#ifndef FAN_VERIFY_HPP
#define FAN_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace fan {

struct CheckResult {
  std::string name;    // what is being checked
  std::string anchor;  // stable identifier of the verified identity/bound
  double value = 0.0;  // worst observed value
  double threshold = 0.0;
  bool pass = false;
  std::string details;
};

struct SuiteReport {
  std::string suite;
  std::map<std::string, double> params;
  std::vector<CheckResult> checks;
  double elapsed_seconds = 0.0;

  bool all_pass() const;
};

/// Registered suite names, in the order they are meant to run.
std::vector<std::string> suite_names();

/// Runs one suite. Overrides: seed, tol, degree, trials, m_max, points
/// (unknown keys rejected). Throws std::invalid_argument for unknown suites.
SuiteReport run_suite(const std::string& name,
                      const std::map<std::string, double>& overrides = {});

nlohmann::json suite_report_to_json(const SuiteReport& report);

}  // namespace fan

#endif

#pragma once

// Numerical certification of the game's structural results. Each check runs a
// self-contained experiment and compares a measured quantity to a tolerance.

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "turret/sweep.hpp"

namespace turret {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Worst-case value of the quantity the check bounds.
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
  double seconds = 0.0;
};

// Reference scenarios shared by the checks, the example configs and the tests.

/// A1 = (1.5, 0.4), A2 = (1.1, -0.35), turret at 0; a guaranteed dilemma at (0.2, 0.7).
[[nodiscard]] GameState guaranteed_dilemma_state();
[[nodiscard]] SpeedParams guaranteed_dilemma_speeds();
/// A1 = (2.2, 0.7), A2 = (1.66, -1.3), turret at 0; both overlaps exist and the attackers can force at (0.25, 0.7).
[[nodiscard]] GameState forcing_state();
[[nodiscard]] SpeedParams forcing_speeds();
/// Region map over A2 with A1 = (1.5, 0.4), turret at 0, speeds (0.2, 0.7).
[[nodiscard]] SweepSpec region_map_spec(int n);

[[nodiscard]] CheckResult check_boundary_rate_sharpness();
[[nodiscard]] CheckResult check_runner_solver();
[[nodiscard]] CheckResult check_runner_sensitivity();
[[nodiscard]] CheckResult check_two_attacker_boundary_speed();
[[nodiscard]] CheckResult check_distance_rates();
[[nodiscard]] CheckResult check_forcing_invariance();
[[nodiscard]] CheckResult check_open_loop_table();
[[nodiscard]] CheckResult check_avoid_dilemma();
[[nodiscard]] CheckResult check_region_map();
[[nodiscard]] CheckResult check_information_limiting();

struct CheckEntry {
  int id;
  const char* name;
  std::function<CheckResult()> run;
};

/// All checks in order.
[[nodiscard]] const std::vector<CheckEntry>& all_checks();

/// Runs the selected checks (all when ids is empty), reporting each as it finishes.
std::vector<CheckResult> run_checks(const std::vector<int>& ids = {},
                                    const std::function<void(const CheckResult&)>& on_result = {});

/// One human-readable line: "[PASS] 3 name: measured ... (tol ...) detail".
[[nodiscard]] std::string format_check(const CheckResult& r);
[[nodiscard]] nlohmann::json checks_json(const std::vector<CheckResult>& results);

}  // namespace turret

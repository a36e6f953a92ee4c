#pragma once

// Complete-information game between the turret and two attackers that
// cooperate as a runner (captured first) and a penetrator.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "turret/circle.hpp"
#include "turret/state.hpp"

namespace turret {

/// The runner cannot be captured outside the target.
class NoCapture : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Capture order first -> second, attacker ids 0/1.
struct CaptureOrder {
  int first = 0;
  int second = 1;

  [[nodiscard]] static CaptureOrder runner(int i) noexcept { return {i, other(i)}; }
  bool operator==(const CaptureOrder&) const = default;
};

[[nodiscard]] std::string to_string(const CaptureOrder& o);

struct RunnerSolution {
  /// Angle the turret rotates before aligning with the runner.
  double theta_tilde = 0.0;
  /// Radius at which the runner is captured.
  double capture_radius = 0.0;
};

/// Smallest root of r sin(x - theta_rel) = nu x with x >= theta_rel.
/// Throws NoCapture when no root exists or the capture happens inside the target.
[[nodiscard]] RunnerSolution solve_theta_tilde(double r, double theta_rel, double nu);
[[nodiscard]] std::optional<RunnerSolution> try_solve_theta_tilde(double r, double theta_rel, double nu) noexcept;

/// Residual r sin(x - theta_rel) - nu x.
[[nodiscard]] double runner_residual(double r, double theta_rel, double nu, double x) noexcept;

/// Two-attacker value for a turret at theta_T; negative means both are captured.
[[nodiscard]] double v_2v1(const AttackerPolar& runner, const AttackerPolar& penetrator, double theta_T, double nu);
[[nodiscard]] double v_2v1(const GameState& s, const CaptureOrder& order, double nu);
/// Same, with an unsolvable runner reported as +infinity.
[[nodiscard]] double v_2v1_or_inf(const AttackerPolar& runner, const AttackerPolar& penetrator, double theta_T,
                                  double nu) noexcept;

/// Turret angles from which both attackers are captured in the given order.
/// Anchored at the runner and extended toward the penetrator on either side, and
/// limited to angles from which the runner alone could be captured.
[[nodiscard]] ArcSet region_2v1(const AttackerPolar& a1, const AttackerPolar& a2, const CaptureOrder& order,
                                double nu);

/// Optimal runner and penetrator motions. The pair is indexed by role (runner, penetrator).
[[nodiscard]] std::pair<Motion, Motion> attacker_2v1_controls(const GameState& s, const CaptureOrder& order,
                                                              double nu);
/// Runner heading against a turret at theta_T.
[[nodiscard]] Motion runner_motion(const AttackerPolar& runner, double theta_T, double nu);

/// d(theta_tilde)/d(theta_T) = -a/(a-1), a = (r/nu) cos(theta_tilde - theta_rel).
[[nodiscard]] double dtheta_tilde_dtheta_T(double r, double theta_rel, double nu);

}  // namespace turret

#pragma once

// Turret and attacker feedback policies.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "turret/regions.hpp"

namespace turret {

struct Controls {
  double omega_T = 0.0;
  std::array<Motion, kNumAttackers> attackers{};
};

struct TurretContext {
  const GameState& state;
  const SpeedParams& speeds;
  /// Regions of the current state; null unless the policy asked for them.
  const RegionBundle* regions = nullptr;
  /// Largest attacker speed seen so far.
  double max_observed_speed = 0.0;
};

struct AttackerContext {
  const GameState& state;
  const SpeedParams& speeds;
  /// The attackers' true maximum speed.
  double true_nu = 0.0;
  /// Turret rate chosen for this step.
  double omega_T = 0.0;
  const RegionBundle* regions = nullptr;
  /// Policies append human-readable notes here (fallbacks and the like).
  std::vector<std::string>* notes = nullptr;
};

struct TurretPolicy {
  std::string name;
  std::function<double(const TurretContext&)> fn;
  bool needs_regions = false;

  double operator()(const TurretContext& c) const { return fn(c); }
};

struct AttackerPolicy {
  std::string name;
  std::function<std::array<Motion, kNumAttackers>(const AttackerContext&)> fn;
  bool needs_regions = false;
  /// Needs the fast two-attacker regions as well.
  bool needs_full_regions = false;
  /// Speed never exceeds nu_slow and output does not depend on the true speed.
  bool information_limiting = false;

  std::array<Motion, kNumAttackers> operator()(const AttackerContext& c) const { return fn(c); }
};

/// Policy selection as it appears in run configurations.
struct PolicySpec {
  std::string name;
  int attacker = 0;
  Rotation direction = Rotation::CW;
  std::uint64_t seed = 0;
  double interval = 0.05;
  /// Speed class for complete-information attacker play; "true" uses the true speed.
  std::string speed = "true";

  bool operator==(const PolicySpec&) const = default;
};

/// Throws std::invalid_argument for an unknown name or bad parameters.
[[nodiscard]] TurretPolicy make_turret_policy(const PolicySpec& spec);
[[nodiscard]] AttackerPolicy make_attacker_policy(const PolicySpec& spec);

[[nodiscard]] const std::vector<std::string>& turret_policy_names();
[[nodiscard]] const std::vector<std::string>& attacker_policy_names();

// Building blocks, exposed for tests.

/// Slow speed along the heading that is optimal at the fast speed.
[[nodiscard]] std::array<Motion, kNumAttackers> ss_fh(const GameState& s, const SpeedParams& p);

/// Slow two-attacker play against a hypothetical turret on the nearest edge of r2v1.
/// Falls back to ss_fh (with a note) when the slow overlap is empty or unsolvable.
[[nodiscard]] std::array<Motion, kNumAttackers> two_v_one_slow(const GameState& s, const SpeedParams& p,
                                                               const RegionBundle& b,
                                                               std::vector<std::string>* notes = nullptr);

/// Two-attacker slow play when the slow overlap is closer than r1v1, otherwise ss_fh.
[[nodiscard]] std::array<Motion, kNumAttackers> forcing_switch(const GameState& s, const SpeedParams& p,
                                                               const RegionBundle& b,
                                                               std::vector<std::string>* notes = nullptr);

/// Complete-information response at the true speed to the turret's current rotation.
[[nodiscard]] std::array<Motion, kNumAttackers> informed_response(const GameState& s, double nu, double omega_T);

/// Sign in {-1, +1} of a seeded random walk on slot floor(t / interval).
[[nodiscard]] double random_sign(std::uint64_t seed, double t, double interval);

/// Alive attacker the turret is heading for: first reached when rotating by sgn(omega).
[[nodiscard]] int rotation_target(const GameState& s, double omega_T);

}  // namespace turret

#pragma once

#include <array>

#include "turret/one_vs_one.hpp"

namespace turret {

/// Attacker identifiers are 0 and 1 internally; text output uses A1 and A2.
inline constexpr int kNumAttackers = 2;

[[nodiscard]] constexpr int other(int i) noexcept { return 1 - i; }

/// Full game state: turret angle, both attackers, who is still in play, and time.
struct GameState {
  double theta_T = 0.0;
  std::array<AttackerPolar, kNumAttackers> attackers{};
  std::array<bool, kNumAttackers> alive{true, true};
  double t = 0.0;

  [[nodiscard]] double rel(int i) const noexcept { return signed_diff(attackers[i].theta, theta_T); }
  [[nodiscard]] int alive_count() const noexcept { return int(alive[0]) + int(alive[1]); }

  bool operator==(const GameState&) const = default;
};

}  // namespace turret

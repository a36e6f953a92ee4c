#pragma once

// Case taxonomy for the turret facing two attackers of unknown speed.

#include <optional>
#include <string>

#include "turret/regions.hpp"

namespace turret {

enum class Case {
  GuaranteedTwoCaptures,
  UncapturableSlow,
  UncapturableFast,
  InconsequentialSpeed,
  MatchingDirections,
  GuaranteedDilemma,
  AvoidDilemma,
  ForceDilemma,
};

inline constexpr int kNumCases = 8;

[[nodiscard]] const char* to_string(Case c) noexcept;
[[nodiscard]] std::optional<Case> case_from_string(const std::string& s);
/// True for the three labels in which the turret must eventually guess the speed.
[[nodiscard]] bool is_dilemma(Case c) noexcept;

/// Every set membership consulted on the way to the label.
struct Memberships {
  bool in_u2_fast = false;
  bool in_u1_slow = false;
  bool in_u1_fast = false;
  bool in_u2_slow = false;
  std::array<bool, kNumAttackers> in_two_slow{};
  std::array<bool, kNumAttackers> in_one_fast{};
  bool i1_fast_empty = true;
  bool i2_slow_empty = true;
  bool in_r1v1 = false;
  bool in_r2v1 = false;
};

struct Classification {
  Case label = Case::UncapturableSlow;
  Memberships m;
  /// Capture order of the slow two-attacker region containing the turret, if any.
  std::optional<CaptureOrder> slow_order;
  /// Attacker whose fast single-attacker region pairs with slow_order.
  std::optional<int> fast_attacker;
};

[[nodiscard]] Classification classify(const GameState& s, const SpeedParams& p);
[[nodiscard]] Classification classify(const GameState& s, const SpeedParams& p, const RegionBundle& b);

}  // namespace turret

#pragma once

// Fixed-step integration of the turret and attacker dynamics with capture and
// breach detection.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turret/strategies.hpp"

namespace turret {

struct Tolerances {
  /// Alignment below this counts as capture even without a sign change.
  double capture = 1e-6;
  /// Attackers within this distance of the target count as breached.
  double breach = 1e-9;

  bool operator==(const Tolerances&) const = default;
};

struct SimConfig {
  GameState initial;
  SpeedParams speeds;
  Speed true_speed = Speed::Slow;
  TurretPolicy turret;
  AttackerPolicy attackers;
  double dt = 1e-3;
  double t_max = 30.0;
  Tolerances tol;
  /// Compute r1v1/r2v1 distances every step even if no policy needs them.
  bool track_regions = false;
  /// Stop as soon as both overlap regions have vanished (after having existed).
  bool stop_when_regions_vanish = false;

  [[nodiscard]] double true_nu() const noexcept {
    return true_speed == Speed::Slow ? speeds.nu_slow : speeds.nu_fast;
  }
};

enum class EventKind { Capture, Breach, RegionVanished, Note };
[[nodiscard]] const char* to_string(EventKind k) noexcept;

struct Event {
  EventKind kind = EventKind::Note;
  double t = 0.0;
  int attacker = -1;
  std::string detail;
};

struct Sample {
  double t = 0.0;
  GameState state;
  Controls controls;
  /// Present when regions were computed for this step.
  std::optional<DilemmaDistances> dist;
  double measure_r1v1 = 0.0;
  double measure_r2v1 = 0.0;
};

struct Trajectory {
  std::vector<Sample> samples;
  std::vector<Event> events;
  int J = 0;
  std::array<std::optional<double>, kNumAttackers> t_final{};
  double t_F = 0.0;
  bool horizon_reached = false;
  /// State at the end of the run.
  GameState final_state;

  [[nodiscard]] int captures() const noexcept;
  [[nodiscard]] std::optional<double> first_removal() const noexcept;
};

/// One explicit fourth-order step of the polar dynamics with controls held fixed.
[[nodiscard]] GameState step(const GameState& s, const Controls& c, double dt);

/// Capture and breach events between two consecutive states. Event times are
/// interpolated linearly inside the step; when both happen to one attacker the
/// earlier one wins and a tie counts as capture.
[[nodiscard]] std::vector<Event> detect_events(const GameState& prev, const GameState& next, const Tolerances& tol);

[[nodiscard]] Trajectory simulate(const SimConfig& cfg);

/// Terminal payoffs of the four open-loop commitments from a guaranteed-dilemma state.
/// Rows: aggressive, conservative; columns: slow, fast.
struct OpenLoopMatrix {
  Rotation aggressive = Rotation::CW;
  std::array<std::array<int, 2>, 2> J{};
};

/// Throws std::invalid_argument when the state is not a guaranteed dilemma.
[[nodiscard]] OpenLoopMatrix open_loop_matrix(const GameState& s, const SpeedParams& p, double dt = 1e-3,
                                              double t_max = 60.0);

}  // namespace turret

#pragma once

// Winning regions of the turret on the circle and the derived overlap and
// reachability sets used to decide whether the turret faces a dilemma.

#include <array>
#include <span>
#include <vector>

#include "turret/circle.hpp"
#include "turret/state.hpp"
#include "turret/two_vs_one.hpp"

namespace turret {

enum class Speed { Slow, Fast };

struct RegionBundle {
  /// Single-attacker winning arcs, indexed by attacker.
  std::array<ArcSet, kNumAttackers> one_slow;
  std::array<ArcSet, kNumAttackers> one_fast;
  /// Two-attacker winning arcs, indexed by the attacker captured first.
  std::array<ArcSet, kNumAttackers> two_slow;
  std::array<ArcSet, kNumAttackers> two_fast;

  ArcSet i1_fast;
  ArcSet u1_fast;
  ArcSet u1_slow;
  ArcSet i2_slow;
  ArcSet u2_slow;
  ArcSet u2_fast;
  /// Turret angles from which the fast single-attacker overlap can still be entered.
  ArcSet r1v1;
  /// Equal to i2_slow.
  ArcSet r2v1;

  [[nodiscard]] const ArcSet& one(Speed s, int i) const { return s == Speed::Slow ? one_slow[i] : one_fast[i]; }
  [[nodiscard]] const ArcSet& two(Speed s, int runner) const {
    return s == Speed::Slow ? two_slow[runner] : two_fast[runner];
  }
};

/// Computes every region for the state. Removed attackers contribute empty sets.
[[nodiscard]] RegionBundle build_regions(const GameState& s, const SpeedParams& p);

/// Arc with the center of i1 and its half-width scaled by 1/alpha, clamped to the circle.
/// Throws std::invalid_argument when i1 has more than one component.
[[nodiscard]] ArcSet r1v1_set(const ArcSet& i1, const SpeedParams& p);

struct DilemmaDistances {
  double d1 = kNoBoundary;
  double d2 = kNoBoundary;
  double theta_B1 = 0.0;
  double theta_B2 = 0.0;
  /// Direction from the turret toward each boundary.
  Rotation side1 = Rotation::CW;
  Rotation side2 = Rotation::CCW;
};

/// Distances from the turret to the nearest boundary points of r1v1 and r2v1.
[[nodiscard]] DilemmaDistances dilemma_distances(double theta_T, const RegionBundle& b);

/// Rate of the far edge of r1v1 given the rates of the two edges of the fast overlap.
[[nodiscard]] double theta_ub_rate(double dot_theta1, double dot_theta2, const SpeedParams& p) noexcept;

/// How to read the closed-form region boundaries for the second attacker's position.
/// AsPrinted follows the published formulas literally; Derived re-derives them from
/// the arc edges (see README).
enum class BoundaryReading { AsPrinted, Derived };

[[nodiscard]] const char* to_string(BoundaryReading r) noexcept;

using Polyline = std::vector<std::array<double, 2>>;

struct BoundaryCurves {
  /// A2 positions where the fast single-attacker arcs start to overlap.
  Polyline existence;
  /// A2 positions where the far edge of r1v1 passes through the turret, proper overlap.
  Polyline nominal;
  /// Same, when A2's fast arc lies inside A1's.
  Polyline degenerate;
};

/// theta_A2 on each curve for a fixed A1 and turret angle, sampled at the given radii.
/// Angles are left unwrapped near theta_T.
[[nodiscard]] BoundaryCurves boundary_curves(const AttackerPolar& a1, double theta_T, const SpeedParams& p,
                                                 std::span<const double> radii, BoundaryReading reading);

[[nodiscard]] double existence_theta(const AttackerPolar& a1, double r2, const SpeedParams& p, BoundaryReading reading);
[[nodiscard]] double nominal_theta(const AttackerPolar& a1, double r2, double theta_T, const SpeedParams& p,
                                   BoundaryReading reading);
[[nodiscard]] double degenerate_theta(const AttackerPolar& a1, double r2, double theta_T, const SpeedParams& p,
                                      BoundaryReading reading);

}  // namespace turret

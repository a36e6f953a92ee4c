#pragma once

// Complete-information game between the turret and a single attacker.

#include <stdexcept>

#include "turret/circle.hpp"

namespace turret {

/// Attacker position in polar coordinates, radii in target-radius units.
struct AttackerPolar {
  double r = 1.0;
  double theta = 0.0;

  bool operator==(const AttackerPolar&) const = default;
};

/// Attacker speed and heading. The heading is measured from the inward radial
/// direction; positive headings turn the attacker CCW around the origin.
struct Motion {
  double speed = 0.0;
  double heading = 0.0;

  bool operator==(const Motion&) const = default;
};

/// The two candidate speed ratios.
struct SpeedParams {
  double nu_slow = 0.2;
  double nu_fast = 0.7;

  [[nodiscard]] double alpha() const noexcept { return nu_slow / nu_fast; }
  [[nodiscard]] double beta() const noexcept { return nu_fast / nu_slow; }

  /// Throws std::invalid_argument unless 0 < nu_slow < nu_fast <= 1.
  void validate() const;

  bool operator==(const SpeedParams&) const = default;
};

/// sqrt((r/nu)^2 - 1) - acos(nu/r). Throws std::domain_error for r < nu.
[[nodiscard]] double barrier_f(double r, double nu);

/// Value of the single-attacker game of kind; positive means the attacker breaches.
[[nodiscard]] double v_1v1(double r, double theta_rel, double nu);

/// Half-width of the turret-winning arc around the attacker.
[[nodiscard]] double w_1v1(double r, double nu);

/// Turret angles from which the turret captures the attacker.
[[nodiscard]] ArcSet region_1v1(const AttackerPolar& a, double nu);

/// Optimal attacker motion: full speed toward the tangent point of the radius-nu circle,
/// turning away from the turret.
[[nodiscard]] Motion attacker_1v1_heading(double r, double theta_rel, double nu);

/// Angular rate of the CW edge of the attacker's winning arc for the given motion.
[[nodiscard]] double lb_boundary_rate(double r, double heading, double speed, double nu);

/// Polar rates (dr/dt, dtheta/dt) produced by a motion at radius r.
struct PolarRate {
  double dr = 0.0;
  double dtheta = 0.0;
};
[[nodiscard]] PolarRate polar_rate(double r, const Motion& m) noexcept;

}  // namespace turret

#pragma once

// Random game states for property tests.

#include "gen.hpp"
#include "turret/state.hpp"

namespace turret::testing {

inline GameState random_state(Gen& g, double r_max = 3.0) {
  GameState s;
  s.theta_T = g.uniform(-kPi, kPi);
  for (auto& a : s.attackers) a = {g.uniform(1.0, r_max), g.uniform(-kPi, kPi)};
  return s;
}

/// Same state rotated by phi, or reflected through the turret axis.
inline GameState rotated(GameState s, double phi) {
  s.theta_T = canonical(s.theta_T + phi);
  for (auto& a : s.attackers) a.theta = canonical(a.theta + phi);
  return s;
}

inline GameState mirrored(GameState s) {
  s.theta_T = canonical(-s.theta_T);
  for (auto& a : s.attackers) a.theta = canonical(-a.theta);
  return s;
}

}  // namespace turret::testing

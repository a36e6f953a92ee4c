#include "turret/strategies.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "turret/classifier.hpp"

namespace turret {

namespace {

// Keeps a stalling attacker this far inside its own winning set.
constexpr double kStallMargin = 0.05;

using Motions = std::array<Motion, kNumAttackers>;

double pursue(const GameState& s, int i) {
  if (!s.alive[i]) i = other(i);
  if (!s.alive[i]) return 0.0;
  return sgn_nonzero(s.rel(i));
}

double seek(double theta_T, const ArcSet& set) {
  if (set.is_empty() || set.contains(theta_T)) return 0.0;
  const auto nb = nearest_boundary(theta_T, set);
  if (nb.distance == kNoBoundary) return 0.0;
  return sign_of(nb.direction);
}

Motion tangent(const AttackerPolar& a, double theta_T, double nu) {
  return attacker_1v1_heading(a.r, signed_diff(a.theta, theta_T), nu);
}

Motions all_tangent(const GameState& s, double nu) {
  Motions m{};
  for (int i = 0; i < kNumAttackers; ++i) {
    if (s.alive[i]) m[i] = tangent(s.attackers[i], s.theta_T, nu);
  }
  return m;
}

double resolve_speed(const std::string& speed, const AttackerContext& c) {
  if (speed == "slow") return c.speeds.nu_slow;
  if (speed == "fast") return c.speeds.nu_fast;
  return c.true_nu;
}

void note(std::vector<std::string>* notes, std::string msg) {
  if (notes) notes->push_back(std::move(msg));
}

// Once one attacker is gone there is nothing left to conceal.
AttackerPolicy with_survivor_rule(AttackerPolicy p) {
  auto inner = std::move(p.fn);
  p.fn = [inner = std::move(inner)](const AttackerContext& c) -> Motions {
    if (c.state.alive_count() < kNumAttackers) return all_tangent(c.state, c.true_nu);
    return inner(c);
  };
  return p;
}

}  // namespace

double random_sign(std::uint64_t seed, double t, double interval) {
  const auto slot = static_cast<std::uint64_t>(std::max(0.0, std::floor(t / interval + 1e-9)));
  std::mt19937_64 gen(seed + slot * 0x9E3779B97F4A7C15ULL);
  return (gen() >> 63) != 0 ? 1.0 : -1.0;
}

int rotation_target(const GameState& s, double omega_T) {
  if (!s.alive[0]) return 1;
  if (!s.alive[1]) return 0;
  if (omega_T == 0.0) return std::abs(s.rel(0)) <= std::abs(s.rel(1)) ? 0 : 1;
  const Rotation d = omega_T > 0.0 ? Rotation::CCW : Rotation::CW;
  const double a = rotation_to(s.theta_T, s.attackers[0].theta, d);
  const double b = rotation_to(s.theta_T, s.attackers[1].theta, d);
  return a <= b ? 0 : 1;
}

Motions ss_fh(const GameState& s, const SpeedParams& p) {
  Motions m{};
  for (int i = 0; i < kNumAttackers; ++i) {
    if (!s.alive[i]) continue;
    m[i] = {p.nu_slow, tangent(s.attackers[i], s.theta_T, p.nu_fast).heading};
  }
  return m;
}

Motions two_v_one_slow(const GameState& s, const SpeedParams& p, const RegionBundle& b,
                       std::vector<std::string>* notes) {
  if (b.r2v1.is_empty()) {
    note(notes, "two_v_one_slow: slow overlap empty, playing ss_fh");
    return ss_fh(s, p);
  }
  const auto nb = nearest_boundary(s.theta_T, b.r2v1);
  if (nb.distance == kNoBoundary) {
    note(notes, "two_v_one_slow: slow overlap has no boundary, playing ss_fh");
    return ss_fh(s, p);
  }
  // The edge belongs to whichever ordered region the turret is outside of.
  int runner = 0;
  double best = kNoBoundary;
  for (int i = 0; i < kNumAttackers; ++i) {
    for (const auto& a : b.two_slow[i].arcs()) {
      for (double e : {a.lower(), a.upper()}) {
        double gap = std::abs(signed_diff(e, nb.point));
        if (b.two_slow[i].contains(s.theta_T)) gap += 1e-9;
        if (gap < best) {
          best = gap;
          runner = i;
        }
      }
    }
  }
  GameState ghost = s;
  ghost.theta_T = nb.point;
  try {
    const auto [run, pen] = attacker_2v1_controls(ghost, CaptureOrder::runner(runner), p.nu_slow);
    Motions m{};
    m[runner] = run;
    m[other(runner)] = pen;
    return m;
  } catch (const NoCapture&) {
    note(notes, "two_v_one_slow: runner not capturable from the overlap edge, playing ss_fh");
    return ss_fh(s, p);
  }
}

Motions forcing_switch(const GameState& s, const SpeedParams& p, const RegionBundle& b,
                       std::vector<std::string>* notes) {
  const auto d = dilemma_distances(s.theta_T, b);
  if (d.d2 < d.d1) return two_v_one_slow(s, p, b, notes);
  return ss_fh(s, p);
}

Motions informed_response(const GameState& s, double nu, double omega_T) {
  if (s.alive_count() < kNumAttackers) return all_tangent(s, nu);
  const int target = rotation_target(s, omega_T);
  const int rest = other(target);
  const auto& at = s.attackers[target];
  const auto& ao = s.attackers[rest];
  const double vt = v_1v1(at.r, s.rel(target), nu);
  const double vo = v_1v1(ao.r, s.rel(rest), nu);

  Motions m{};
  m[rest] = tangent(ao, s.theta_T, nu);
  if (vt > 0.0) {
    // The pursued attacker is safe; it loiters to draw the turret away until its partner is safe too.
    if (vo <= kStallMargin && vt > kStallMargin) {
      m[target] = {nu, sgn_nonzero(s.rel(target)) * kPi / 2.0};
    } else {
      m[target] = tangent(at, s.theta_T, nu);
    }
    return m;
  }
  try {
    m[target] = runner_motion(at, s.theta_T, nu);
  } catch (const NoCapture&) {
    m[target] = tangent(at, s.theta_T, nu);
  }
  return m;
}

const std::vector<std::string>& turret_policy_names() {
  static const std::vector<std::string> names = {"pursue",      "committed",   "seek_r1v1", "seek_r2v1",
                                                 "random_walk", "avoid_dilemma", "hold"};
  return names;
}

const std::vector<std::string>& attacker_policy_names() {
  static const std::vector<std::string> names = {"ss_fh",         "two_v_one_slow",    "forcing_switch",
                                                 "random_switch", "informed_response", "ssfh_then_punish",
                                                 "two_v_one",     "tangent"};
  return names;
}

TurretPolicy make_turret_policy(const PolicySpec& spec) {
  const int idx = spec.attacker;
  if (idx < 0 || idx >= kNumAttackers) throw std::invalid_argument("turret policy: attacker index out of range");
  const std::string& n = spec.name;
  if (n == "pursue") {
    return {"pursue(A" + std::to_string(idx + 1) + ")", [idx](const TurretContext& c) { return pursue(c.state, idx); }};
  }
  if (n == "committed") {
    const double w = sign_of(spec.direction);
    return {"committed(" + to_string(spec.direction) + ")", [w](const TurretContext& c) {
              const auto& s = c.state;
              if (s.alive_count() == kNumAttackers) return w;
              return pursue(s, s.alive[0] ? 0 : 1);
            }};
  }
  if (n == "seek_r1v1") {
    return {"seek_r1v1", [](const TurretContext& c) { return c.regions ? seek(c.state.theta_T, c.regions->r1v1) : 0.0; },
            true};
  }
  if (n == "seek_r2v1") {
    return {"seek_r2v1", [](const TurretContext& c) { return c.regions ? seek(c.state.theta_T, c.regions->r2v1) : 0.0; },
            true};
  }
  if (n == "random_walk") {
    if (!(spec.interval > 0.0)) throw std::invalid_argument("random_walk: interval must be positive");
    const auto seed = spec.seed;
    const double interval = spec.interval;
    return {"random_walk(" + std::to_string(seed) + ")",
            [seed, interval](const TurretContext& c) { return random_sign(seed, c.state.t, interval); }};
  }
  if (n == "avoid_dilemma") {
    return {"avoid_dilemma(A" + std::to_string(idx + 1) + ")", [idx](const TurretContext& c) {
              const auto& s = c.state;
              if (s.alive_count() < kNumAttackers) return pursue(s, s.alive[0] ? 0 : 1);
              if (c.max_observed_speed > c.speeds.nu_slow * (1.0 + 1e-12)) {
                // Speed revealed: keep whichever single capture is still guaranteed.
                for (int k : {idx, other(idx)}) {
                  if (region_1v1(s.attackers[k], c.speeds.nu_fast).contains(s.theta_T)) return pursue(s, k);
                }
              }
              return pursue(s, idx);
            }};
  }
  if (n == "hold") return {"hold", [](const TurretContext&) { return 0.0; }};
  throw std::invalid_argument("unknown turret policy '" + n + "'");
}

AttackerPolicy make_attacker_policy(const PolicySpec& spec) {
  const std::string& n = spec.name;
  AttackerPolicy p;
  p.name = n;
  if (n == "ss_fh") {
    p.fn = [](const AttackerContext& c) { return ss_fh(c.state, c.speeds); };
    p.information_limiting = true;
  } else if (n == "two_v_one_slow") {
    p.fn = [](const AttackerContext& c) { return two_v_one_slow(c.state, c.speeds, *c.regions, c.notes); };
    p.needs_regions = true;
    p.information_limiting = true;
  } else if (n == "forcing_switch") {
    p.fn = [](const AttackerContext& c) { return forcing_switch(c.state, c.speeds, *c.regions, c.notes); };
    p.needs_regions = true;
    p.information_limiting = true;
  } else if (n == "random_switch") {
    if (!(spec.interval > 0.0)) throw std::invalid_argument("random_switch: interval must be positive");
    const auto seed = spec.seed;
    const double interval = spec.interval;
    p.name = "random_switch(" + std::to_string(seed) + ")";
    p.fn = [seed, interval](const AttackerContext& c) {
      if (random_sign(seed, c.state.t, interval) > 0.0) return two_v_one_slow(c.state, c.speeds, *c.regions, c.notes);
      return ss_fh(c.state, c.speeds);
    };
    p.needs_regions = true;
    p.information_limiting = true;
  } else if (n == "informed_response") {
    p.fn = [](const AttackerContext& c) { return informed_response(c.state, c.true_nu, c.omega_T); };
  } else if (n == "ssfh_then_punish") {
    p.fn = [](const AttackerContext& c) {
      if (is_dilemma(classify(c.state, c.speeds, *c.regions).label)) return ss_fh(c.state, c.speeds);
      return informed_response(c.state, c.true_nu, c.omega_T);
    };
    p.needs_regions = true;
    p.needs_full_regions = true;
  } else if (n == "two_v_one") {
    const int runner = spec.attacker;
    if (runner < 0 || runner >= kNumAttackers) throw std::invalid_argument("two_v_one: attacker index out of range");
    const std::string speed = spec.speed;
    p.name = "two_v_one(A" + std::to_string(runner + 1) + "," + speed + ")";
    p.fn = [runner, speed](const AttackerContext& c) {
      const double nu = resolve_speed(speed, c);
      Motions m{};
      try {
        const auto [run, pen] = attacker_2v1_controls(c.state, CaptureOrder::runner(runner), nu);
        m[runner] = run;
        m[other(runner)] = pen;
      } catch (const NoCapture&) {
        note(c.notes, "two_v_one: runner not capturable, playing tangent");
        m = all_tangent(c.state, nu);
      }
      return m;
    };
  } else if (n == "tangent") {
    const std::string speed = spec.speed;
    p.name = "tangent(" + speed + ")";
    p.fn = [speed](const AttackerContext& c) { return all_tangent(c.state, resolve_speed(speed, c)); };
  } else {
    throw std::invalid_argument("unknown attacker policy '" + n + "'");
  }
  if (spec.speed != "true" && spec.speed != "slow" && spec.speed != "fast") {
    throw std::invalid_argument("attacker policy speed must be slow, fast or true");
  }
  return with_survivor_rule(std::move(p));
}

}  // namespace turret

#include "turret/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "turret/classifier.hpp"

namespace turret {

namespace {

struct Deriv {
  double theta_T = 0.0;
  std::array<double, kNumAttackers> r{};
  std::array<double, kNumAttackers> theta{};
};

Deriv rates(const GameState& s, const Controls& c) {
  Deriv d;
  d.theta_T = c.omega_T;
  for (int i = 0; i < kNumAttackers; ++i) {
    if (!s.alive[i]) continue;
    const auto pr = polar_rate(s.attackers[i].r, c.attackers[i]);
    d.r[i] = pr.dr;
    d.theta[i] = pr.dtheta;
  }
  return d;
}

GameState advance(const GameState& s, const Deriv& d, double h) {
  GameState out = s;
  out.theta_T = s.theta_T + h * d.theta_T;
  for (int i = 0; i < kNumAttackers; ++i) {
    out.attackers[i].r = s.attackers[i].r + h * d.r[i];
    out.attackers[i].theta = s.attackers[i].theta + h * d.theta[i];
  }
  return out;
}

}  // namespace

const char* to_string(EventKind k) noexcept {
  switch (k) {
    case EventKind::Capture: return "capture";
    case EventKind::Breach: return "breach";
    case EventKind::RegionVanished: return "region_vanished";
    case EventKind::Note: return "note";
  }
  return "?";
}

int Trajectory::captures() const noexcept {
  return static_cast<int>(std::count_if(events.begin(), events.end(),
                                        [](const Event& e) { return e.kind == EventKind::Capture; }));
}

std::optional<double> Trajectory::first_removal() const noexcept {
  std::optional<double> t;
  for (const auto& e : events) {
    if (e.kind == EventKind::Capture || e.kind == EventKind::Breach) {
      if (!t || e.t < *t) t = e.t;
    }
  }
  return t;
}

GameState step(const GameState& s, const Controls& c, double dt) {
  const Deriv k1 = rates(s, c);
  const Deriv k2 = rates(advance(s, k1, dt / 2), c);
  const Deriv k3 = rates(advance(s, k2, dt / 2), c);
  const Deriv k4 = rates(advance(s, k3, dt), c);
  Deriv sum;
  sum.theta_T = (k1.theta_T + 2 * k2.theta_T + 2 * k3.theta_T + k4.theta_T) / 6;
  for (int i = 0; i < kNumAttackers; ++i) {
    sum.r[i] = (k1.r[i] + 2 * k2.r[i] + 2 * k3.r[i] + k4.r[i]) / 6;
    sum.theta[i] = (k1.theta[i] + 2 * k2.theta[i] + 2 * k3.theta[i] + k4.theta[i]) / 6;
  }
  GameState out = advance(s, sum, dt);
  out.theta_T = canonical(out.theta_T);
  for (auto& a : out.attackers) a.theta = canonical(a.theta);
  out.t = s.t + dt;
  return out;
}

std::vector<Event> detect_events(const GameState& prev, const GameState& next, const Tolerances& tol) {
  std::vector<Event> out;
  const double span = next.t - prev.t;
  for (int i = 0; i < kNumAttackers; ++i) {
    if (!prev.alive[i]) continue;
    std::optional<double> fc;
    const double rp = prev.rel(i);
    const double rn = next.rel(i);
    // A jump across +-pi is a wrap, not an alignment.
    if ((rp >= 0.0) != (rn >= 0.0) && std::abs(rp) < kPi / 2 && std::abs(rn) < kPi / 2) {
      fc = std::clamp(rp / (rp - rn), 0.0, 1.0);
    } else if (std::abs(rn) <= tol.capture) {
      fc = 1.0;
    }
    std::optional<double> fb;
    const double hp = prev.attackers[i].r - 1.0;
    const double hn = next.attackers[i].r - 1.0;
    if (hn <= tol.breach) fb = hp > hn ? std::clamp((hp - tol.breach) / (hp - hn), 0.0, 1.0) : 1.0;

    if (fc && (!fb || *fc <= *fb)) {
      out.push_back({EventKind::Capture, prev.t + *fc * span, i, ""});
    } else if (fb) {
      out.push_back({EventKind::Breach, prev.t + *fb * span, i, ""});
    }
  }
  return out;
}

Trajectory simulate(const SimConfig& cfg) {
  if (!(cfg.dt > 0.0) || !(cfg.t_max > 0.0)) throw std::invalid_argument("simulate: dt and t_max must be positive");
  if (!cfg.turret.fn || !cfg.attackers.fn) throw std::invalid_argument("simulate: missing policy");
  const SpeedParams& p = cfg.speeds;
  const double true_nu = cfg.true_nu();

  Trajectory tr;
  GameState s = cfg.initial;
  s.t = 0.0;
  s.theta_T = canonical(s.theta_T);
  for (auto& a : s.attackers) a.theta = canonical(a.theta);

  const auto remove = [&](int i, EventKind kind, double t) {
    s.alive[i] = false;
    tr.t_final[i] = t;
    tr.events.push_back({kind, t, i, ""});
  };
  for (int i = 0; i < kNumAttackers; ++i) {
    if (!s.alive[i]) continue;
    if (std::abs(s.rel(i)) <= cfg.tol.capture) {
      remove(i, EventKind::Capture, 0.0);
    } else if (s.attackers[i].r - 1.0 <= cfg.tol.breach) {
      remove(i, EventKind::Breach, 0.0);
    }
  }

  const bool need_regions = cfg.track_regions || cfg.turret.needs_regions || cfg.attackers.needs_regions;
  bool had_r1 = false;
  bool had_r2 = false;
  bool any_region = false;
  double max_speed = 0.0;
  std::vector<std::string> notes;
  std::string last_note;

  const auto regions_of = [&](const GameState& st, Sample& smp) {
    RegionBundle b = build_regions(st, p);
    smp.dist = dilemma_distances(st.theta_T, b);
    smp.measure_r1v1 = b.r1v1.measure();
    smp.measure_r2v1 = b.r2v1.measure();
    const bool r1 = !b.r1v1.is_empty();
    const bool r2 = !b.r2v1.is_empty();
    if (had_r1 && !r1) tr.events.push_back({EventKind::RegionVanished, st.t, -1, "r1v1"});
    if (had_r2 && !r2) tr.events.push_back({EventKind::RegionVanished, st.t, -1, "r2v1"});
    had_r1 = r1;
    had_r2 = r2;
    any_region = any_region || r1 || r2;
    return b;
  };

  for (long n = 0;;) {
    Sample smp;
    smp.t = s.t;
    smp.state = s;
    if (s.alive_count() == 0) {
      if (need_regions) regions_of(s, smp);
      tr.samples.push_back(std::move(smp));
      break;
    }
    if (s.t >= cfg.t_max - 0.5 * cfg.dt) {
      tr.horizon_reached = true;
      if (need_regions) regions_of(s, smp);
      tr.samples.push_back(std::move(smp));
      break;
    }

    std::optional<RegionBundle> bundle;
    if (need_regions) bundle = regions_of(s, smp);
    if (cfg.stop_when_regions_vanish && any_region && !had_r1 && !had_r2) {
      tr.samples.push_back(std::move(smp));
      break;
    }
    const RegionBundle* bp = bundle ? &*bundle : nullptr;

    Controls c;
    c.omega_T = std::clamp(cfg.turret(TurretContext{s, p, bp, max_speed}), -1.0, 1.0);
    notes.clear();
    c.attackers = cfg.attackers(AttackerContext{s, p, true_nu, c.omega_T, bp, &notes});
    for (int i = 0; i < kNumAttackers; ++i) {
      if (!s.alive[i]) {
        c.attackers[i] = {};
        continue;
      }
      c.attackers[i].speed = std::min(c.attackers[i].speed, true_nu);
      max_speed = std::max(max_speed, c.attackers[i].speed);
    }
    for (auto& msg : notes) {
      if (msg != last_note) tr.events.push_back({EventKind::Note, s.t, -1, msg});
      last_note = msg;
    }
    smp.controls = c;
    tr.samples.push_back(std::move(smp));

    // Steps end on the time grid, or earlier at the first capture or breach so that
    // the survivors' controls are re-evaluated the moment an attacker drops out.
    const double t_grid = static_cast<double>(n + 1) * cfg.dt;
    GameState next = step(s, c, t_grid - s.t);
    next.t = t_grid;
    auto events = detect_events(s, next, cfg.tol);
    if (!events.empty()) {
      double first = t_grid;
      for (const auto& e : events) first = std::min(first, e.t);
      if (first < t_grid) {
        next = first > s.t ? step(s, c, first - s.t) : s;
        next.t = first;
        std::erase_if(events, [first](const Event& e) { return e.t > first; });
      }
    }
    if (next.t >= t_grid) ++n;
    for (const auto& e : events) {
      next.alive[e.attacker] = false;
      tr.t_final[e.attacker] = e.t;
      tr.events.push_back(e);
    }
    s = next;
  }

  tr.final_state = s;
  tr.J = static_cast<int>(std::count_if(tr.events.begin(), tr.events.end(),
                                        [](const Event& e) { return e.kind == EventKind::Breach; }));
  tr.t_F = s.t;
  if (s.alive_count() == 0) {
    tr.t_F = 0.0;
    for (const auto& t : tr.t_final) tr.t_F = std::max(tr.t_F, t.value_or(0.0));
  }
  return tr;
}

OpenLoopMatrix open_loop_matrix(const GameState& s, const SpeedParams& p, double dt, double t_max) {
  const auto c = classify(s, p);
  if (c.label != Case::GuaranteedDilemma) {
    throw std::invalid_argument(std::string("open_loop_matrix: state is ") + to_string(c.label) +
                                ", expected GuaranteedDilemma");
  }
  OpenLoopMatrix out;
  out.aggressive = s.rel(c.slow_order->first) >= 0.0 ? Rotation::CCW : Rotation::CW;
  const Rotation dirs[2] = {out.aggressive, opposite(out.aggressive)};
  const auto attackers = make_attacker_policy({.name = "informed_response"});
  for (int row = 0; row < 2; ++row) {
    for (int col = 0; col < 2; ++col) {
      SimConfig cfg;
      cfg.initial = s;
      cfg.speeds = p;
      cfg.true_speed = col == 0 ? Speed::Slow : Speed::Fast;
      cfg.turret = make_turret_policy({.name = "committed", .direction = dirs[row]});
      cfg.attackers = attackers;
      cfg.dt = dt;
      cfg.t_max = t_max;
      out.J[row][col] = simulate(cfg).J;
    }
  }
  return out;
}

}  // namespace turret

#include "turret/checks.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <optional>
#include <random>

#include "turret/config.hpp"
#include "turret/simulator.hpp"

namespace turret {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

class Stopwatch {
 public:
  [[nodiscard]] double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Uniform on (0, 1].
double unit_open_below(std::mt19937_64& rng) { return 1.0 - std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

GameState make_state(AttackerPolar a1, AttackerPolar a2, double theta_T = 0.0) {
  GameState s;
  s.theta_T = theta_T;
  s.attackers = {a1, a2};
  return s;
}

template <class F>
double golden_max(F f, double a, double b) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int k = 0; k < 200 && b - a > 1e-15; ++k) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// First sign change of r sin(u) - nu (theta_rel + u) on a uniform grid of u in [0, pi/2].
std::optional<double> grid_scan_offset(double r, double theta_rel, double nu) {
  constexpr int kPoints = 1'000'000;
  const double h = 0.5 * kPi / kPoints;
  double prev = -nu * theta_rel;
  if (prev >= 0.0) return 0.0;
  for (int k = 1; k <= kPoints; ++k) {
    const double u = k * h;
    const double g = r * std::sin(u) - nu * (theta_rel + u);
    if (g >= 0.0) return u - h * g / (g - prev);
    prev = g;
  }
  return std::nullopt;
}

struct DistanceRates {
  double d1 = kInf;
  double d2 = kInf;
  double sum = kInf;
  /// Rate at which the r2v1 edge nearest the turret moves away from it.
  double b2_away = kInf;
  int steps = 0;
};

DistanceRates distance_rates(const Trajectory& tr) {
  DistanceRates out;
  const auto finite = [](double x) { return x != kNoBoundary; };
  for (std::size_t k = 0; k + 1 < tr.samples.size(); ++k) {
    const auto& a = tr.samples[k];
    const auto& b = tr.samples[k + 1];
    const double h = b.t - a.t;
    if (!a.dist || !b.dist || !(h > 0.0)) continue;
    const auto& x = *a.dist;
    const auto& y = *b.dist;
    const bool one = finite(x.d1) && finite(y.d1);
    const bool two = finite(x.d2) && finite(y.d2);
    if (one) out.d1 = std::min(out.d1, (y.d1 - x.d1) / h);
    if (two) out.d2 = std::min(out.d2, (y.d2 - x.d2) / h);
    if (one && two) {
      out.sum = std::min(out.sum, (y.d1 + y.d2 - x.d1 - x.d2) / h);
      ++out.steps;
    }
    if (two && x.side2 == y.side2) {
      const double move = signed_diff(y.theta_B2, x.theta_B2);
      // A jump means the nearest edge changed, not that an edge moved.
      if (std::abs(move) < 0.1) out.b2_away = std::min(out.b2_away, move * sign_of(x.side2) / h);
    }
  }
  return out;
}

Trajectory run(const GameState& s, const SpeedParams& p, Speed truth, const PolicySpec& turret,
               const PolicySpec& attackers, double t_max, bool track, bool stop_on_vanish) {
  SimConfig cfg;
  cfg.initial = s;
  cfg.speeds = p;
  cfg.true_speed = truth;
  cfg.turret = make_turret_policy(turret);
  cfg.attackers = make_attacker_policy(attackers);
  cfg.t_max = t_max;
  cfg.track_regions = track;
  cfg.stop_when_regions_vanish = stop_on_vanish;
  return simulate(cfg);
}

const std::vector<PolicySpec>& forcing_turrets() {
  static const std::vector<PolicySpec> v = {
      {.name = "seek_r2v1"}, {.name = "seek_r1v1"}, {.name = "random_walk", .seed = 7}};
  return v;
}

std::optional<double> vanish_time(const Trajectory& tr, const std::string& region) {
  for (const auto& e : tr.events) {
    if (e.kind == EventKind::RegionVanished && e.detail == region) return e.t;
  }
  return std::nullopt;
}

CheckResult make_result(int id, std::string name) {
  CheckResult r;
  r.id = id;
  r.name = std::move(name);
  return r;
}

}  // namespace

GameState guaranteed_dilemma_state() { return make_state({1.5, 0.4}, {1.1, -0.35}); }
SpeedParams guaranteed_dilemma_speeds() { return {0.2, 0.7}; }
GameState forcing_state() { return make_state({2.2, 0.7}, {1.66, -1.3}); }
SpeedParams forcing_speeds() { return {0.25, 0.7}; }

SweepSpec region_map_spec(int n) {
  SweepSpec s;
  s.a1 = {1.5, 0.4};
  s.theta_T = 0.0;
  s.speeds = {0.2, 0.7};
  s.r_min = 1.0;
  s.r_max = 1.6;
  s.theta_min = -1.2;
  s.theta_max = 0.0;
  s.n_r = n;
  s.n_theta = n;
  return s;
}

CheckResult check_boundary_rate_sharpness() {
  Stopwatch clock;
  auto res = make_result(1, "single-attacker boundary rate is sharp");
  std::mt19937_64 rng(101);
  constexpr int kSamples = 1000;
  constexpr int kHeadings = 10000;
  const double step = kTwoPi / kHeadings;
  double worst_rate = 0.0;
  double worst_heading = 0.0;
  for (int n = 0; n < kSamples; ++n) {
    const double r = uniform(rng, 1.0, 5.0);
    const double nu = unit_open_below(rng);
    const double v = nu * unit_open_below(rng);
    const auto f = [&](double phi) { return lb_boundary_rate(r, phi, v, nu); };
    int best = 0;
    double best_val = -kInf;
    for (int k = 0; k < kHeadings; ++k) {
      const double val = f(-kPi + k * step);
      if (val > best_val) {
        best_val = val;
        best = k;
      }
    }
    const double phi0 = -kPi + best * step;
    const double phi = golden_max(f, phi0 - step, phi0 + step);
    const double bound = v / nu;
    worst_rate = std::max(worst_rate, std::abs(std::max(best_val, f(phi)) - bound) / bound);
    worst_heading = std::max(worst_heading, std::abs(signed_diff(phi, attacker_1v1_heading(r, 1.0, nu).heading)));
  }
  res.seconds = clock.seconds();
  res.measured = worst_rate;
  res.tolerance = 1e-6;
  res.passed = worst_rate <= 1e-6 && worst_heading <= 1e-4 && res.seconds < 10.0;
  res.detail = "max relative rate error " + num(worst_rate) + ", argmax heading error " + num(worst_heading) +
               " rad (tol 1e-4) over " + std::to_string(kSamples) + " draws";
  return res;
}

CheckResult check_runner_solver() {
  Stopwatch clock;
  auto res = make_result(2, "runner capture angle matches grid scan");
  std::mt19937_64 rng(202);
  constexpr int kWanted = 1000;
  int valid = 0;
  int missing = 0;
  double worst_res = 0.0;
  double worst_diff = 0.0;
  while (valid < kWanted) {
    const double r = uniform(rng, 1.0, 5.0);
    const double nu = unit_open_below(rng);
    const double rel = uniform(rng, 0.0, kPi);
    // Peak of the concave residual decides whether a root exists at all.
    const double up = std::acos(nu / r);
    if (r * std::sin(up) - nu * (rel + up) < 0.0) continue;
    const auto u = grid_scan_offset(r, rel, nu);
    if (!u || r * std::cos(*u) < 1.0 + 1e-6) continue;
    ++valid;
    const auto sol = try_solve_theta_tilde(r, rel, nu);
    if (!sol) {
      ++missing;
      continue;
    }
    worst_res = std::max(worst_res, std::abs(runner_residual(r, rel, nu, sol->theta_tilde)));
    worst_diff = std::max(worst_diff, std::abs(sol->theta_tilde - (rel + *u)));
  }
  res.seconds = clock.seconds();
  res.measured = worst_diff;
  res.tolerance = 1e-5;
  res.passed = missing == 0 && worst_res <= 1e-10 && worst_diff <= 1e-5 && res.seconds < 30.0;
  res.detail = "max |residual| " + num(worst_res) + " (tol 1e-10), unsolved " + std::to_string(missing) + " of " +
               std::to_string(kWanted);
  return res;
}

CheckResult check_runner_sensitivity() {
  Stopwatch clock;
  auto res = make_result(3, "capture angle sensitivity to the turret");
  std::mt19937_64 rng(303);
  constexpr int kWanted = 100;
  constexpr double h = 1e-6;
  int done = 0;
  double worst = 0.0;
  double largest = -kInf;
  while (done < kWanted) {
    const double r = uniform(rng, 1.0, 5.0);
    const double nu = unit_open_below(rng);
    const double rel = uniform(rng, 10 * h, kPi - 10 * h);
    const auto mid = try_solve_theta_tilde(r, rel, nu);
    const auto lo = try_solve_theta_tilde(r, rel - h, nu);
    const auto hi = try_solve_theta_tilde(r, rel + h, nu);
    if (!mid || !lo || !hi) continue;
    // Turret moving by +h shrinks the offset by h.
    const double fd = (lo->theta_tilde - hi->theta_tilde) / (2 * h);
    const double exact = dtheta_tilde_dtheta_T(r, rel, nu);
    if (!std::isfinite(exact)) continue;
    ++done;
    worst = std::max(worst, std::abs(fd - exact) / std::abs(exact));
    largest = std::max(largest, exact);
  }
  res.seconds = clock.seconds();
  res.measured = worst;
  res.tolerance = 1e-4;
  res.passed = worst <= 1e-4 && largest < -1.0;
  res.detail = "largest derivative is -1 - " + num(-1.0 - largest) + " (must be < -1) over " + std::to_string(kWanted) + " draws";
  return res;
}


CheckResult check_two_attacker_boundary_speed() {
  Stopwatch clock;
  auto res = make_result(4, "two-attacker boundary moves at unit speed");
  struct Scenario {
    GameState s;
    double nu;
    int runner;
  };
  const std::vector<Scenario> scenarios = {
      {forcing_state(), 0.25, 0},
      {make_state({1.66, 1.3}, {2.2, -0.7}), 0.25, 1},
      {make_state({3.0, 1.5}, {2.0, -1.5}), 0.3, 0},
  };
  double worst = 0.0;
  double worst_gap = 0.0;
  int steps = 0;
  for (const auto& sc : scenarios) {
    const auto order = CaptureOrder::runner(sc.runner);
    const auto& runner = sc.s.attackers[order.first];
    const auto& pen = sc.s.attackers[order.second];
    const ArcSet region = region_2v1(sc.s.attackers[0], sc.s.attackers[1], order, sc.nu);
    if (region.size() != 1) {
      res.detail = "scenario without a proper two-attacker region";
      return res;
    }
    // The edge on the penetrator's side is a barrier point; the other edge may be the penetrator itself.
    const bool cw = rotation_to(runner.theta, pen.theta, Rotation::CW) < kPi;
    GameState s = sc.s;
    s.theta_T = cw ? region.arcs()[0].lower() : region.arcs()[0].upper();
    const SpeedParams p{sc.nu, std::min(1.0, 2.0 * sc.nu)};
    const auto tr = run(s, p, Speed::Slow, {.name = "pursue", .attacker = sc.runner},
                        {.name = "two_v_one", .attacker = sc.runner, .speed = "true"}, 20.0, false, false);
    double prev_edge = s.theta_T;
    double prev_t = 0.0;
    for (const auto& smp : tr.samples) {
      if (smp.state.alive_count() < kNumAttackers) break;
      const ArcSet now = region_2v1(smp.state.attackers[0], smp.state.attackers[1], order, sc.nu);
      if (now.is_empty()) break;
      const auto nb = nearest_boundary(smp.state.theta_T, now);
      worst_gap = std::max(worst_gap, nb.distance);
      if (smp.t > 0.0) {
        const double rate = std::abs(signed_diff(nb.point, prev_edge)) / (smp.t - prev_t);
        worst = std::max(worst, std::abs(rate - 1.0));
        ++steps;
      }
      prev_edge = nb.point;
      prev_t = smp.t;
    }
  }
  res.seconds = clock.seconds();
  res.measured = worst;
  res.tolerance = 1e-3;
  res.passed = steps > 0 && worst <= 1e-3;
  res.detail = "max |edge speed - 1| over " + std::to_string(steps) + " steps in " +
               std::to_string(scenarios.size()) + " scenarios, max edge-to-turret gap " + num(worst_gap);
  return res;
}

CheckResult check_distance_rates() {
  Stopwatch clock;
  auto res = make_result(5, "distance rates under each attacker strategy");
  const SpeedParams p = forcing_speeds();
  const double alpha = p.alpha();

  // The far edge of r1v1 reaches unit speed only at opposite extreme edge rates.
  constexpr int kGrid = 101;
  double interior = 0.0;
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      const double a = -alpha + 2.0 * alpha * i / (kGrid - 1);
      const double b = -alpha + 2.0 * alpha * j / (kGrid - 1);
      const bool extreme = (i == kGrid - 1 && j == 0) || (i == 0 && j == kGrid - 1);
      if (!extreme) interior = std::max(interior, std::abs(theta_ub_rate(a, b, p)));
    }
  }
  const double lo = theta_ub_rate(alpha, -alpha, p);
  const double hi = theta_ub_rate(-alpha, alpha, p);
  const bool extremes_ok = lo == -1.0 && hi == 1.0 && interior < 1.0;

  double worst = kInf;
  double b2 = kInf;
  std::string detail;
  for (const char* attackers : {"ss_fh", "two_v_one_slow"}) {
    for (const auto& turret : forcing_turrets()) {
      const auto tr = run(forcing_state(), p, Speed::Slow, turret, {.name = attackers}, 10.0, true, true);
      const auto r = distance_rates(tr);
      const bool ssfh = std::string(attackers) == "ss_fh";
      // ss_fh keeps r1v1 from approaching and pushes the r2v1 edge away; the slow pair keeps r2v1 still.
      const double own = ssfh ? r.d1 : r.d2;
      worst = std::min({worst, own, r.sum});
      if (ssfh) b2 = std::min(b2, r.b2_away);
      if (r.steps == 0) worst = -kInf;
    }
  }
  res.seconds = clock.seconds();
  res.measured = worst;
  res.tolerance = -1e-3;
  res.passed = extremes_ok && worst >= -1e-3 && b2 > 0.0;
  res.detail = "edge rate at extremes " + num(lo) + "/" + num(hi) + ", max elsewhere " + num(interior) +
               "; min ss_fh r2v1 edge recession rate " + num(b2);
  return res;
}

CheckResult check_forcing_invariance() {
  Stopwatch clock;
  auto res = make_result(6, "forcing strategy keeps the turret out of both overlaps");
  const GameState s0 = forcing_state();
  const SpeedParams p = forcing_speeds();
  if (classify(s0, p).label != Case::ForceDilemma) {
    res.detail = "reference state is not a forcing state";
    return res;
  }
  double worst = kInf;
  double latest = 0.0;
  double bound_min = kInf;
  bool vanished = true;
  for (const auto& turret : forcing_turrets()) {
    const auto tr = run(s0, p, Speed::Slow, turret, {.name = "forcing_switch"}, 30.0, true, true);
    const auto& d0 = *tr.samples.front().dist;
    const double start = std::min(d0.d1, d0.d2);
    double approach = kInf;
    for (const auto& smp : tr.samples) {
      if (smp.dist && smp.dist->d1 != kNoBoundary && smp.dist->d2 != kNoBoundary) {
        worst = std::min(worst, std::min(smp.dist->d1, smp.dist->d2) - start);
      }
      if (smp.state.alive_count() == kNumAttackers && (!smp.dist || smp.dist->d1 != kNoBoundary || smp.dist->d2 != kNoBoundary)) {
        for (const auto& m : smp.controls.attackers) approach = std::min(approach, m.speed * std::cos(m.heading));
      }
    }
    // Every attacker closes in at least this fast, so somebody reaches the target by the bound.
    double closest = kInf;
    for (const auto& a : s0.attackers) closest = std::min(closest, a.r - 1.0);
    const double bound = approach > 0.0 ? closest / approach : kInf;
    bound_min = std::min(bound_min, bound);
    const auto t1 = vanish_time(tr, "r1v1");
    const auto t2 = vanish_time(tr, "r2v1");
    if (!t1 || !t2 || std::max(*t1, *t2) > bound) {
      vanished = false;
    } else {
      latest = std::max(latest, std::max(*t1, *t2));
    }
  }
  res.seconds = clock.seconds();
  res.measured = worst;
  res.tolerance = -1e-3;
  res.passed = worst >= -1e-3 && vanished && res.seconds < 60.0;
  res.detail = "min over time of min(d1,d2) minus its start value; overlaps gone by t=" + num(latest) +
               " (bound " + num(bound_min) + ")" + (vanished ? "" : ", an overlap outlived the bound");
  return res;
}

CheckResult check_open_loop_table() {
  Stopwatch clock;
  auto res = make_result(7, "open-loop commitment table");
  const SpeedParams p = guaranteed_dilemma_speeds();
  std::vector<GameState> states = {guaranteed_dilemma_state()};
  std::mt19937_64 rng(707);
  for (int tries = 0; tries < 5000 && states.size() < 11; ++tries) {
    const auto s = make_state({1.5, 0.4}, {uniform(rng, 1.02, 1.45), uniform(rng, -1.2, 0.0)});
    if (classify(s, p).label == Case::GuaranteedDilemma) states.push_back(s);
  }
  const std::array<std::array<int, 2>, 2> expected{{{0, 2}, {1, 1}}};
  int mismatches = 0;
  std::string first_bad;
  for (const auto& s : states) {
    const auto m = open_loop_matrix(s, p);
    if (m.J != expected) {
      ++mismatches;
      if (first_bad.empty()) {
        first_bad = "; A2=(" + num(s.attackers[1].r) + "," + num(s.attackers[1].theta) + ") gave [[" +
                    std::to_string(m.J[0][0]) + "," + std::to_string(m.J[0][1]) + "],[" + std::to_string(m.J[1][0]) +
                    "," + std::to_string(m.J[1][1]) + "]]";
      }
    }
  }
  res.seconds = clock.seconds();
  res.measured = mismatches;
  res.tolerance = 0;
  res.passed = mismatches == 0;
  res.detail = std::to_string(states.size()) + " guaranteed-dilemma states, expected [[0,2],[1,1]]" + first_bad;
  return res;
}

CheckResult check_avoid_dilemma() {
  Stopwatch clock;
  auto res = make_result(8, "turret avoids the dilemma from r1v1");
  const SpeedParams p{0.3, 0.7};
  std::mt19937_64 rng(808);
  constexpr int kWanted = 100;
  int found = 0;
  int failures = 0;
  int runs = 0;
  int worst_slow = 0;
  int worst_fast = 0;
  std::string first_bad;
  const std::vector<PolicySpec> slow_attackers = {
      {.name = "ss_fh"}, {.name = "informed_response"}, {.name = "tangent"},
      {.name = "two_v_one", .attacker = 0}, {.name = "two_v_one", .attacker = 1}};
  const std::vector<PolicySpec> fast_attackers = {
      {.name = "ss_fh"}, {.name = "informed_response"}, {.name = "tangent"},
      {.name = "two_v_one", .attacker = 0}, {.name = "two_v_one", .attacker = 1}};
  for (int tries = 0; tries < 100000 && found < kWanted; ++tries) {
    const auto s = make_state({1.5, 0.4}, {uniform(rng, 1.02, 1.6), uniform(rng, -1.2, 0.0)});
    const auto cls = classify(s, p);
    if (cls.label != Case::AvoidDilemma || !cls.slow_order) continue;
    ++found;
    const PolicySpec turret{.name = "avoid_dilemma", .attacker = cls.slow_order->first};
    for (Speed truth : {Speed::Slow, Speed::Fast}) {
      for (const auto& a : truth == Speed::Slow ? slow_attackers : fast_attackers) {
        const auto tr = run(s, p, truth, turret, a, 60.0, false, false);
        ++runs;
        const int allowed = truth == Speed::Slow ? 0 : 1;
        auto& worst = truth == Speed::Slow ? worst_slow : worst_fast;
        worst = std::max(worst, tr.J);
        if (tr.J > allowed || tr.horizon_reached) {
          ++failures;
          if (first_bad.empty()) {
            first_bad = "; A2=(" + num(s.attackers[1].r) + "," + num(s.attackers[1].theta) + ") vs " +
                        make_attacker_policy(a).name + (truth == Speed::Slow ? " slow" : " fast") +
                        " J=" + std::to_string(tr.J) + (tr.horizon_reached ? " (horizon)" : "");
          }
        }
      }
    }
  }
  res.seconds = clock.seconds();
  res.measured = failures;
  res.tolerance = 0;
  res.passed = found == kWanted && failures == 0;
  res.detail = std::to_string(found) + " states, " + std::to_string(runs) + " runs, worst J slow " +
               std::to_string(worst_slow) + " fast " + std::to_string(worst_fast) + first_bad;
  return res;
}

CheckResult check_region_map() {
  Stopwatch clock;
  auto res = make_result(9, "region map structure");
  const SweepSpec spec = region_map_spec(200);
  const auto g = run_sweep(spec);
  const auto counts = label_counts(g);

  const Case required[] = {Case::GuaranteedTwoCaptures, Case::InconsequentialSpeed, Case::MatchingDirections,
                           Case::GuaranteedDilemma,     Case::AvoidDilemma,         Case::ForceDilemma};
  bool present = true;
  double contiguity = 1.0;
  for (Case c : required) {
    const auto sizes = component_sizes(g, c);
    if (sizes.empty()) {
      present = false;
      continue;
    }
    contiguity = std::min(contiguity, double(sizes.front()) / counts[int(c)]);
  }

  // Label changes along each row caused by the curves: the fast overlap appearing,
  // and the far r1v1 edge crossing the turret.
  const double h = g.theta_step();
  const auto measure = [&](BoundaryReading reading, int& n_exist, int& n_edge) {
    double worst = 0.0;
    n_exist = 0;
    n_edge = 0;
    for (int ir = 0; ir < spec.n_r; ++ir) {
      const double r = g.at(ir, 0).r;
      const double ex = existence_theta(spec.a1, r, spec.speeds, reading);
      const double dg = degenerate_theta(spec.a1, r, spec.theta_T, spec.speeds, reading);
      const double nm = nominal_theta(spec.a1, r, spec.theta_T, spec.speeds, reading);
      for (int it = 0; it + 1 < spec.n_theta; ++it) {
        const auto& a = g.at(ir, it);
        const auto& b = g.at(ir, it + 1);
        if (a.label == b.label) continue;
        const double mid = 0.5 * (a.theta + b.theta);
        const auto pair = [&](Case x, Case y) {
          return (a.label == x && b.label == y) || (a.label == y && b.label == x);
        };
        if (pair(Case::AvoidDilemma, Case::ForceDilemma)) {
          worst = std::max(worst, std::min(std::abs(mid - dg), std::abs(mid - nm)) / h);
          ++n_edge;
        } else if (pair(Case::GuaranteedDilemma, Case::AvoidDilemma) ||
                   pair(Case::GuaranteedDilemma, Case::ForceDilemma)) {
          const auto ma = classify(make_state(spec.a1, {a.r, a.theta}, spec.theta_T), spec.speeds).m;
          const auto mb = classify(make_state(spec.a1, {b.r, b.theta}, spec.theta_T), spec.speeds).m;
          if (ma.i1_fast_empty == mb.i1_fast_empty) continue;
          worst = std::max(worst, std::abs(mid - ex) / h);
          ++n_exist;
        }
      }
    }
    return worst;
  };
  int n_exist = 0;
  int n_edge = 0;
  const double derived = measure(BoundaryReading::Derived, n_exist, n_edge);
  int p_exist = 0;
  int p_edge = 0;
  const double printed = measure(BoundaryReading::AsPrinted, p_exist, p_edge);

  res.seconds = clock.seconds();
  res.measured = derived;
  res.tolerance = 1.0;
  res.passed = present && contiguity >= 0.95 && n_exist > 0 && n_edge > 0 && derived <= 1.0 && res.seconds < 300.0;
  std::string labels;
  for (int k = 0; k < kNumCases; ++k) {
    if (counts[k]) labels += std::string(labels.empty() ? "" : ",") + to_string(Case(k)) + "=" + std::to_string(counts[k]);
  }
  res.detail = "curve offset in cells (" + std::to_string(n_exist) + " overlap-onset and " + std::to_string(n_edge) +
               " r1v1-edge transitions); literal formulas would be off by " + num(printed) +
               " cells; largest-component share " + num(contiguity) + "; " + labels;
  return res;
}

CheckResult check_information_limiting() {
  Stopwatch clock;
  auto res = make_result(10, "information-limiting play hides the true speed");
  const GameState s0 = forcing_state();
  const SpeedParams p = forcing_speeds();
  int compared = 0;
  int differing = 0;
  double top_speed = 0.0;
  for (const char* attackers : {"ss_fh", "forcing_switch"}) {
    for (const auto& turret : forcing_turrets()) {
      const auto slow = run(s0, p, Speed::Slow, turret, {.name = attackers}, 30.0, false, false);
      const auto fast = run(s0, p, Speed::Fast, turret, {.name = attackers}, 30.0, false, false);
      const double cut = std::min(slow.first_removal().value_or(kInf), fast.first_removal().value_or(kInf));
      const std::size_t n = std::min(slow.samples.size(), fast.samples.size());
      for (std::size_t k = 0; k < n && slow.samples[k].t < cut; ++k) {
        const auto& a = slow.samples[k];
        const auto& b = fast.samples[k];
        ++compared;
        bool same = a.t == b.t && a.state == b.state && a.controls.omega_T == b.controls.omega_T;
        for (int i = 0; i < kNumAttackers; ++i) {
          same = same && std::memcmp(&a.controls.attackers[i], &b.controls.attackers[i], sizeof(Motion)) == 0;
          top_speed = std::max({top_speed, a.controls.attackers[i].speed, b.controls.attackers[i].speed});
        }
        if (!same) ++differing;
      }
    }
  }
  res.seconds = clock.seconds();
  res.measured = differing;
  res.tolerance = 0;
  res.passed = compared > 0 && differing == 0 && top_speed <= p.nu_slow;
  res.detail = std::to_string(compared) + " samples compared, top attacker speed " + num(top_speed) +
               " (slow speed " + num(p.nu_slow) + ")";
  return res;
}

const std::vector<CheckEntry>& all_checks() {
  static const std::vector<CheckEntry> v = {
      {1, "boundary-rate", check_boundary_rate_sharpness},
      {2, "runner-solver", check_runner_solver},
      {3, "runner-sensitivity", check_runner_sensitivity},
      {4, "two-attacker-edge", check_two_attacker_boundary_speed},
      {5, "distance-rates", check_distance_rates},
      {6, "forcing", check_forcing_invariance},
      {7, "open-loop", check_open_loop_table},
      {8, "avoid-dilemma", check_avoid_dilemma},
      {9, "region-map", check_region_map},
      {10, "information-limiting", check_information_limiting},
  };
  return v;
}

std::vector<CheckResult> run_checks(const std::vector<int>& ids, const std::function<void(const CheckResult&)>& on_result) {
  std::vector<CheckResult> out;
  for (const auto& c : all_checks()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), c.id) == ids.end()) continue;
    CheckResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.id = c.id;
      r.name = c.name;
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_check(const CheckResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "[%s] %2d ", r.passed ? "PASS" : "FAIL", r.id);
  return head + r.name + ": measured " + format_number(r.measured) + " (tolerance " + format_number(r.tolerance) +
         ", " + num(r.seconds) + " s) " + r.detail;
}

nlohmann::json checks_json(const std::vector<CheckResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    arr.push_back({{"id", r.id},
                   {"name", r.name},
                   {"passed", r.passed},
                   {"measured", r.measured},
                   {"tolerance", r.tolerance},
                   {"seconds", r.seconds},
                   {"detail", r.detail}});
  }
  return {{"header", {{"artifact", "turret-dilemma"}, {"version", kVersion}}}, {"passed", all}, {"checks", arr}};
}

}  // namespace turret

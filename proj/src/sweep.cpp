#include "turret/sweep.hpp"

#include <cmath>
#include <stdexcept>

namespace turret {

namespace {

constexpr int kRayScan = 400;
constexpr int kRayBisect = 60;

// First crossing of value from <= 0 to > 0 walking CW from theta_hi.
std::optional<double> first_crossing(const auto& value, double theta_hi, double theta_lo) {
  double prev_t = theta_hi;
  bool prev_in = value(theta_hi) <= 0.0;
  for (int k = 1; k <= kRayScan; ++k) {
    const double t = theta_hi + (theta_lo - theta_hi) * k / kRayScan;
    const bool in = value(t) <= 0.0;
    if (in != prev_in) {
      double a = prev_t;
      double b = t;
      for (int j = 0; j < kRayBisect; ++j) {
        const double m = 0.5 * (a + b);
        if ((value(m) <= 0.0) == prev_in) {
          a = m;
        } else {
          b = m;
        }
      }
      return 0.5 * (a + b);
    }
    prev_t = t;
    prev_in = in;
  }
  return std::nullopt;
}

std::vector<double> radii(const SweepSpec& s) {
  std::vector<double> r(static_cast<std::size_t>(s.n_r));
  for (int i = 0; i < s.n_r; ++i) r[i] = s.r_min + (s.r_max - s.r_min) * i / (s.n_r - 1);
  return r;
}

}  // namespace

SweepGrid run_sweep(const SweepSpec& spec) {
  if (spec.n_r < 2 || spec.n_theta < 2) throw std::invalid_argument("run_sweep: need at least two steps per axis");
  if (!(spec.r_max > spec.r_min) || !(spec.theta_max > spec.theta_min) || spec.r_min < 1.0) {
    throw std::invalid_argument("run_sweep: empty or invalid range");
  }
  spec.speeds.validate();
  SweepGrid g;
  g.spec = spec;
  const std::size_t n = std::size_t(spec.n_r) * std::size_t(spec.n_theta);
  g.cells = parallel_map<SweepCell>(
      n,
      [&spec](std::size_t idx) {
        const int ir = static_cast<int>(idx / spec.n_theta);
        const int it = static_cast<int>(idx % spec.n_theta);
        SweepCell c;
        c.r = spec.r_min + (spec.r_max - spec.r_min) * ir / (spec.n_r - 1);
        c.theta = spec.theta_min + (spec.theta_max - spec.theta_min) * it / (spec.n_theta - 1);
        GameState s;
        s.theta_T = spec.theta_T;
        s.attackers = {spec.a1, AttackerPolar{c.r, c.theta}};
        const auto cls = classify(s, spec.speeds);
        c.label = cls.label;
        c.order = cls.slow_order;
        return c;
      },
      spec.threads);
  return g;
}

std::vector<NamedCurve> sweep_curves(const SweepSpec& spec) {
  const auto rs = radii(spec);
  const double th = spec.theta_T;
  const auto& p = spec.speeds;
  std::vector<NamedCurve> out;

  for (auto [name, nu] : {std::pair{"1v1 Slow", p.nu_slow}, std::pair{"1v1 Fast", p.nu_fast}}) {
    NamedCurve c{name, {}};
    for (double r : rs) {
      const double w = w_1v1(r, nu);
      if (w <= kPi) c.points.push_back({r, th - w});
    }
    out.push_back(std::move(c));
  }

  for (auto [name, nu] : {std::pair{"Runner (slow)", p.nu_slow}, std::pair{"Runner (fast)", p.nu_fast}}) {
    NamedCurve c{name, {}};
    for (double r : rs) {
      const auto v = [&](double theta) { return v_2v1_or_inf(AttackerPolar{r, theta}, spec.a1, th, nu); };
      if (auto t = first_crossing(v, th, th - kPi)) c.points.push_back({r, *t});
    }
    out.push_back(std::move(c));
  }

  {
    NamedCurve c{"Penetrator (slow)", {}};
    const auto sol = try_solve_theta_tilde(spec.a1.r, std::abs(signed_diff(spec.a1.theta, th)), p.nu_slow);
    if (sol) {
      for (double r : rs) {
        const double gap = w_1v1(r, p.nu_slow) - 2.0 * sol->theta_tilde;
        if (gap >= 0.0 && gap <= kPi) c.points.push_back({r, th - gap});
      }
    }
    out.push_back(std::move(c));
  }

  const auto ap = boundary_curves(spec.a1, th, p, rs, spec.reading);
  out.push_back({"R1v1 exist", ap.existence});
  out.push_back({"R1v1 nominal", ap.nominal});
  out.push_back({"R1v1 degenerate", ap.degenerate});
  return out;
}

std::array<int, kNumCases> label_counts(const SweepGrid& g) {
  std::array<int, kNumCases> n{};
  for (const auto& c : g.cells) ++n[static_cast<std::size_t>(c.label)];
  return n;
}

std::vector<int> component_sizes(const SweepGrid& g, Case label) {
  const int nr = g.spec.n_r;
  const int nt = g.spec.n_theta;
  std::vector<char> seen(g.cells.size(), 0);
  std::vector<int> stack;
  std::vector<int> sizes;
  for (int start = 0; start < int(g.cells.size()); ++start) {
    if (seen[start] || g.cells[start].label != label) continue;
    int size = 0;
    stack.push_back(start);
    seen[start] = 1;
    while (!stack.empty()) {
      const int k = stack.back();
      stack.pop_back();
      ++size;
      const int ir = k / nt;
      const int it = k % nt;
      const int nbr[4][2] = {{ir - 1, it}, {ir + 1, it}, {ir, it - 1}, {ir, it + 1}};
      for (const auto& q : nbr) {
        if (q[0] < 0 || q[0] >= nr || q[1] < 0 || q[1] >= nt) continue;
        const int j = q[0] * nt + q[1];
        if (!seen[j] && g.cells[j].label == label) {
          seen[j] = 1;
          stack.push_back(j);
        }
      }
    }
    sizes.push_back(size);
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

int connected_components(const SweepGrid& g, Case label) { return int(component_sizes(g, label).size()); }

}  // namespace turret

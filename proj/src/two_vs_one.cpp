#include "turret/two_vs_one.hpp"

#include <cmath>
#include <limits>

namespace turret {

namespace {

constexpr int kBisectionSteps = 200;
constexpr int kRegionSteps = 64;
// Keeps the runner strictly on one side of the turret when scanning around the circle.
constexpr double kHalfTurnMargin = 1e-9;

}  // namespace

std::string to_string(const CaptureOrder& o) {
  return "A" + std::to_string(o.first + 1) + "->A" + std::to_string(o.second + 1);
}

double runner_residual(double r, double theta_rel, double nu, double x) noexcept {
  return r * std::sin(x - theta_rel) - nu * x;
}

std::optional<RunnerSolution> try_solve_theta_tilde(double r, double theta_rel, double nu) noexcept {
  if (!(r >= 1.0) || !(theta_rel >= 0.0) || !(theta_rel < kPi) || !(nu > 0.0) || nu > r) return std::nullopt;
  if (theta_rel == 0.0) return RunnerSolution{0.0, r};

  // In the offset u = x - theta_rel the residual is concave with its peak at acos(nu/r);
  // the first root lies between 0 and the peak when the peak is nonnegative.
  const auto g = [&](double u) { return r * std::sin(u) - nu * (theta_rel + u); };
  const double peak = std::acos(nu / r);
  if (g(peak) < 0.0) return std::nullopt;

  double lo = 0.0;
  double hi = peak;
  for (int k = 0; k < kBisectionSteps && hi - lo > 0.0; ++k) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (g(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double u = std::abs(g(lo)) < std::abs(g(hi)) ? lo : hi;
  const double radius = r * std::cos(u);
  if (radius < 1.0) return std::nullopt;
  return RunnerSolution{theta_rel + u, radius};
}

RunnerSolution solve_theta_tilde(double r, double theta_rel, double nu) {
  if (!(theta_rel >= 0.0 && theta_rel < kPi)) {
    throw std::invalid_argument("solve_theta_tilde: theta_rel must lie in [0, pi), got " + std::to_string(theta_rel));
  }
  if (!(r >= 1.0)) throw std::invalid_argument("solve_theta_tilde: runner inside the target");
  auto s = try_solve_theta_tilde(r, theta_rel, nu);
  if (!s) {
    throw NoCapture("runner at r=" + std::to_string(r) + ", offset " + std::to_string(theta_rel) +
                    " cannot be captured outside the target at nu=" + std::to_string(nu));
  }
  return *s;
}

double v_2v1(const AttackerPolar& runner, const AttackerPolar& penetrator, double theta_T, double nu) {
  const auto sol = solve_theta_tilde(runner.r, std::abs(signed_diff(runner.theta, theta_T)), nu);
  return v_1v1(penetrator.r, signed_diff(penetrator.theta, theta_T), nu) + 2.0 * sol.theta_tilde;
}

double v_2v1(const GameState& s, const CaptureOrder& order, double nu) {
  return v_2v1(s.attackers[order.first], s.attackers[order.second], s.theta_T, nu);
}

double v_2v1_or_inf(const AttackerPolar& runner, const AttackerPolar& penetrator, double theta_T,
                    double nu) noexcept {
  const auto sol = try_solve_theta_tilde(runner.r, std::abs(signed_diff(runner.theta, theta_T)), nu);
  if (!sol || penetrator.r < nu) return std::numeric_limits<double>::infinity();
  return v_1v1(penetrator.r, signed_diff(penetrator.theta, theta_T), nu) + 2.0 * sol->theta_tilde;
}

ArcSet region_2v1(const AttackerPolar& a1, const AttackerPolar& a2, const CaptureOrder& order, double nu) {
  const AttackerPolar& runner = order.first == 0 ? a1 : a2;
  const AttackerPolar& pen = order.first == 0 ? a2 : a1;
  const auto value = [&](double theta_T) { return v_2v1_or_inf(runner, pen, theta_T, nu); };
  if (!(value(runner.theta) <= 0.0)) return ArcSet::empty();

  // The value grows monotonically as the turret moves away from the runner, so each
  // side of the arc is the sublevel edge along that direction.
  double reach[2] = {0.0, 0.0};
  for (Rotation d : {Rotation::CW, Rotation::CCW}) {
    const double span = std::min(rotation_to(runner.theta, pen.theta, d), kPi - kHalfTurnMargin);
    const double s = sign_of(d);
    double lo = 0.0;
    double hi = span;
    if (value(runner.theta + s * hi) <= 0.0) {
      lo = hi;
    } else {
      for (int k = 0; k < kRegionSteps; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (value(runner.theta + s * mid) <= 0.0) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
    }
    reach[d == Rotation::CCW ? 1 : 0] = lo;
  }
  // A runner that can break through on its own is never sacrificed.
  return intersect(ArcSet(Arc::from_bounds(runner.theta - reach[0], reach[0] + reach[1])), region_1v1(runner, nu));
}

Motion runner_motion(const AttackerPolar& runner, double theta_T, double nu) {
  const double rel = signed_diff(runner.theta, theta_T);
  const auto sol = solve_theta_tilde(runner.r, std::abs(rel), nu);
  return {nu, sgn_nonzero(rel) * (kPi / 2.0 - sol.theta_tilde + std::abs(rel))};
}

std::pair<Motion, Motion> attacker_2v1_controls(const GameState& s, const CaptureOrder& order, double nu) {
  const auto& pen = s.attackers[order.second];
  return {runner_motion(s.attackers[order.first], s.theta_T, nu),
          attacker_1v1_heading(pen.r, signed_diff(pen.theta, s.theta_T), nu)};
}

double dtheta_tilde_dtheta_T(double r, double theta_rel, double nu) {
  const auto sol = solve_theta_tilde(r, theta_rel, nu);
  const double a = r / nu * std::cos(sol.theta_tilde - theta_rel);
  if (a - 1.0 <= 0.0) return -std::numeric_limits<double>::infinity();
  return -a / (a - 1.0);
}

}  // namespace turret

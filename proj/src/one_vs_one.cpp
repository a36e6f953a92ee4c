#include "turret/one_vs_one.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace turret {

void SpeedParams::validate() const {
  if (!(nu_slow > 0.0 && nu_slow < nu_fast && nu_fast <= 1.0)) {
    throw std::invalid_argument("speed ratios must satisfy 0 < nu_slow < nu_fast <= 1 (got " +
                                std::to_string(nu_slow) + ", " + std::to_string(nu_fast) + ")");
  }
}

double barrier_f(double r, double nu) {
  if (!(nu > 0.0) || !(r >= nu)) {
    throw std::domain_error("barrier_f: need r >= nu > 0 (r=" + std::to_string(r) + ", nu=" +
                            std::to_string(nu) + ")");
  }
  const double q = r / nu;
  return std::sqrt(std::max(q * q - 1.0, 0.0)) - std::acos(std::min(nu / r, 1.0));
}

double v_1v1(double r, double theta_rel, double nu) {
  return std::abs(theta_rel) + barrier_f(1.0, nu) - barrier_f(r, nu);
}

double w_1v1(double r, double nu) {
  if (r < 1.0) throw std::domain_error("w_1v1: attacker inside the target (r=" + std::to_string(r) + ")");
  return barrier_f(r, nu) - barrier_f(1.0, nu);
}

ArcSet region_1v1(const AttackerPolar& a, double nu) {
  return ArcSet(Arc{a.theta, std::min(w_1v1(a.r, nu), kPi)});
}

Motion attacker_1v1_heading(double r, double theta_rel, double nu) {
  return {nu, sgn_nonzero(theta_rel) * std::asin(std::min(nu / r, 1.0))};
}

double lb_boundary_rate(double r, double heading, double speed, double nu) {
  const double k = std::sqrt(std::max(1.0 / (nu * nu) - 1.0 / (r * r), 0.0));
  return speed * std::sin(heading) / r + speed * std::cos(heading) * k;
}

PolarRate polar_rate(double r, const Motion& m) noexcept {
  return {-m.speed * std::cos(m.heading), m.speed * std::sin(m.heading) / r};
}

}  // namespace turret

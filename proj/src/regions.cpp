#include "turret/regions.hpp"

#include <algorithm>
#include <stdexcept>

namespace turret {

RegionBundle build_regions(const GameState& s, const SpeedParams& p) {
  RegionBundle b;
  for (int i = 0; i < kNumAttackers; ++i) {
    if (!s.alive[i]) continue;
    b.one_slow[i] = region_1v1(s.attackers[i], p.nu_slow);
    b.one_fast[i] = region_1v1(s.attackers[i], p.nu_fast);
  }
  if (s.alive[0] && s.alive[1]) {
    for (int i = 0; i < kNumAttackers; ++i) {
      b.two_slow[i] = region_2v1(s.attackers[0], s.attackers[1], CaptureOrder::runner(i), p.nu_slow);
      b.two_fast[i] = region_2v1(s.attackers[0], s.attackers[1], CaptureOrder::runner(i), p.nu_fast);
    }
  }
  b.i1_fast = intersect(b.one_fast[0], b.one_fast[1]);
  b.u1_fast = unite(b.one_fast[0], b.one_fast[1]);
  b.u1_slow = unite(b.one_slow[0], b.one_slow[1]);
  b.i2_slow = intersect(b.two_slow[0], b.two_slow[1]);
  b.u2_slow = unite(b.two_slow[0], b.two_slow[1]);
  b.u2_fast = unite(b.two_fast[0], b.two_fast[1]);

  if (b.i1_fast.size() <= 1) {
    b.r1v1 = r1v1_set(b.i1_fast, p);
  } else {
    // Two overlapping arcs can meet in two pieces when together they wrap the circle.
    for (const auto& a : b.i1_fast.arcs()) b.r1v1 = unite(b.r1v1, r1v1_set(ArcSet(a), p));
  }
  b.r2v1 = b.i2_slow;
  return b;
}

ArcSet r1v1_set(const ArcSet& i1, const SpeedParams& p) {
  if (i1.is_empty()) return ArcSet::empty();
  if (i1.size() > 1) {
    throw std::invalid_argument("r1v1_set: overlap region has " + std::to_string(i1.size()) + " components");
  }
  const Arc& a = i1.arcs().front();
  return ArcSet(Arc{a.center, std::min(a.half_width / p.alpha(), kPi)});
}

DilemmaDistances dilemma_distances(double theta_T, const RegionBundle& b) {
  const auto n1 = nearest_boundary(theta_T, b.r1v1);
  const auto n2 = nearest_boundary(theta_T, b.r2v1);
  return {n1.distance, n2.distance, n1.point, n2.point, n1.direction, n2.direction};
}

double theta_ub_rate(double dot_theta1, double dot_theta2, const SpeedParams& p) noexcept {
  const double inv = 1.0 / p.alpha();
  return 0.5 * (1.0 - inv) * dot_theta1 + 0.5 * (1.0 + inv) * dot_theta2;
}

const char* to_string(BoundaryReading r) noexcept { return r == BoundaryReading::AsPrinted ? "as_printed" : "derived"; }

double existence_theta(const AttackerPolar& a1, double r2, const SpeedParams& p, BoundaryReading reading) {
  const double nu = p.nu_fast;
  const double f1 = barrier_f(1.0, nu);
  const double c = reading == BoundaryReading::Derived ? a1.theta - barrier_f(a1.r, nu) + 2.0 * f1
                                                       : a1.theta - barrier_f(a1.r, nu) - 2.0 * f1;
  return c - barrier_f(r2, nu);
}

double nominal_theta(const AttackerPolar& a1, double r2, double theta_T, const SpeedParams& p,
                     BoundaryReading reading) {
  const double nu = p.nu_fast;
  const double beta = p.beta();
  const double edge1 = a1.theta - w_1v1(a1.r, nu);
  const double edge2 = (2.0 * theta_T - (1.0 - beta) * edge1) / (1.0 + beta);
  if (reading == BoundaryReading::Derived) return edge2 - w_1v1(r2, nu);
  return edge2 - barrier_f(1.0, nu) - barrier_f(a1.r, nu);
}

double degenerate_theta(const AttackerPolar& a1, double r2, double theta_T, const SpeedParams& p,
                        BoundaryReading reading) {
  const double r = reading == BoundaryReading::Derived ? r2 : a1.r;
  return theta_T - p.beta() * w_1v1(r, p.nu_fast);
}

BoundaryCurves boundary_curves(const AttackerPolar& a1, double theta_T, const SpeedParams& p,
                                   std::span<const double> radii, BoundaryReading reading) {
  BoundaryCurves c;
  for (double r : radii) {
    c.existence.push_back({r, existence_theta(a1, r, p, reading)});
    c.nominal.push_back({r, nominal_theta(a1, r, theta_T, p, reading)});
    c.degenerate.push_back({r, degenerate_theta(a1, r, theta_T, p, reading)});
  }
  return c;
}

}  // namespace turret

#include <doctest.h>

#include <cmath>

#include "scenarios.hpp"
#include "turret/checks.hpp"
#include "turret/regions.hpp"

using namespace turret;
using namespace turret::testing;

TEST_SUITE("regions") {

TEST_CASE("bundle is built from the single and two-attacker regions") {
  Gen g(31);
  const SpeedParams p{0.25, 0.7};
  for (int i = 0; i < 200; ++i) {
    const GameState s = random_state(g);
    const RegionBundle b = build_regions(s, p);
    for (int k = 0; k < kNumAttackers; ++k) {
      REQUIRE(b.one_slow[k] == region_1v1(s.attackers[k], p.nu_slow));
      REQUIRE(b.one_fast[k] == region_1v1(s.attackers[k], p.nu_fast));
    }
    REQUIRE(b.i1_fast == intersect(b.one_fast[0], b.one_fast[1]));
    REQUIRE(b.i2_slow == intersect(b.two_slow[0], b.two_slow[1]));
    REQUIRE(b.r2v1 == b.i2_slow);
    // Winning at the fast speed is harder than at the slow one.
    REQUIRE(difference(b.one_fast[0], b.one_slow[0]).measure() < 1e-9);
    REQUIRE(difference(b.i1_fast, b.r1v1).measure() < 1e-9);
  }
}

TEST_CASE("removed attackers contribute nothing") {
  GameState s = guaranteed_dilemma_state();
  s.alive[1] = false;
  const RegionBundle b = build_regions(s, guaranteed_dilemma_speeds());
  CHECK(b.one_fast[1].is_empty());
  CHECK(b.two_slow[0].is_empty());
  CHECK(b.i1_fast.is_empty());
  CHECK(b.r1v1.is_empty());
}

TEST_CASE("r1v1 widens the overlap by the speed ratio") {
  const SpeedParams p{0.2, 0.7};
  const ArcSet i1(Arc{0.3, 0.1});
  const ArcSet r = r1v1_set(i1, p);
  REQUIRE(r.size() == 1);
  CHECK(r.arcs()[0].center == doctest::Approx(0.3));
  CHECK(r.arcs()[0].half_width == doctest::Approx(0.35));
  CHECK(r1v1_set(ArcSet(Arc{0.0, 1.0}), p).is_full());
  CHECK(r1v1_set(ArcSet::empty(), p).is_empty());
  const std::vector<Arc> two{{0.0, 0.1}, {2.0, 0.1}};
  CHECK_THROWS_AS((void)r1v1_set(ArcSet(std::span<const Arc>(two)), p), std::invalid_argument);
}

TEST_CASE("far edge rate reaches one only at opposite extreme edge rates") {
  Gen g(32);
  for (int i = 0; i < 200; ++i) {
    const double lo = g.uniform(0.05, 0.5);
    const SpeedParams p{lo, g.uniform(lo + 0.01, 1.0)};
    const double a = p.alpha();
    CHECK(theta_ub_rate(a, -a, p) == doctest::Approx(-1.0));
    CHECK(theta_ub_rate(-a, a, p) == doctest::Approx(1.0));
    CHECK(theta_ub_rate(0.3, 0.3, p) == doctest::Approx(0.3));
    const double x = g.uniform(-a, a), y = g.uniform(-a, a);
    CHECK(std::abs(theta_ub_rate(x, y, p)) < 1.0);
  }
}

TEST_CASE("distances point at the nearest edges") {
  const GameState s = forcing_state();
  const RegionBundle b = build_regions(s, forcing_speeds());
  const auto d = dilemma_distances(s.theta_T, b);
  CHECK(d.d1 == doctest::Approx(0.24208720313570747).epsilon(1e-9));
  CHECK(d.d2 == doctest::Approx(0.23064787942935094).epsilon(1e-9));
  CHECK(d.side1 == Rotation::CW);
  CHECK(d.side2 == Rotation::CCW);
  CHECK(d.theta_B1 == doctest::Approx(-d.d1));
  CHECK(d.theta_B2 == doctest::Approx(d.d2));
  CHECK_FALSE(b.r1v1.contains(s.theta_T));
  CHECK_FALSE(b.r2v1.contains(s.theta_T));
}

TEST_CASE("regions rotate with the state") {
  Gen g(33);
  const SpeedParams p{0.2, 0.7};
  for (int i = 0; i < 100; ++i) {
    const GameState s = random_state(g);
    const double phi = g.uniform(-kPi, kPi);
    const RegionBundle a = build_regions(s, p), b = build_regions(rotated(s, phi), p);
    REQUIRE(a.r1v1.measure() == doctest::Approx(b.r1v1.measure()).epsilon(1e-9).scale(1.0));
    REQUIRE(a.r2v1.measure() == doctest::Approx(b.r2v1.measure()).epsilon(1e-7).scale(1.0));
  }
}

TEST_CASE("existence curve readings differ by four barrier constants") {
  const SpeedParams p{0.2, 0.7};
  const AttackerPolar a1{1.5, 0.4};
  const double gap = existence_theta(a1, 1.3, p, BoundaryReading::Derived) -
                     existence_theta(a1, 1.3, p, BoundaryReading::AsPrinted);
  CHECK(gap == doctest::Approx(4.0 * barrier_f(1.0, 0.7)));
}

TEST_CASE("existence curve is where the fast arcs start to overlap") {
  const SpeedParams p{0.2, 0.7};
  const AttackerPolar a1{1.5, 0.4};
  for (double r2 : {1.1, 1.3, 1.5}) {
    const double th = existence_theta(a1, r2, p, BoundaryReading::Derived);
    const ArcSet in = intersect(region_1v1(a1, p.nu_fast), region_1v1({r2, th + 1e-6}, p.nu_fast));
    const ArcSet out = intersect(region_1v1(a1, p.nu_fast), region_1v1({r2, th - 1e-6}, p.nu_fast));
    CHECK_FALSE(in.is_empty());
    CHECK(out.is_empty());
  }
}

}  // TEST_SUITE

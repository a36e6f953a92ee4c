#include <doctest.h>

#include <cmath>

#include "gen.hpp"
#include "turret/one_vs_one.hpp"

using namespace turret;
using turret::testing::Gen;

TEST_SUITE("one_vs_one") {

TEST_CASE("barrier function reference values") {
  CHECK(barrier_f(1.0, 0.7) == doctest::Approx(0.224805231036264).epsilon(1e-13));
  CHECK(barrier_f(2.0, 0.2) == doctest::Approx(8.479245465432863).epsilon(1e-13));
  CHECK(barrier_f(2.0, 0.7) == doctest::Approx(1.463202490449927).epsilon(1e-13));
  CHECK(barrier_f(0.7, 0.7) == 0.0);
}

TEST_CASE("winning half-width reference values") {
  CHECK(w_1v1(2.0, 0.7) == doctest::Approx(1.238397259413664).epsilon(1e-13));
  CHECK(w_1v1(2.0, 0.2) == doctest::Approx(4.949704385871072).epsilon(1e-13));
  CHECK(w_1v1(1.0, 0.5) == 0.0);
}

TEST_CASE("optimal heading is the tangent angle") {
  const Motion m = attacker_1v1_heading(2.0, 0.3, 0.7);
  CHECK(m.speed == 0.7);
  CHECK(m.heading == doctest::Approx(0.357571103645510).epsilon(1e-13));
  CHECK(attacker_1v1_heading(2.0, -0.3, 0.7).heading == doctest::Approx(-0.357571103645510).epsilon(1e-13));
  CHECK(attacker_1v1_heading(2.0, 0.0, 0.7).heading > 0.0);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS((void)barrier_f(0.5, 0.7), std::domain_error);
  CHECK_THROWS_AS((void)barrier_f(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS((void)w_1v1(0.9, 0.5), std::domain_error);
  CHECK_THROWS_AS((SpeedParams{0.7, 0.2}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((SpeedParams{0.2, 1.2}.validate()), std::invalid_argument);
  CHECK_NOTHROW((SpeedParams{0.2, 1.0}.validate()));
}

TEST_CASE("value changes sign on the region edge") {
  Gen g(11);
  for (int i = 0; i < 1000; ++i) {
    const double nu = g.uniform(0.05, 1.0), r = g.uniform(1.0, 4.0), th = g.uniform(-3.0, 3.0);
    const double w = w_1v1(r, nu);
    const ArcSet reg = region_1v1({r, th}, nu);
    REQUIRE(std::abs(v_1v1(r, w, nu)) < 1e-12);
    const double rel = g.uniform(-kPi, kPi);
    if (std::abs(std::abs(rel) - w) < 1e-9) continue;
    REQUIRE(reg.contains(th - rel) == (v_1v1(r, rel, nu) < 0.0));
  }
}

TEST_CASE("half-width grows with distance and shrinks with speed") {
  Gen g(12);
  for (int i = 0; i < 1000; ++i) {
    const double nu = g.uniform(0.05, 0.95), r = g.uniform(1.0, 4.0), dr = g.uniform(1e-3, 1.0);
    REQUIRE(w_1v1(r + dr, nu) > w_1v1(r, nu));
    REQUIRE(w_1v1(r, nu + 0.04) < w_1v1(r, nu) + 1e-15);
  }
}

TEST_CASE("edge rate is the derivative of the edge along the motion") {
  Gen g(13);
  for (int i = 0; i < 200; ++i) {
    const double nu = g.uniform(0.1, 0.9), r = g.uniform(1.1, 3.0);
    const Motion m{g.uniform(0.0, nu), g.uniform(-kPi, kPi)};
    const double h = 1e-7;
    const auto rate = polar_rate(r, m);
    // CW edge at theta - w(r).
    const auto edge = [&](double t) { return (rate.dtheta * t) - w_1v1(r + rate.dr * t, nu); };
    const double fd = (edge(h) - edge(-h)) / (2.0 * h);
    REQUIRE(lb_boundary_rate(r, m.heading, m.speed, nu) == doctest::Approx(fd).epsilon(1e-5).scale(1.0));
  }
}

TEST_CASE("polar rates") {
  const auto p = polar_rate(2.0, {0.5, 0.0});
  CHECK(p.dr == doctest::Approx(-0.5));
  CHECK(p.dtheta == doctest::Approx(0.0));
  const auto q = polar_rate(2.0, {0.5, kPi / 2.0});
  CHECK(q.dr == doctest::Approx(0.0).scale(1.0));
  CHECK(q.dtheta == doctest::Approx(0.25));
}

}  // TEST_SUITE

#include <doctest.h>

#include <cmath>

#include "gen.hpp"
#include "turret/one_vs_one.hpp"
#include "turret/two_vs_one.hpp"

using namespace turret;
using turret::testing::Gen;

TEST_SUITE("two_vs_one") {

TEST_CASE("runner solution reference values") {
  const auto sol = solve_theta_tilde(2.0, 0.5, 0.2);
  CHECK(sol.theta_tilde == doctest::Approx(0.555587358494328).epsilon(1e-12));
  CHECK(sol.capture_radius == doctest::Approx(1.996910841145205).epsilon(1e-12));
  CHECK(dtheta_tilde_dtheta_T(2.0, 0.5, 0.2) == doctest::Approx(-1.111302127751946).epsilon(1e-9));
  const double a = (2.0 / 0.2) * std::cos(sol.theta_tilde - 0.5);
  CHECK(a == doctest::Approx(9.984554205726027).epsilon(1e-11));
}

TEST_CASE("runner heading reference value") {
  const Motion m = runner_motion({2.0, 0.5}, 0.0, 0.2);
  CHECK(m.speed == 0.2);
  CHECK(std::abs(m.heading) == doctest::Approx(1.515208968300569).epsilon(1e-10));
}

TEST_CASE("solver returns the smallest root") {
  Gen g(21);
  int solved = 0;
  for (int i = 0; i < 2000; ++i) {
    const double nu = g.uniform(0.05, 0.9), r = g.uniform(1.0, 4.0), rel = g.uniform(0.0, 1.5);
    const auto sol = try_solve_theta_tilde(r, rel, nu);
    if (!sol) continue;
    ++solved;
    REQUIRE(std::abs(runner_residual(r, rel, nu, sol->theta_tilde)) < 1e-10);
    REQUIRE(sol->theta_tilde >= rel);
    REQUIRE(sol->capture_radius >= 1.0);
    // The residual stays negative on a fine grid below the root.
    const int n = 400;
    for (int k = 1; k < n; ++k) {
      const double x = rel + (sol->theta_tilde - rel) * k / n;
      REQUIRE(runner_residual(r, rel, nu, x) < 1e-12);
    }
  }
  CHECK(solved > 500);
}

TEST_CASE("no capture outside the target") {
  CHECK_THROWS_AS((void)solve_theta_tilde(1.05, 2.0, 0.5), NoCapture);
  CHECK_FALSE(try_solve_theta_tilde(1.05, 2.0, 0.5).has_value());
  CHECK(std::isinf(v_2v1_or_inf({1.05, 2.0}, {2.0, -1.0}, 0.0, 0.5)));
}

TEST_CASE("sensitivity matches finite differences") {
  Gen g(22);
  int used = 0;
  for (int i = 0; i < 500 && used < 100; ++i) {
    const double nu = g.uniform(0.1, 0.8), r = g.uniform(1.5, 4.0), rel = g.uniform(0.05, 1.0);
    const double h = 1e-6;
    const auto lo = try_solve_theta_tilde(r, rel - h, nu), hi = try_solve_theta_tilde(r, rel + h, nu);
    if (!lo || !hi) continue;
    ++used;
    // theta_rel = theta_A - theta_T, so moving the turret flips the sign.
    const double fd = -(hi->theta_tilde - lo->theta_tilde) / (2.0 * h);
    const double d = dtheta_tilde_dtheta_T(r, rel, nu);
    REQUIRE(d == doctest::Approx(fd).epsilon(1e-4));
    REQUIRE(d < -1.0);
  }
  CHECK(used == 100);
}

TEST_CASE("two-attacker region is inside the runner's single region") {
  Gen g(23);
  for (int i = 0; i < 300; ++i) {
    const double nu = g.uniform(0.1, 0.6);
    const AttackerPolar a1{g.uniform(1.0, 3.0), g.uniform(-kPi, kPi)};
    const AttackerPolar a2{g.uniform(1.0, 3.0), g.uniform(-kPi, kPi)};
    for (int runner : {0, 1}) {
      const auto order = CaptureOrder::runner(runner);
      const ArcSet reg = region_2v1(a1, a2, order, nu);
      const ArcSet single = region_1v1(runner == 0 ? a1 : a2, nu);
      REQUIRE(difference(reg, single).measure() < 1e-9);
      for (int k = 0; k < 20; ++k) {
        const double th = g.uniform(-kPi, kPi);
        const auto& run = runner == 0 ? a1 : a2;
        const auto& pen = runner == 0 ? a2 : a1;
        const double v = v_2v1_or_inf(run, pen, th, nu);
        if (std::abs(v) < 1e-6) continue;
        const bool near_edge = boundary_distance(th, reg, Rotation::CW) < 1e-6 ||
                               boundary_distance(th, reg, Rotation::CCW) < 1e-6;
        if (near_edge) continue;
        if (reg.contains(th)) REQUIRE(v < 0.0);
      }
    }
  }
}

TEST_CASE("capture order formatting") {
  CHECK(to_string(CaptureOrder{0, 1}) == "A1->A2");
  CHECK(to_string(CaptureOrder::runner(1)) == "A2->A1");
}

}  // TEST_SUITE

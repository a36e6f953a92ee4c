#include <doctest.h>

#include <cmath>
#include <cstring>

#include "scenarios.hpp"
#include "turret/checks.hpp"
#include "turret/simulator.hpp"

using namespace turret;
using namespace turret::testing;

namespace {

SimConfig config(const GameState& s, const std::string& turret, const std::string& attackers, double dt = 1e-3) {
  SimConfig c;
  c.initial = s;
  c.speeds = {0.25, 0.7};
  c.turret = make_turret_policy({.name = turret});
  c.attackers = make_attacker_policy({.name = attackers});
  c.dt = dt;
  c.t_max = 20.0;
  return c;
}

}  // namespace

TEST_SUITE("simulator") {

TEST_CASE("radial motion and turret rotation are integrated exactly") {
  GameState s;
  s.attackers = {AttackerPolar{2.0, 1.0}, AttackerPolar{3.0, -2.0}};
  Controls c;
  c.omega_T = -0.5;
  c.attackers = {Motion{0.3, 0.0}, Motion{0.2, kPi}};
  const GameState n = step(s, c, 0.1);
  CHECK(n.theta_T == doctest::Approx(-0.05).epsilon(1e-14));
  CHECK(n.attackers[0].r == doctest::Approx(1.97).epsilon(1e-14));
  CHECK(n.attackers[1].r == doctest::Approx(3.02).epsilon(1e-14));
  CHECK(n.attackers[0].theta == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(n.t == doctest::Approx(0.1));
}

TEST_CASE("a fixed heading traces a logarithmic spiral") {
  GameState s;
  s.attackers = {AttackerPolar{2.0, 0.0}, AttackerPolar{2.0, kPi / 2}};
  Controls c;
  const double phi = kPi / 4, v = 0.5;
  c.attackers = {Motion{v, phi}, Motion{v, kPi / 2}};
  for (int k = 0; k < 100; ++k) s = step(s, c, 0.01);
  const double r = 2.0 - v * std::cos(phi);
  CHECK(s.attackers[0].r == doctest::Approx(r).epsilon(1e-12));
  CHECK(s.attackers[0].theta == doctest::Approx(std::tan(phi) * std::log(2.0 / r)).epsilon(1e-10));
  // Pure tangential motion keeps the radius.
  CHECK(s.attackers[1].r == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s.attackers[1].theta == doctest::Approx(kPi / 2 + 0.25).epsilon(1e-12));
}

TEST_CASE("events are interpolated inside the step") {
  GameState a;
  a.attackers = {AttackerPolar{1.2, 0.1}, AttackerPolar{2.0, 2.0}};
  GameState b = a;
  b.t = 0.1;
  b.theta_T = 0.2;
  b.attackers[0].r = 1.15;
  auto ev = detect_events(a, b, {});
  REQUIRE(ev.size() == 1);
  CHECK(ev[0].kind == EventKind::Capture);
  CHECK(ev[0].attacker == 0);
  CHECK(ev[0].t == doctest::Approx(0.05));

  b.theta_T = 0.0;
  b.attackers[0].r = 0.8;
  ev = detect_events(a, b, {});
  REQUIRE(ev.size() == 1);
  CHECK(ev[0].kind == EventKind::Breach);
  CHECK(ev[0].t == doctest::Approx(0.05).epsilon(1e-6));

  // Both in one step: the earlier one counts.
  b.theta_T = 0.2;
  b.attackers[0].r = 1.19;
  CHECK(detect_events(a, b, {})[0].kind == EventKind::Capture);
  b.attackers[0].r = 0.9;
  b.theta_T = 0.15;
  CHECK(detect_events(a, b, {})[0].kind == EventKind::Breach);
}

TEST_CASE("a wrap across the back of the circle is not a capture") {
  GameState a;
  a.theta_T = 0.2;
  a.attackers = {AttackerPolar{2.0, -3.0}, AttackerPolar{2.0, 1.5}};
  REQUIRE(a.rel(0) > 0.0);
  GameState b = a;
  b.theta_T = -0.2;
  b.t = 0.1;
  REQUIRE(b.rel(0) < 0.0);
  CHECK(detect_events(a, b, {}).empty());
}

TEST_CASE("steps are cut at events so survivors re-plan at once") {
  GameState s;
  s.attackers = {AttackerPolar{1.1, 2.0}, AttackerPolar{3.0, -2.0}};
  SimConfig c = config(s, "hold", "tangent", 0.3);
  c.attackers = {"inward", [](const AttackerContext& x) {
                   std::array<Motion, kNumAttackers> m{};
                   for (auto& v : m) v = {x.true_nu, 0.0};
                   return m;
                 }};
  const auto tr = simulate(c);
  REQUIRE(tr.t_final[0].has_value());
  CHECK(*tr.t_final[0] == doctest::Approx(0.4).epsilon(1e-6));
  bool cut = false;
  for (const auto& smp : tr.samples) cut = cut || std::abs(smp.t - 0.4) < 1e-6;
  CHECK(cut);
  for (const auto& smp : tr.samples) {
    if (smp.t > 0.41 && smp.t < 7.9) REQUIRE(std::abs(std::remainder(smp.t, 0.3)) < 1e-9);
  }
  CHECK(tr.J == 2);
  CHECK(tr.t_F == doctest::Approx(8.0).epsilon(1e-6));
}

TEST_CASE("runs are deterministic") {
  const auto c = config(forcing_state(), "seek_r2v1", "forcing_switch");
  const auto a = simulate(c), b = simulate(c);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t k = 0; k < a.samples.size(); ++k) {
    REQUIRE(a.samples[k].state == b.samples[k].state);
    REQUIRE(std::memcmp(&a.samples[k].controls, &b.samples[k].controls, sizeof(Controls)) == 0);
  }
  CHECK(a.J == b.J);
}

TEST_CASE("attackers never exceed the true speed") {
  SimConfig c = config(guaranteed_dilemma_state(), "pursue", "informed_response");
  c.speeds = guaranteed_dilemma_speeds();
  c.attackers = make_attacker_policy({.name = "informed_response"});
  for (Speed sp : {Speed::Slow, Speed::Fast}) {
    c.true_speed = sp;
    const auto tr = simulate(c);
    for (const auto& smp : tr.samples) {
      for (const auto& m : smp.controls.attackers) REQUIRE(m.speed <= c.true_nu());
      REQUIRE(std::abs(smp.controls.omega_T) <= 1.0);
    }
  }
}

TEST_CASE("initial removals and the horizon") {
  GameState s;
  s.attackers = {AttackerPolar{2.0, 0.0}, AttackerPolar{1.0, 2.0}};
  auto c = config(s, "hold", "tangent");
  const auto tr = simulate(c);
  REQUIRE(tr.events.size() >= 2);
  CHECK(tr.events[0].kind == EventKind::Capture);
  CHECK(tr.events[1].kind == EventKind::Breach);
  CHECK(tr.J == 1);

  s.attackers = {AttackerPolar{5.0, 1.0}, AttackerPolar{5.0, -1.0}};
  c = config(s, "hold", "ss_fh");
  c.attackers = {"still", [](const AttackerContext&) { return std::array<Motion, kNumAttackers>{}; }};
  c.t_max = 0.5;
  const auto idle = simulate(c);
  CHECK(idle.horizon_reached);
  CHECK(idle.t_F == doctest::Approx(0.5));
  CHECK_THROWS_AS((void)simulate([] { SimConfig bad; bad.dt = 0.0; return bad; }()), std::invalid_argument);
}

TEST_CASE("open-loop commitments from a guaranteed dilemma") {
  const auto m = open_loop_matrix(guaranteed_dilemma_state(), guaranteed_dilemma_speeds());
  CHECK(m.J[0][0] == 0);
  CHECK(m.J[0][1] == 2);
  CHECK(m.J[1][0] == 1);
  CHECK(m.J[1][1] == 1);
  CHECK_THROWS_AS((void)open_loop_matrix(forcing_state(), forcing_speeds()), std::invalid_argument);
}

}  // TEST_SUITE

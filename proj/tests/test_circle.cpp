#include <doctest.h>

#include <cmath>
#include <vector>

#include "gen.hpp"
#include "turret/circle.hpp"

using namespace turret;
using turret::testing::Gen;

namespace {

ArcSet random_set(Gen& g) {
  std::vector<Arc> arcs;
  const int n = g.integer(0, 4);
  for (int i = 0; i < n; ++i) arcs.push_back({g.uniform(-4.0, 4.0), g.uniform(0.0, 1.2)});
  return ArcSet(std::span<const Arc>(arcs));
}

// Membership straight from the raw arcs, bypassing normalization.
bool raw_contains(const std::vector<Arc>& arcs, double theta) {
  for (const auto& a : arcs) {
    if (std::abs(std::remainder(theta - a.center, kTwoPi)) <= a.half_width) return true;
  }
  return false;
}

// Sample points that stay clear of every arc endpoint.
std::vector<double> probes(Gen& g, const std::vector<ArcSet>& sets, int n) {
  std::vector<double> out;
  while (static_cast<int>(out.size()) < n) {
    const double x = g.uniform(-kPi, kPi);
    bool clear = true;
    for (const auto& s : sets) {
      for (const auto& a : s.arcs()) {
        if (std::abs(signed_diff(x, a.lower())) < 1e-9 || std::abs(signed_diff(x, a.upper())) < 1e-9) clear = false;
      }
    }
    if (clear) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_SUITE("circle") {

TEST_CASE("canonical lands in (-pi, pi]") {
  CHECK(canonical(kPi) == doctest::Approx(kPi));
  CHECK(canonical(-kPi) == doctest::Approx(kPi));
  CHECK(canonical(3.0 * kPi) == doctest::Approx(kPi));
  CHECK(canonical(0.5 + 4.0 * kTwoPi) == doctest::Approx(0.5));
  Gen g(1);
  for (int i = 0; i < 10000; ++i) {
    const double x = canonical(g.uniform(-100.0, 100.0));
    REQUIRE(x > -kPi);
    REQUIRE(x <= kPi);
  }
}

TEST_CASE("signed difference wraps the short way") {
  CHECK(signed_diff(-3.0, 3.0) == doctest::Approx(0.283185307179586).epsilon(1e-14));
  CHECK(signed_diff(3.0, -3.0) == doctest::Approx(-0.283185307179586).epsilon(1e-14));
  CHECK(signed_diff(1.0, 0.25) == doctest::Approx(0.75));
}

TEST_CASE("rotation_to is directional") {
  CHECK(rotation_to(0.0, 1.0, Rotation::CCW) == doctest::Approx(1.0));
  CHECK(rotation_to(0.0, 1.0, Rotation::CW) == doctest::Approx(kTwoPi - 1.0));
  CHECK(rotation_to(2.0, 2.0, Rotation::CW) == 0.0);
  Gen g(2);
  for (int i = 0; i < 1000; ++i) {
    const double a = g.uniform(-kPi, kPi), b = g.uniform(-kPi, kPi);
    const double s = rotation_to(a, b, Rotation::CCW) + rotation_to(a, b, Rotation::CW);
    REQUIRE((std::abs(s - kTwoPi) < 1e-12 || s < 1e-12));
  }
}

TEST_CASE("sgn of zero is positive") {
  CHECK(sgn_nonzero(0.0) == 1.0);
  CHECK(sgn_nonzero(-0.0) == 1.0);
  CHECK(sgn_nonzero(-1e-300) == -1.0);
}

TEST_CASE("arc wrapping the cut is one arc") {
  const ArcSet s(Arc{kPi, 0.3});
  CHECK(s.size() == 1);
  CHECK(s.contains(kPi - 0.2));
  CHECK(s.contains(-kPi + 0.2));
  CHECK_FALSE(s.contains(0.0));
  CHECK(s.measure() == doctest::Approx(0.6));
}

TEST_CASE("overlapping and touching arcs merge") {
  const std::vector<Arc> arcs{{0.0, 0.5}, {0.9, 0.4}, {2.0, 0.1}};
  const ArcSet s{std::span<const Arc>(arcs)};
  REQUIRE(s.size() == 2);
  CHECK(s.arcs()[0].lower() == doctest::Approx(-0.5));
  CHECK(s.arcs()[0].upper() == doctest::Approx(1.3));
}

TEST_CASE("full and empty") {
  CHECK(ArcSet::full().is_full());
  CHECK(ArcSet::full().measure() == doctest::Approx(kTwoPi));
  CHECK(complement(ArcSet::full()).is_empty());
  CHECK(complement(ArcSet::empty()).is_full());
  CHECK(ArcSet(Arc{1.0, 4.0}).is_full());
  CHECK(boundary_distance(0.0, ArcSet::full(), Rotation::CW) == kNoBoundary);
  CHECK(boundary_distance(0.0, ArcSet::empty(), Rotation::CW) == kNoBoundary);
}

TEST_CASE("set algebra agrees with pointwise membership") {
  Gen g(3);
  for (int trial = 0; trial < 500; ++trial) {
    const ArcSet a = random_set(g), b = random_set(g);
    const ArcSet i = intersect(a, b), u = unite(a, b), c = complement(a), d = difference(a, b);
    for (double x : probes(g, {a, b, i, u, c, d}, 50)) {
      const bool in_a = a.contains(x), in_b = b.contains(x);
      REQUIRE(i.contains(x) == (in_a && in_b));
      REQUIRE(u.contains(x) == (in_a || in_b));
      REQUIRE(c.contains(x) == !in_a);
      REQUIRE(d.contains(x) == (in_a && !in_b));
    }
  }
}

TEST_CASE("normalization preserves membership and leaves disjoint sorted arcs") {
  Gen g(4);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Arc> raw;
    const int n = g.integer(1, 6);
    for (int k = 0; k < n; ++k) raw.push_back({g.uniform(-7.0, 7.0), g.uniform(0.0, 1.0)});
    const ArcSet s{std::span<const Arc>(raw)};
    for (double x : probes(g, {s}, 50)) REQUIRE(s.contains(x) == raw_contains(raw, x));
    for (std::size_t k = 1; k < s.size(); ++k) REQUIRE(s.arcs()[k - 1].lower() < s.arcs()[k].lower());
    double total = 0.0;
    for (const auto& a : s.arcs()) total += a.width();
    REQUIRE(total <= kTwoPi + 1e-12);
    const ArcSet again = normalize(s);
    REQUIRE(again.size() == s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
      REQUIRE(std::abs(signed_diff(again.arcs()[k].center, s.arcs()[k].center)) < 1e-12);
      REQUIRE(again.arcs()[k].half_width == doctest::Approx(s.arcs()[k].half_width).epsilon(1e-12));
    }
  }
}

TEST_CASE("measure matches the sampled fraction") {
  Gen g(5);
  for (int trial = 0; trial < 50; ++trial) {
    const ArcSet s = random_set(g);
    const int n = 20000;
    int hits = 0;
    for (int k = 0; k < n; ++k) hits += s.contains(-kPi + kTwoPi * (k + 0.5) / n);
    REQUIRE(std::abs(s.measure() - kTwoPi * hits / n) <= 8.0 * kTwoPi / n);
  }
}

TEST_CASE("nearest boundary picks the closer edge") {
  const ArcSet s(Arc::from_bounds(0.5, 1.0));
  const auto nb = nearest_boundary(0.0, s);
  CHECK(nb.direction == Rotation::CCW);
  CHECK(nb.distance == doctest::Approx(0.5));
  CHECK(nb.point == doctest::Approx(0.5));
  const auto inside = nearest_boundary(1.3, s);
  CHECK(inside.direction == Rotation::CCW);
  CHECK(inside.distance == doctest::Approx(0.2));
  CHECK(boundary_distance(0.0, s, Rotation::CW) == doctest::Approx(kTwoPi - 1.5));
}

}  // TEST_SUITE

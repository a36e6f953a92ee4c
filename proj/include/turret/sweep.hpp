#pragma once

// Classification maps over the second attacker's initial position.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "turret/classifier.hpp"

namespace turret {

struct SweepSpec {
  AttackerPolar a1{1.5, 0.4};
  double theta_T = 0.0;
  SpeedParams speeds;
  double r_min = 1.0;
  double r_max = 3.0;
  int n_r = 200;
  double theta_min = -kPi;
  double theta_max = 0.0;
  int n_theta = 200;
  BoundaryReading reading = BoundaryReading::Derived;
  /// Zero picks the hardware concurrency.
  unsigned threads = 0;

  bool operator==(const SweepSpec&) const = default;
};

struct SweepCell {
  double r = 0.0;
  double theta = 0.0;
  Case label = Case::UncapturableSlow;
  std::optional<CaptureOrder> order;
};

struct SweepGrid {
  SweepSpec spec;
  /// Row-major: radius index outer, angle index inner.
  std::vector<SweepCell> cells;

  [[nodiscard]] const SweepCell& at(int ir, int it) const { return cells[std::size_t(ir) * spec.n_theta + it]; }
  [[nodiscard]] double r_step() const noexcept { return (spec.r_max - spec.r_min) / (spec.n_r - 1); }
  [[nodiscard]] double theta_step() const noexcept { return (spec.theta_max - spec.theta_min) / (spec.n_theta - 1); }
};

/// Runs fn(i) for i in [0, n) on a pool of threads; results are stored by index.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn fn, unsigned threads = 0) {
  std::vector<T> out(n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) out[i] = fn(i);
  };
  if (threads <= 1) {
    work();
    return out;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned k = 0; k < threads; ++k) pool.emplace_back(work);
  return out;
}

/// Throws std::invalid_argument for fewer than two steps or empty ranges.
[[nodiscard]] SweepGrid run_sweep(const SweepSpec& spec);

struct NamedCurve {
  std::string name;
  Polyline points;
};

/// Boundary loci for A2 (radius, angle) over the sweep's radius range.
[[nodiscard]] std::vector<NamedCurve> sweep_curves(const SweepSpec& spec);

/// Label counts indexed by Case.
[[nodiscard]] std::array<int, kNumCases> label_counts(const SweepGrid& g);

/// Sizes of the 4-connected components of cells carrying the label, largest first.
[[nodiscard]] std::vector<int> component_sizes(const SweepGrid& g, Case label);

/// Number of 4-connected components of cells carrying the label.
[[nodiscard]] int connected_components(const SweepGrid& g, Case label);

}  // namespace turret

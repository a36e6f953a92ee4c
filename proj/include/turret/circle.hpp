#pragma once

// Angle arithmetic on the unit circle and a closed arc-set algebra.
//
// Every angle handed out by this header is canonical, i.e. lies in (-pi, pi].
// Arc sets are kept in normalized form: a sorted list of pairwise disjoint,
// non-touching closed arcs. Arcs that touch at a single point are merged.

#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace turret {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Sentinel returned by distance queries against an empty set.
inline constexpr double kNoBoundary = std::numeric_limits<double>::infinity();

/// Rotational sense on the circle. CCW is the positive angular direction.
enum class Rotation { CW, CCW };

[[nodiscard]] constexpr double sign_of(Rotation d) noexcept { return d == Rotation::CCW ? 1.0 : -1.0; }
[[nodiscard]] constexpr Rotation opposite(Rotation d) noexcept {
  return d == Rotation::CCW ? Rotation::CW : Rotation::CCW;
}
[[nodiscard]] std::string to_string(Rotation d);

/// Maps any finite angle to (-pi, pi].
[[nodiscard]] double canonical(double theta) noexcept;

/// Signed rotation a - b, canonicalized to (-pi, pi].
[[nodiscard]] double signed_diff(double a, double b) noexcept;

/// Nonnegative rotation in direction `d` that carries `from` onto `to`; in [0, 2pi).
[[nodiscard]] double rotation_to(double from, double to, Rotation d) noexcept;

/// sgn with sgn(0) = +1, so pursuit rules stay total at alignment.
[[nodiscard]] constexpr double sgn_nonzero(double x) noexcept { return x < 0.0 ? -1.0 : 1.0; }

/// A closed arc described by its center and half-width.
/// A half-width of pi or more is the full circle.
struct Arc {
  double center = 0.0;
  double half_width = 0.0;

  [[nodiscard]] static Arc from_bounds(double lo, double span) noexcept;

  [[nodiscard]] bool is_full() const noexcept { return half_width >= kPi; }
  [[nodiscard]] bool contains(double theta) const noexcept;
  /// CW end of the arc.
  [[nodiscard]] double lower() const noexcept { return canonical(center - half_width); }
  /// CCW end of the arc.
  [[nodiscard]] double upper() const noexcept { return canonical(center + half_width); }
  [[nodiscard]] double width() const noexcept { return is_full() ? kTwoPi : 2.0 * half_width; }

  bool operator==(const Arc&) const = default;
};

/// Union of closed arcs, stored in normalized form.
class ArcSet {
 public:
  ArcSet() = default;
  explicit ArcSet(Arc a);
  /// Builds a normalized set from arbitrary (possibly overlapping) arcs.
  explicit ArcSet(std::span<const Arc> arcs);

  [[nodiscard]] static ArcSet empty() { return {}; }
  [[nodiscard]] static ArcSet full();

  [[nodiscard]] bool is_empty() const noexcept { return arcs_.empty(); }
  [[nodiscard]] bool is_full() const noexcept { return arcs_.size() == 1 && arcs_.front().is_full(); }
  [[nodiscard]] std::size_t size() const noexcept { return arcs_.size(); }
  [[nodiscard]] const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  [[nodiscard]] bool contains(double theta) const noexcept;
  [[nodiscard]] double measure() const noexcept;

  bool operator==(const ArcSet&) const = default;

 private:
  std::vector<Arc> arcs_;
};

[[nodiscard]] ArcSet intersect(const ArcSet& a, const ArcSet& b);
[[nodiscard]] ArcSet unite(const ArcSet& a, const ArcSet& b);
/// Closure of the complement.
[[nodiscard]] ArcSet complement(const ArcSet& s);
/// Closure of a \ b.
[[nodiscard]] ArcSet difference(const ArcSet& a, const ArcSet& b);
[[nodiscard]] ArcSet normalize(const ArcSet& s);

/// Smallest nonnegative rotation from theta in direction d that reaches a
/// boundary point of s. Returns kNoBoundary when s is empty or the full circle.
[[nodiscard]] double boundary_distance(double theta, const ArcSet& s, Rotation d) noexcept;

/// Rotation-free distance from theta to the nearest boundary point of s, and
/// the direction in which that boundary lies.
struct NearestBoundary {
  double distance = kNoBoundary;
  Rotation direction = Rotation::CCW;
  double point = 0.0;
};
[[nodiscard]] NearestBoundary nearest_boundary(double theta, const ArcSet& s) noexcept;

}  // namespace turret

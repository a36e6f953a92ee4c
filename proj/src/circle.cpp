#include "turret/circle.hpp"

#include <algorithm>
#include <cmath>

namespace turret {

namespace {

// Closed-set membership slack for points computed as arc endpoints.
constexpr double kMembershipTol = 1e-12;

struct Interval {
  double lo;
  double hi;
};

// Unrolls an arc onto [-pi, pi]; arcs crossing the cut at +/-pi become two intervals.
void unroll(const Arc& a, std::vector<Interval>& out) {
  if (a.is_full()) {
    out.push_back({-kPi, kPi});
    return;
  }
  const double lo = canonical(a.center - a.half_width);
  const double hi = lo + 2.0 * a.half_width;
  if (hi <= kPi) {
    out.push_back({lo, hi});
  } else {
    out.push_back({lo, kPi});
    out.push_back({-kPi, hi - kTwoPi});
  }
}

std::vector<Interval> merged(std::vector<Interval> v) {
  std::sort(v.begin(), v.end(), [](const Interval& x, const Interval& y) {
    return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
  });
  std::vector<Interval> out;
  for (const auto& iv : v) {
    if (!out.empty() && iv.lo <= out.back().hi) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

std::vector<Interval> unrolled(const ArcSet& s) {
  std::vector<Interval> v;
  for (const auto& a : s.arcs()) unroll(a, v);
  return merged(std::move(v));
}

// Rolls merged intervals back onto the circle, joining pieces that meet at the cut.
std::vector<Arc> rolled(std::vector<Interval> iv) {
  std::vector<Arc> arcs;
  if (iv.empty()) return arcs;
  if (iv.size() == 1 && iv.front().lo <= -kPi && iv.front().hi >= kPi) {
    arcs.push_back({0.0, kPi});
    return arcs;
  }
  if (iv.size() > 1 && iv.front().lo <= -kPi && iv.back().hi >= kPi) {
    const double lo = iv.back().lo;
    const double hi = iv.front().hi + kTwoPi;
    iv.back() = {lo, hi};
    iv.erase(iv.begin());
  }
  arcs.reserve(iv.size());
  for (const auto& x : iv) arcs.push_back(Arc::from_bounds(x.lo, x.hi - x.lo));
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.lower() < b.lower(); });
  return arcs;
}

}  // namespace

std::string to_string(Rotation d) { return d == Rotation::CCW ? "CCW" : "CW"; }

double canonical(double theta) noexcept {
  double r = std::remainder(theta, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

double signed_diff(double a, double b) noexcept { return canonical(a - b); }

double rotation_to(double from, double to, Rotation d) noexcept {
  double x = d == Rotation::CCW ? to - from : from - to;
  x = std::fmod(x, kTwoPi);
  if (x < 0.0) x += kTwoPi;
  if (x >= kTwoPi) x = 0.0;
  return x;
}

Arc Arc::from_bounds(double lo, double span) noexcept {
  if (span >= kTwoPi) return {0.0, kPi};
  return {canonical(lo + 0.5 * span), 0.5 * std::max(span, 0.0)};
}

bool Arc::contains(double theta) const noexcept {
  return is_full() || std::abs(signed_diff(theta, center)) <= half_width + kMembershipTol;
}

ArcSet::ArcSet(Arc a) {
  if (a.half_width < 0.0) return;
  if (a.is_full()) a = {0.0, kPi};
  a.center = canonical(a.center);
  arcs_.push_back(a);
}

ArcSet::ArcSet(std::span<const Arc> arcs) {
  std::vector<Interval> v;
  for (const auto& a : arcs) {
    if (a.half_width >= 0.0) unroll(a, v);
  }
  arcs_ = rolled(merged(std::move(v)));
}

ArcSet ArcSet::full() { return ArcSet(Arc{0.0, kPi}); }

bool ArcSet::contains(double theta) const noexcept {
  return std::any_of(arcs_.begin(), arcs_.end(), [theta](const Arc& a) { return a.contains(theta); });
}

double ArcSet::measure() const noexcept {
  double m = 0.0;
  for (const auto& a : arcs_) m += a.width();
  return std::min(m, kTwoPi);
}

ArcSet normalize(const ArcSet& s) { return ArcSet(std::span<const Arc>(s.arcs())); }

ArcSet intersect(const ArcSet& a, const ArcSet& b) {
  const auto x = unrolled(a);
  const auto y = unrolled(b);
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    const double lo = std::max(x[i].lo, y[j].lo);
    const double hi = std::min(x[i].hi, y[j].hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (x[i].hi < y[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  const auto arcs = rolled(merged(std::move(out)));
  return ArcSet(std::span<const Arc>(arcs));
}

ArcSet unite(const ArcSet& a, const ArcSet& b) {
  std::vector<Arc> all = a.arcs();
  all.insert(all.end(), b.arcs().begin(), b.arcs().end());
  return ArcSet(std::span<const Arc>(all));
}

ArcSet complement(const ArcSet& s) {
  const auto iv = unrolled(s);
  std::vector<Interval> gaps;
  double cursor = -kPi;
  for (const auto& x : iv) {
    if (x.lo > cursor) gaps.push_back({cursor, x.lo});
    cursor = std::max(cursor, x.hi);
  }
  if (cursor < kPi) gaps.push_back({cursor, kPi});
  const auto arcs = rolled(merged(std::move(gaps)));
  return ArcSet(std::span<const Arc>(arcs));
}

ArcSet difference(const ArcSet& a, const ArcSet& b) { return intersect(a, complement(b)); }

double boundary_distance(double theta, const ArcSet& s, Rotation d) noexcept {
  if (s.is_empty() || s.is_full()) return kNoBoundary;
  double best = kNoBoundary;
  for (const auto& a : s.arcs()) {
    best = std::min(best, rotation_to(theta, a.lower(), d));
    best = std::min(best, rotation_to(theta, a.upper(), d));
  }
  return best;
}

NearestBoundary nearest_boundary(double theta, const ArcSet& s) noexcept {
  const double ccw = boundary_distance(theta, s, Rotation::CCW);
  const double cw = boundary_distance(theta, s, Rotation::CW);
  if (ccw == kNoBoundary && cw == kNoBoundary) return {};
  if (ccw <= cw) return {ccw, Rotation::CCW, canonical(theta + ccw)};
  return {cw, Rotation::CW, canonical(theta - cw)};
}

}  // namespace turret

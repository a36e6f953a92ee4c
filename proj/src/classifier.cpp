#include "turret/classifier.hpp"

#include <array>
#include <stdexcept>

namespace turret {

namespace {

constexpr std::array<const char*, kNumCases> kCaseNames = {
    "GuaranteedTwoCaptures", "UncapturableSlow", "UncapturableFast", "InconsequentialSpeed",
    "MatchingDirections",    "GuaranteedDilemma", "AvoidDilemma",    "ForceDilemma",
};

}  // namespace

const char* to_string(Case c) noexcept { return kCaseNames[static_cast<std::size_t>(c)]; }

std::optional<Case> case_from_string(const std::string& s) {
  for (std::size_t i = 0; i < kCaseNames.size(); ++i) {
    if (s == kCaseNames[i]) return static_cast<Case>(i);
  }
  return std::nullopt;
}

bool is_dilemma(Case c) noexcept {
  return c == Case::GuaranteedDilemma || c == Case::AvoidDilemma || c == Case::ForceDilemma;
}

Classification classify(const GameState& s, const SpeedParams& p) { return classify(s, p, build_regions(s, p)); }

Classification classify(const GameState& s, const SpeedParams& /*p*/, const RegionBundle& b) {
  const double th = s.theta_T;
  Classification c;
  auto& m = c.m;
  m.in_u2_fast = b.u2_fast.contains(th);
  m.in_u1_slow = b.u1_slow.contains(th);
  m.in_u1_fast = b.u1_fast.contains(th);
  m.in_u2_slow = b.u2_slow.contains(th);
  for (int i = 0; i < kNumAttackers; ++i) {
    m.in_two_slow[i] = b.two_slow[i].contains(th);
    m.in_one_fast[i] = b.one_fast[i].contains(th);
  }
  m.i1_fast_empty = b.i1_fast.is_empty();
  m.i2_slow_empty = b.i2_slow.is_empty();
  m.in_r1v1 = b.r1v1.contains(th);
  m.in_r2v1 = b.r2v1.contains(th);

  if (m.in_u2_fast) {
    c.label = Case::GuaranteedTwoCaptures;
    for (int i = 0; i < kNumAttackers; ++i) {
      if (b.two_fast[i].contains(th)) c.slow_order = CaptureOrder::runner(i);
    }
    return c;
  }
  if (!m.in_u1_slow) {
    c.label = Case::UncapturableSlow;
    return c;
  }
  if (!m.in_u1_fast) {
    c.label = Case::UncapturableFast;
    return c;
  }
  if (!m.in_u2_slow) {
    c.label = Case::InconsequentialSpeed;
    return c;
  }

  // Same pursuit direction for the slow runner and the fast single attacker means the
  // two games share the turret's optimal move.
  std::optional<std::pair<int, int>> mismatch;
  for (int i = 0; i < kNumAttackers; ++i) {
    if (!m.in_two_slow[i]) continue;
    for (int k = 0; k < kNumAttackers; ++k) {
      if (!m.in_one_fast[k]) continue;
      if (sgn_nonzero(s.rel(i)) == sgn_nonzero(s.rel(k))) {
        c.label = Case::MatchingDirections;
        c.slow_order = CaptureOrder::runner(i);
        c.fast_attacker = k;
        return c;
      }
      if (!mismatch) mismatch = std::pair{i, k};
    }
  }
  c.slow_order = CaptureOrder::runner(mismatch->first);
  c.fast_attacker = mismatch->second;

  if (m.in_r2v1) throw std::logic_error("classify: turret inside the slow overlap without a matching direction");
  if (m.i2_slow_empty && m.i1_fast_empty) {
    c.label = Case::GuaranteedDilemma;
  } else if (m.in_r1v1) {
    c.label = Case::AvoidDilemma;
  } else {
    c.label = Case::ForceDilemma;
  }
  return c;
}

}  // namespace turret

#pragma once

// Shared fixtures and independent oracles for the test binaries.

#include <cstdint>
#include <optional>
#include <vector>

#include "windmill/io.hpp"

namespace testing_support {

using namespace windmill;

/// Seed of the i-th corpus set of size n.
inline std::uint64_t corpus_seed(std::size_t n, std::size_t i) { return 1000003ULL * n + i; }

inline PointSet corpus_set(std::size_t n, std::size_t i) { return gen_points(n, corpus_seed(n, i), 100); }

/// Diamond pseudo-angle of (u, w) with w > 0, increasing from 0 (direction
/// (1, 0)) to 2 (direction (-1, 0)).
inline Rational diamond(const Rational& u, const Rational& w) {
  const Rational au = u < 0 ? Rational(-u) : u;
  return 1 - u / (au + w);
}

/// Next pivot found by measuring, for every candidate c, how far the line
/// must turn (in the run's sense, modulo a half turn) before it contains c.
/// Uses neither orient() nor the engine's pairwise comparison.
inline std::optional<PointIndex> angular_next_pivot(const PointSet& s, const Stop& stop) {
  const Point& a = s[stop.pivot];
  const Point d = s[stop.other] - a;
  const int sigma = to_int(stop.sense);
  std::optional<PointIndex> best;
  Rational best_angle;
  for (PointIndex c = 0; c < s.size(); ++c) {
    if (c == stop.pivot || c == stop.other) continue;
    const Point v = s[c] - a;
    Rational u = d.x * v.x + d.y * v.y;
    Rational w = sigma * (d.x * v.y - d.y * v.x);
    if (w < 0) {
      u = -u;
      w = -w;
    }
    const Rational angle = diamond(u, w);
    if (!best || angle < best_angle) {
      best = c;
      best_angle = angle;
    }
  }
  return best;
}

/// Orientation reference p for the transition out of stops[t]: the previous
/// partner, or f(0) for the first stop.
inline PointIndex reference_for(const Trace& tr, std::size_t t, std::size_t n) {
  if (t > 0) return tr.stops[t - 1].other;
  const Stop& st = tr.stops.front();
  return reference_index(st.other + 1, st.pivot + 1, n).value - 1;
}

}  // namespace testing_support

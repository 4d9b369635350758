#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "windmill/indexing.hpp"
#include "windmill/point_set.hpp"

namespace windmill {

/// A windmill stop: the line through two points of S, with the point the
/// line currently rotates about.
///
/// `south` is the orient(pivot, other, .) sign of the Southern half-plane.
/// `sense` is the sign, relative to the East direction, of the half-plane the
/// East ray sweeps into; it is fixed when the run starts (East = pivot->other
/// at the start, so sense = south there) and is carried unchanged.
struct Stop {
  PointIndex pivot;
  PointIndex other;
  Sign south;
  Sign sense;

  /// East points from pivot to other.
  bool pivot_is_west() const { return south == sense; }

  friend bool operator==(const Stop&, const Stop&) = default;
};

enum class OddCase {
  I,   ///< South is the side holding fewer points; δ starts at +1
  II,  ///< South is the side holding more points; δ starts at -1
};

namespace detail {

inline void check_stop(const PointSet& s, const Stop& stop) {
  if (stop.pivot >= s.size() || stop.other >= s.size()) throw ContractError("stop index out of range");
  if (stop.pivot == stop.other) throw ContractError("stop pivot and other coincide");
  if (stop.south == Sign::Zero || stop.sense == Sign::Zero) throw ContractError("stop sign must be nonzero");
}

}  // namespace detail

/// Starting stop with East = pivot->other, so the rotation sweeps the East ray
/// into the given Southern side.
inline Stop make_start(const PointSet& s, PointIndex pivot, PointIndex other, Sign south) {
  Stop stop{pivot, other, south, south};
  detail::check_stop(s, stop);
  return stop;
}

/// Index of the lexicographically smallest point, a vertex of the convex hull.
inline PointIndex hull_vertex(const PointSet& s) {
  PointIndex best = 0;
  for (PointIndex i = 1; i < s.size(); ++i) {
    if (lex_less(s[i], s[best])) best = i;
  }
  return best;
}

/// Stop through the hull vertex and the median of the other points in
/// angular order around it, so the line splits the rest as evenly as parity
/// allows. With two points there is nothing to split and South is taken
/// to be the positive side.
inline Stop halving_start(const PointSet& s, OddCase odd_case = OddCase::I) {
  const std::size_t n = s.size();
  const PointIndex pivot = hull_vertex(s);
  if (n == 2) return Stop{pivot, 1 - pivot, Sign::Positive, Sign::Positive};
  std::vector<PointIndex> others;
  for (PointIndex i = 0; i < n; ++i) {
    if (i != pivot) others.push_back(i);
  }
  // Every other point lies in the half-plane x > x_pivot (or straight above),
  // where the cross-product sign is a strict angular order.
  std::sort(others.begin(), others.end(), [&](PointIndex a, PointIndex b) {
    return s.orient(pivot, a, b) == Sign::Positive;
  });
  const std::size_t m = (n - 2) / 2;
  const PointIndex other = others[m];
  // `m` points precede the median counterclockwise, so they lie on the
  // negative side of pivot->other; n - 2 - m lie on the positive side.
  Sign south;
  if (n % 2 == 0) {
    const auto ref = reference_index(pivot + 1, other + 1, n);
    south = s.orient(pivot, other, ref.value - 1);
  } else {
    south = odd_case == OddCase::I ? Sign::Negative : Sign::Positive;
  }
  return Stop{pivot, other, south, south};
}

/// The stop reached when the line, rotating about the pivot, first meets
/// another point of S. The met point becomes the pivot and the old pivot the
/// other point.
inline Stop next_stop(const PointSet& s, const Stop& stop) {
  detail::check_stop(s, stop);
  const PointIndex a = stop.pivot;
  const PointIndex b = stop.other;
  const bool east_forward = stop.pivot_is_west();
  if (s.size() == 2) {
    // Half a turn brings the line back onto itself; the East label follows
    // the rotation, so it still points from the new pivot to the new other.
    return Stop{b, a, east_forward ? stop.sense : -stop.sense, stop.sense};
  }
  // The ray a->b sweeps the side where orient(a, b, .) == sense; the opposite
  // ray sweeps the other side. Each candidate is represented by the
  // direction, within the swept side of a->b, at which the line meets it.
  std::optional<PointIndex> best;
  int best_flip = 0;
  for (PointIndex c = 0; c < s.size(); ++c) {
    if (c == a || c == b) continue;
    const Sign side = s.orient(a, b, c);
    if (side == Sign::Zero) throw std::logic_error("next_stop: collinear triple in point set");
    const int flip = side == stop.sense ? 1 : -1;
    if (!best) {
      best = c;
      best_flip = flip;
      continue;
    }
    // cross(v(c), v(best)) = flip_c * flip_best * orient(a, c, best)
    const int cr = flip * best_flip * to_int(s.orient(a, c, *best));
    if (cr == 0) throw std::logic_error("next_stop: angular tie between candidates");
    if (cr == to_int(stop.sense)) {
      best = c;
      best_flip = flip;
    }
  }
  const PointIndex c = *best;
  const bool met_by_forward_ray = best_flip == 1;
  // East follows the ray that met c: it points at c iff the East ray met it.
  const bool east_to_c = east_forward == met_by_forward_ray;
  // New stop is (c, a); East = c->a iff East did not point at c.
  const Sign south = east_to_c ? -stop.sense : stop.sense;
  return Stop{c, a, south, stop.sense};
}

/// δ(ab) = N(ab) - S(ab): points strictly North minus points strictly South.
inline int delta_count(const PointSet& s, const Stop& stop) {
  detail::check_stop(s, stop);
  int north = 0;
  int south = 0;
  for (PointIndex i = 0; i < s.size(); ++i) {
    if (i == stop.pivot || i == stop.other) continue;
    const Sign side = s.orient(stop.pivot, stop.other, i);
    if (side == stop.south) {
      ++south;
    } else if (side == -stop.south) {
      ++north;
    }
  }
  return north - south;
}

struct Trace {
  std::vector<Stop> stops;
  std::vector<int> deltas;
  /// Number of steps after which the start state recurred.
  std::optional<std::size_t> first_return;
  std::set<PointIndex> pivots_seen;
};

inline std::size_t default_max_steps(std::size_t n) { return n * (n - 1) + 1; }

inline Trace run(const PointSet& s, const Stop& start, std::size_t max_steps) {
  if (max_steps < 1) throw ContractError("run: max_steps must be at least 1");
  detail::check_stop(s, start);
  Trace t;
  Stop current = start;
  t.stops.push_back(current);
  t.deltas.push_back(delta_count(s, current));
  t.pivots_seen.insert(current.pivot);
  for (std::size_t step = 1; step <= max_steps; ++step) {
    current = next_stop(s, current);
    if (current == start) {
      t.first_return = step;
      break;
    }
    t.stops.push_back(current);
    t.deltas.push_back(delta_count(s, current));
    t.pivots_seen.insert(current.pivot);
  }
  return t;
}

inline Trace run(const PointSet& s, const Stop& start) {
  return run(s, start, default_max_steps(s.size()));
}

struct Report {
  std::set<int> delta_values;
  std::vector<bool> pivot_west;  ///< per stop
  std::optional<std::size_t> cycle_length;
  bool coverage = false;
  bool halving = false;
  /// Expected δ range for a halving start; empty when not applicable.
  std::vector<int> delta_class;
  std::vector<std::string> violations;
};

/// Checks a trace against the bookkeeping invariants. With `halving` set the
/// start is taken to be a halving stop and the δ range, East/West correlation
/// (even n), closure bound and pivot coverage are also checked.
inline Report analyze(const Trace& t, std::size_t n, bool halving = true) {
  Report r;
  r.halving = halving;
  r.cycle_length = t.first_return;
  r.coverage = t.pivots_seen.size() == n;
  auto fail = [&](std::string msg) { r.violations.push_back(std::move(msg)); };

  if (t.deltas.size() != t.stops.size()) fail("deltas and stops differ in length");
  for (std::size_t i = 0; i < t.stops.size(); ++i) {
    r.pivot_west.push_back(t.stops[i].pivot_is_west());
    if (i < t.deltas.size()) r.delta_values.insert(t.deltas[i]);
  }
  for (std::size_t i = 0; i + 1 < t.stops.size(); ++i) {
    const Stop& cur = t.stops[i];
    const Stop& nxt = t.stops[i + 1];
    if (nxt.other != cur.pivot) fail("step " + std::to_string(i + 1) + ": new stop does not keep the old pivot");
    if (n > 2 && (nxt.pivot == cur.other || nxt.pivot == cur.pivot)) {
      fail("step " + std::to_string(i + 1) + ": consecutive stops share both points");
    }
    if (nxt.sense != cur.sense) fail("step " + std::to_string(i + 1) + ": rotation sense changed");
  }
  for (std::size_t i = 0; i < t.deltas.size(); ++i) {
    const int d = t.deltas[i];
    const int bound = static_cast<int>(n) - 2;
    if (d > bound || d < -bound || ((d - bound) % 2) != 0) {
      fail("stop " + std::to_string(i) + ": δ=" + std::to_string(d) + " is not a count difference of n-2 points");
    }
  }
  if (!halving || t.stops.empty()) return r;

  const int d0 = t.deltas.front();
  if (n % 2 == 0) {
    r.delta_class = {0, 2};
  } else if (d0 == -1) {
    r.delta_class = {-1, 1};
  } else {
    r.delta_class = {1, 3};
  }
  if (!t.stops.front().pivot_is_west()) fail("start: pivot is not West of the other point");
  if ((n % 2 == 0 && d0 != 0) || (n % 2 == 1 && d0 != 1 && d0 != -1)) {
    fail("start: δ=" + std::to_string(d0) + " is not a halving split");
  }
  for (std::size_t i = 0; i < t.deltas.size(); ++i) {
    const int d = t.deltas[i];
    if (std::find(r.delta_class.begin(), r.delta_class.end(), d) == r.delta_class.end()) {
      fail("stop " + std::to_string(i) + ": δ=" + std::to_string(d) + " outside its range");
    }
    if (n % 2 == 0) {
      const bool west = t.stops[i].pivot_is_west();
      if ((d == 0) != west) {
        fail("stop " + std::to_string(i) + ": δ=" + std::to_string(d) + " but pivot is " + (west ? "West" : "East"));
      }
    }
  }
  if (!t.first_return) {
    fail("no return to the start state");
  } else if (*t.first_return > closure_bound(n)) {
    fail("return after " + std::to_string(*t.first_return) + " steps exceeds n(n-1)");
  }
  if (!r.coverage) fail("not every point became a pivot before the first return");
  return r;
}

}  // namespace windmill

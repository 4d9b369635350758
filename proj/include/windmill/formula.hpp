#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "windmill/engine.hpp"
#include "windmill/indexing.hpp"
#include "windmill/point_set.hpp"

namespace windmill {

/// Sub- and superscripts j, k, l of π, each 0 or 1.
struct PiFlags {
  int j = 0;
  int k = 0;
  int l = 0;

  friend bool operator==(const PiFlags&, const PiFlags&) = default;
};

inline constexpr std::array<PiFlags, 8> kAllPiFlags{{
    {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1},
}};

namespace detail {

// Superscript: φ when ε = 0, ¬φ when ε = 1. (The incidence-plane axioms use
// the opposite convention; see axioms.hpp.)
inline bool sup(int eps, bool phi) { return eps == 0 ? phi : !phi; }
// Subscript: ⊥ when ε = 0, φ when ε = 1.
inline bool sub(int eps, bool phi) { return eps == 0 ? false : phi; }
inline int mod2(int v) { return ((v % 2) + 2) % 2; }

inline void check_bits(const PiFlags& f) {
  for (int b : {f.j, f.k, f.l}) {
    if (b != 0 && b != 1) throw ContractError("pi flags must be bits");
  }
}

}  // namespace detail

/// π^j_{k,l}(a, b, p, c): rotating line ⟨a, b⟩ about a meets c before any
/// other point of S, in the sense fixed by p and j.
///
/// Zero-based indices. a, b, c pairwise distinct; p not in {a, b}; p may
/// equal c.
inline bool pi_eval(const PointSet& s, PointIndex a, PointIndex b, PointIndex p, PointIndex c,
                    PiFlags f) {
  detail::check_bits(f);
  const std::size_t n = s.size();
  if (a >= n || b >= n || p >= n || c >= n) throw ContractError("pi_eval: index out of range");
  if (a == b || a == c || b == c) throw ContractError("pi_eval: a, b, c must be pairwise distinct");
  if (p == a || p == b) throw ContractError("pi_eval: p must differ from a and b");

  using detail::mod2;
  using detail::sup;
  using detail::sub;
  const bool head = (sup(mod2(f.j + f.k + 1), s.opposite_sides(a, c, b, p)) ||
                     sub(mod2(f.j + f.l), p == c)) &&
                    sup(mod2(f.j + f.l), s.opposite_sides(a, b, c, p));
  if (!head) return false;
  for (PointIndex i = 0; i < n; ++i) {
    if (i == a || i == b || i == c || i == p) continue;
    const bool d_abc = s.opposite_sides(a, b, c, i);
    const bool d_acb = s.opposite_sides(a, c, b, i);
    const bool clause = (sup(1 - f.k, d_abc) && sup(f.l, d_acb)) ||
                        (sup(f.k, d_abc) && sup(1 - f.l, d_acb));
    if (!clause) return false;
  }
  return true;
}

/// The flag triples for which π^j_{k,l}(a, b, p, c) holds.
inline std::vector<PiFlags> satisfied_flags(const PointSet& s, PointIndex a, PointIndex b,
                                            PointIndex p, PointIndex c) {
  std::vector<PiFlags> out;
  for (const PiFlags& f : kAllPiFlags) {
    if (pi_eval(s, a, b, p, c, f)) out.push_back(f);
  }
  return out;
}

/// Every point c (with its l) satisfying π^j_{k,l}(a, b, p, c) for the given
/// j and k.
inline std::vector<std::pair<PointIndex, PiFlags>> pi_successors(const PointSet& s, PointIndex a,
                                                                 PointIndex b, PointIndex p, int j, int k) {
  std::vector<std::pair<PointIndex, PiFlags>> out;
  for (PointIndex c = 0; c < s.size(); ++c) {
    if (c == a || c == b) continue;
    for (int l : {0, 1}) {
      const PiFlags f{j, k, l};
      if (pi_eval(s, a, b, p, c, f)) out.emplace_back(c, f);
    }
  }
  return out;
}

/// k of the transition out of `stop`: 1 when its pivot is West.
inline int west_flag(const Stop& stop) { return stop.pivot_is_west() ? 1 : 0; }

/// In a witness both j and k come from earlier bits of g, leaving l free.
/// j is k xor [p lies in the half-plane swept by the ray pivot->other].
inline int admissible_j(const PointSet& s, const Stop& stop, PointIndex p) {
  const int k = west_flag(stop);
  const int p_swept = s.orient(stop.pivot, stop.other, p) == stop.sense ? 1 : 0;
  return k ^ p_swept;
}

/// Flags the bit chain assigns to the transition stop -> next with
/// orientation reference p.
inline PiFlags expected_flags(const PointSet& s, const Stop& stop, PointIndex p, const Stop& next) {
  return PiFlags{admissible_j(s, stop, p), west_flag(stop), 1 - west_flag(next)};
}

/// A witness (f, g) of the windmill statement: pivot labels f(1..k) in 1..n
/// and bits g(1..k). Stored zero-offset: f[0] is f(1).
struct Schedule {
  std::vector<std::size_t> f;
  std::vector<int> g;
  std::size_t k = 0;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// How a schedule must close.
enum class Closure {
  /// f(k-1) = f(1), f(k) = f(2): the last stop is the first stop.
  ReturnToStart,
  /// f(k-1) = f(2), f(k) = f(1), as the defining formula is printed.
  Literal,
};

/// Reason `w` is not a member of K_n x {0,1}^k, or nullopt when it is.
inline std::optional<std::string> schedule_defect(const Schedule& w, std::size_t n,
                                                  Closure closure = Closure::ReturnToStart) {
  if (w.k != w.f.size()) return "k does not match the length of f";
  if (w.g.size() != w.k) return "g and f differ in length";
  if (w.k < 3) return "k must be at least 3";
  if (w.k > alpha(n)) return "k exceeds alpha(n)";
  std::vector<bool> hit(n + 1, false);
  for (std::size_t v : w.f) {
    if (v < 1 || v > n) return "f value out of 1..n";
    hit[v] = true;
  }
  for (std::size_t v = 1; v <= n; ++v) {
    if (!hit[v]) return "f is not onto 1..n (misses " + std::to_string(v) + ")";
  }
  for (int bit : w.g) {
    if (bit != 0 && bit != 1) return "g value is not a bit";
  }
  for (std::size_t i = 3; i <= w.k; ++i) {
    const std::size_t fi = w.f[i - 1];
    if (fi == w.f[i - 2] || fi == w.f[i - 3]) {
      return "f(" + std::to_string(i) + ") repeats one of the two preceding values";
    }
  }
  const std::size_t last = w.f[w.k - 1];
  const std::size_t before_last = w.f[w.k - 2];
  const bool closed = closure == Closure::ReturnToStart
                          ? (before_last == w.f[0] && last == w.f[1])
                          : (before_last == w.f[1] && last == w.f[0]);
  if (!closed) return "f does not close";
  return std::nullopt;
}

/// Visits every f in K_n (every admissible length k <= α(n)). Sizes grow
/// super-exponentially, so n > 4 needs `allow_large`.
inline void for_each_kn(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& visit,
                        Closure closure = Closure::ReturnToStart, bool allow_large = false) {
  if (n < 2) throw ContractError("for_each_kn: n must be at least 2");
  if (n > 4 && !allow_large) throw ContractError("for_each_kn: full enumeration refused for n > 4");
  const std::size_t max_len = alpha(n);
  std::vector<std::size_t> f;
  std::vector<int> uses(n + 1, 0);
  std::size_t distinct = 0;
  std::function<void()> extend = [&]() {
    const std::size_t len = f.size();
    if (len >= 3 && distinct == n) {
      const bool closed = closure == Closure::ReturnToStart
                              ? (f[len - 2] == f[0] && f[len - 1] == f[1])
                              : (f[len - 2] == f[1] && f[len - 1] == f[0]);
      if (closed) visit(f);
    }
    if (len == max_len) return;
    for (std::size_t v = 1; v <= n; ++v) {
      if (len >= 1 && v == f[len - 1]) continue;
      if (len >= 2 && v == f[len - 2]) continue;
      f.push_back(v);
      if (uses[v]++ == 0) ++distinct;
      extend();
      if (--uses[v] == 0) --distinct;
      f.pop_back();
    }
  };
  extend();
}

inline std::vector<std::vector<std::size_t>> enumerate_kn(std::size_t n,
                                                          Closure closure = Closure::ReturnToStart,
                                                          bool allow_large = false) {
  std::vector<std::vector<std::size_t>> out;
  for_each_kn(n, [&](const std::vector<std::size_t>& f) { out.push_back(f); }, closure, allow_large);
  return out;
}

/// One-based f(i) for 0 <= i <= k, with f(0) from reference_index.
inline std::size_t schedule_label(const Schedule& w, std::size_t i, std::size_t n) {
  if (i == 0) return reference_index(w.f[0], w.f[1], n).value;
  return w.f.at(i - 1);
}

/// The first i in 3..k whose conjunct π fails, or nullopt when all hold.
inline std::optional<std::size_t> failing_conjunct(const PointSet& s, const Schedule& w,
                                                   Closure closure = Closure::ReturnToStart) {
  const std::size_t n = s.size();
  if (n < 3) throw ContractError("failing_conjunct: needs at least three points");
  if (auto why = schedule_defect(w, n, closure)) throw ContractError("invalid schedule: " + *why);
  for (std::size_t i = 3; i <= w.k; ++i) {
    const PiFlags flags{1 - w.g[i - 3], 1 - w.g[i - 2], w.g[i - 1]};
    const PointIndex a = schedule_label(w, i - 1, n) - 1;
    const PointIndex b = schedule_label(w, i - 2, n) - 1;
    const PointIndex p = schedule_label(w, i - 3, n) - 1;
    const PointIndex c = schedule_label(w, i, n) - 1;
    if (c == a || c == b || p == a || p == b) return i;
    if (!pi_eval(s, a, b, p, c, flags)) return i;
  }
  return std::nullopt;
}

inline bool check_witness(const PointSet& s, const Schedule& w, Closure closure = Closure::ReturnToStart) {
  return !failing_conjunct(s, w, closure).has_value();
}

/// Lays a closed, covering trace out as a schedule. The first conjunct
/// rotates about a_{f(2)}, so f(2) is the start pivot and f(1) its partner.
/// g(1), g(2) are seeded (1, 0) when a_{f(0)} lies in the half-plane swept by
/// the start ray, else (0, 0); later bits are the unique l that makes each
/// conjunct hold.
inline Schedule trace_to_witness(const PointSet& s, const Trace& t) {
  const std::size_t n = s.size();
  if (n < 3) throw ContractError("trace_to_witness: needs at least three points");
  if (!t.first_return || t.stops.empty()) throw ContractError("trace_to_witness: trace is not closed");
  if (t.pivots_seen.size() != n) throw ContractError("trace_to_witness: trace does not cover S");
  const Stop& start = t.stops.front();

  // The schedule closes as soon as the line and pivot repeat; the East label
  // may still be reversed there (odd n), which the bits g absorb.
  std::size_t cycle = t.stops.size();
  for (std::size_t i = 1; i < t.stops.size(); ++i) {
    if (t.stops[i].pivot == start.pivot && t.stops[i].other == start.other) {
      cycle = i;
      break;
    }
  }
  Schedule w;
  w.f.push_back(start.other + 1);
  w.f.push_back(start.pivot + 1);
  for (std::size_t i = 1; i < cycle; ++i) w.f.push_back(t.stops[i].pivot + 1);
  w.f.push_back(start.pivot + 1);
  w.k = w.f.size();
  if (w.k > alpha(n)) throw ContractError("trace_to_witness: schedule longer than alpha(n)");

  const std::size_t ref = reference_index(w.f[0], w.f[1], n).value - 1;
  const bool ref_swept = s.orient(start.pivot, start.other, ref) == start.sense;
  w.g = {ref_swept ? 1 : 0, 0};
  for (std::size_t i = 3; i <= w.k; ++i) {
    const PointIndex a = schedule_label(w, i - 1, n) - 1;
    const PointIndex b = schedule_label(w, i - 2, n) - 1;
    const PointIndex p = schedule_label(w, i - 3, n) - 1;
    const PointIndex c = schedule_label(w, i, n) - 1;
    std::vector<int> ok;
    for (int l : {0, 1}) {
      if (pi_eval(s, a, b, p, c, PiFlags{1 - w.g[i - 3], 1 - w.g[i - 2], l})) ok.push_back(l);
    }
    if (ok.size() != 1) {
      throw ContractError("trace_to_witness: conjunct " + std::to_string(i) + " has " +
                          std::to_string(ok.size()) + " admissible bits");
    }
    w.g.push_back(ok.front());
  }
  return w;
}

/// Every (f, g) in K_n x {0,1}^k satisfying all conjuncts (small n only).
inline std::vector<Schedule> enumerate_witnesses(const PointSet& s, Closure closure = Closure::ReturnToStart,
                                                 std::size_t limit = 0) {
  std::vector<Schedule> out;
  const std::size_t n = s.size();
  for_each_kn(n, [&](const std::vector<std::size_t>& f) {
    if (limit && out.size() >= limit) return;
    const std::size_t k = f.size();
    for (std::size_t bits = 0; bits < (std::size_t{1} << k); ++bits) {
      Schedule w{f, std::vector<int>(k), k};
      for (std::size_t i = 0; i < k; ++i) w.g[i] = static_cast<int>((bits >> i) & 1U);
      if (check_witness(s, w, closure)) {
        out.push_back(std::move(w));
        if (limit && out.size() >= limit) return;
      }
    }
  }, closure);
  return out;
}

struct WmResult {
  enum class Method { Vacuous, Enumeration, Construction, Empty };
  bool holds = false;
  Method method = Method::Empty;
  std::optional<Schedule> witness;
  /// One-based labels of the collinear (or coincident) triple making WM vacuous.
  std::optional<std::array<std::size_t, 3>> collinear_triple;
  /// f(0) needed the fallback index.
  bool reference_fallback = false;
};

/// Decides the windmill statement for a concrete point list: vacuously true
/// with a collinear triple; by exhaustive search for n = 3; by running the
/// windmill from a halving start and checking the extracted witness for
/// n >= 4. For n = 2 both disjuncts are empty and WM is false.
inline WmResult wm_eval(std::span<const Point> pts) {
  WmResult r;
  const std::size_t n = pts.size();
  if (n < 2) throw ContractError("wm_eval: needs at least two points");
  if (n >= 3) {
    for (std::size_t i = 0; i < n && !r.collinear_triple; ++i) {
      for (std::size_t j = i + 1; j < n && !r.collinear_triple; ++j) {
        for (std::size_t k = j + 1; k < n && !r.collinear_triple; ++k) {
          if (collinear(pts[i], pts[j], pts[k])) r.collinear_triple = std::array{i + 1, j + 1, k + 1};
        }
      }
    }
    if (r.collinear_triple) {
      r.holds = true;
      r.method = WmResult::Method::Vacuous;
      return r;
    }
  }
  if (n == 2) return r;
  const PointSet s(std::vector<Point>(pts.begin(), pts.end()));
  if (n == 3) {
    auto found = enumerate_witnesses(s, Closure::ReturnToStart, 1);
    r.method = WmResult::Method::Enumeration;
    if (!found.empty()) {
      r.holds = true;
      r.witness = std::move(found.front());
    }
  } else {
    const Trace t = run(s, halving_start(s));
    r.method = WmResult::Method::Construction;
    if (t.first_return && t.pivots_seen.size() == n) {
      Schedule w = trace_to_witness(s, t);
      r.holds = check_witness(s, w);
      r.witness = std::move(w);
    }
  }
  if (r.witness) r.reference_fallback = reference_index(r.witness->f[0], r.witness->f[1], n).fallback;
  return r;
}

}  // namespace windmill

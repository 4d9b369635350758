#pragma once

#include <stdexcept>
#include <string>

#include "windmill/rational.hpp"

namespace windmill {

/// Raised when a caller violates an operation's precondition (coincident
/// points where distinct ones are required, index collisions, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Orientation of an ordered triple. Positive is counterclockwise in
/// standard coordinates.
enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

constexpr Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
constexpr int to_int(Sign s) { return static_cast<int>(s); }

inline Sign sign_from(int v) {
  return v > 0 ? Sign::Positive : (v < 0 ? Sign::Negative : Sign::Zero);
}

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Lexicographic (x, then y) order.
inline bool lex_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }

inline Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

/// Sign of (b - a) x (c - a). Zero iff the three points are collinear,
/// coincident points included.
inline Sign orient(const Point& a, const Point& b, const Point& c) {
  return sign_from(sign_of(cross(b - a, c - a)));
}

inline bool collinear(const Point& a, const Point& b, const Point& c) {
  return orient(a, b, c) == Sign::Zero;
}

/// Strict betweenness Z(abc): b lies strictly inside segment ac.
inline bool between(const Point& a, const Point& b, const Point& c) {
  if (a == b || b == c || a == c) return false;
  if (!collinear(a, b, c)) return false;
  const Point d = c - a;
  // The dominant axis of the carrier gives a faithful 1-D order.
  const bool use_x = abs(d.x) >= abs(d.y);
  const Rational& lo = use_x ? a.x : a.y;
  const Rational& hi = use_x ? c.x : c.y;
  const Rational& mid = use_x ? b.x : b.y;
  return (lo < mid && mid < hi) || (hi < mid && mid < lo);
}

/// δ(abuv): u and v lie strictly on opposite sides of line ⟨a, b⟩.
///
/// The existential form "some t on the line ab lies strictly between u and v"
/// coincides with this sign test in the rational plane: when the signs are
/// opposite the crossing point of segment uv with the line has rational
/// coordinates, and when they are not, segment uv cannot meet the line at an
/// interior point. The witness t is never built.
inline bool opposite_sides(const Point& a, const Point& b, const Point& u, const Point& v) {
  if (a == b) throw ContractError("opposite_sides: line points coincide");
  const Sign su = orient(a, b, u);
  const Sign sv = orient(a, b, v);
  return su != Sign::Zero && sv != Sign::Zero && su != sv;
}

/// a1a2//a3a4 on a common line: exactly one of a3, a4 lies strictly between
/// a1 and a2.
inline bool separates(const Point& a1, const Point& a2, const Point& a3, const Point& a4) {
  const Point pts[4] = {a1, a2, a3, a4};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (pts[i] == pts[j]) throw ContractError("separates: points must be pairwise distinct");
    }
  }
  if (!collinear(a1, a2, a3) || !collinear(a1, a2, a4)) {
    throw ContractError("separates: points must be collinear");
  }
  return between(a1, a3, a2) != between(a1, a4, a2);
}

/// Betweenness recovered from the side relation: a, b, c on one line g and
/// some other line h through b puts a and c on different sides. h is taken
/// as the normal to g at b.
inline bool z_from_D(const Point& a, const Point& b, const Point& c) {
  if (a == b || b == c || a == c) return false;
  if (!collinear(a, b, c)) return false;
  const Point d = c - a;
  const Point h_dir{-d.y, d.x};
  const Point h_far = b + h_dir;
  const Sign sa = orient(b, h_far, a);
  const Sign sc = orient(b, h_far, c);
  return sa != Sign::Zero && sc != Sign::Zero && sa != sc;
}

inline std::string to_string(const Point& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

}  // namespace windmill

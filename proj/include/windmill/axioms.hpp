#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "windmill/kernel.hpp"

namespace windmill {

/// A line of the rational plane in canonical form: `dir` is the primitive
/// integer direction whose first nonzero coordinate is positive, and `base`
/// is the point where the line meets x = 0 (or y = 0 for vertical lines).
/// Two LineReps are equal iff they denote the same point set.
struct LineRep {
  Point base;
  Point dir;

  friend bool operator==(const LineRep&, const LineRep&) = default;

  static LineRep through(const Point& p, const Point& q) {
    if (p == q) throw ContractError("LineRep::through: points coincide");
    return from_direction(p, q - p);
  }

  static LineRep from_direction(const Point& on, const Point& d) {
    if (d.x == 0 && d.y == 0) throw ContractError("LineRep: zero direction");
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    const Integer den = boost::multiprecision::lcm(denominator(d.x), denominator(d.y));
    Integer dx = numerator(d.x) * (den / denominator(d.x));
    Integer dy = numerator(d.y) * (den / denominator(d.y));
    const Integer g = boost::multiprecision::gcd(dx, dy);
    dx /= g;
    dy /= g;
    if (dx < 0 || (dx == 0 && dy < 0)) {
      dx = -dx;
      dy = -dy;
    }
    LineRep r;
    r.dir = Point{Rational(dx), Rational(dy)};
    if (dx != 0) {
      // Slide along the line to x = 0.
      const Rational t = -on.x / r.dir.x;
      r.base = Point{Rational(0), on.y + t * r.dir.y};
    } else {
      r.base = Point{on.x, Rational(0)};
    }
    return r;
  }

  /// Sign of the side of p, zero when incident.
  Sign side(const Point& p) const { return sign_from(sign_of(cross(dir, p - base))); }

  Point at(const Rational& t) const { return Point{base.x + t * dir.x, base.y + t * dir.y}; }
};

/// I(a g).
inline bool incident(const Point& a, const LineRep& g) { return g.side(a) == Sign::Zero; }

/// D(a g b): a and b strictly on different sides of g.
inline bool different_sides(const Point& a, const LineRep& g, const Point& b) {
  const Sign sa = g.side(a);
  const Sign sb = g.side(b);
  return sa != Sign::Zero && sb != Sign::Zero && sa != sb;
}

/// The common point of two lines, or nullopt when they are parallel or equal.
inline std::optional<Point> intersect(const LineRep& g, const LineRep& h) {
  const Rational det = cross(g.dir, h.dir);
  if (det == 0) return std::nullopt;
  // base_g + t dir_g on h: cross(h.dir, base_g + t dir_g - base_h) = 0
  const Rational t = cross(h.dir, h.base - g.base) / cross(h.dir, g.dir);
  return g.at(t);
}

/// δ of the incidence-plane language: g and h agree on whether they separate
/// u from v.
inline bool same_separation(const Point& u, const Point& v, const LineRep& g, const LineRep& h) {
  return different_sides(u, g, v) == different_sides(u, h, v);
}

/// Separation a1a2//a3a4 through lines: h through a1 and k through a2, both
/// other than the common line, disagree on separating a3 from a4.
inline bool defsep(const Point& a1, const Point& a2, const Point& a3, const Point& a4,
                   const LineRep& h, const LineRep& k) {
  const Point pts[4] = {a1, a2, a3, a4};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (pts[i] == pts[j]) throw ContractError("defsep: points must be pairwise distinct");
    }
  }
  const LineRep g = LineRep::through(a1, a2);
  if (!incident(a3, g) || !incident(a4, g)) throw ContractError("defsep: points must be collinear");
  if (!incident(a1, h) || !incident(a2, k) || h == g || k == g) {
    throw ContractError("defsep: h, k must pass through a1, a2 and differ from the carrier");
  }
  return !same_separation(a3, a4, h, k);
}

/// Betweenness defined from incidence and sides: a, b, c on a line g, and a
/// line h != g through b has a and c on different sides.
inline bool defz(const Point& a, const Point& b, const Point& c) {
  if (a == c) return false;
  const LineRep g = LineRep::through(a, c);
  if (!incident(b, g)) return false;
  // Any h through b other than g decides the same way; take the normal.
  const LineRep h = LineRep::from_direction(b, Point{-g.dir.y, g.dir.x});
  return different_sides(a, h, c);
}

enum class Axiom { A1, A2, A3, A4, A5, A6, J1, J2, J3, J4, J5, J6, J7, J8 };

inline constexpr std::array<Axiom, 14> kAllAxioms{Axiom::A1, Axiom::A2, Axiom::A3, Axiom::A4, Axiom::A5,
                                                  Axiom::A6, Axiom::J1, Axiom::J2, Axiom::J3, Axiom::J4,
                                                  Axiom::J5, Axiom::J6, Axiom::J7, Axiom::J8};

inline std::string_view axiom_name(Axiom a) {
  constexpr std::array<std::string_view, 14> names{"A1", "A2", "A3", "A4", "A5", "A6", "J1",
                                                   "J2", "J3", "J4", "J5", "J6", "J7", "J8"};
  return names[static_cast<std::size_t>(a)];
}

inline Axiom parse_axiom(std::string_view name) {
  for (Axiom a : kAllAxioms) {
    if (axiom_name(a) == name) return a;
  }
  throw std::invalid_argument("unknown axiom '" + std::string(name) + "'");
}

struct Violation {
  std::string axiom;
  std::size_t trial;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Seeded generator of points and lines on a bounded rational grid:
/// numerators in [-bound, bound], denominators in [1, max_den].
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, int bound = 12, int max_den = 4)
      : rng_(seed), bound_(bound), max_den_(max_den) {}

  int integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(rng_() % span);
  }

  bool coin(int one_in) { return integer(0, one_in - 1) == 0; }

  Rational scalar() { return Rational(integer(-bound_, bound_), integer(1, max_den_)); }

  Point point() { return Point{scalar(), scalar()}; }

  Point nonzero_direction() {
    for (;;) {
      Point d = point();
      if (d.x != 0 || d.y != 0) return d;
    }
  }

  LineRep line() {
    const Point p = point();
    return LineRep::from_direction(p, nonzero_direction());
  }

  /// A point of g at a random small parameter.
  Point on(const LineRep& g) { return g.at(Rational(integer(-6, 6), integer(1, 3))); }

  /// Either a point of g or a point of the plane.
  Point maybe_on(const LineRep& g) { return coin(3) ? on(g) : point(); }

  /// A line through p different from `avoid`.
  LineRep line_through(const Point& p, const LineRep& avoid) {
    for (;;) {
      LineRep h = LineRep::from_direction(p, nonzero_direction());
      if (!(h == avoid)) return h;
    }
  }

 private:
  std::mt19937_64 rng_;
  int bound_;
  int max_den_;
};

namespace detail {

inline bool L(const Point& a, const Point& b, const Point& c) { return collinear(a, b, c); }

inline std::string pts(std::initializer_list<Point> ps) {
  std::string out;
  for (const Point& p : ps) {
    if (!out.empty()) out += " ";
    out += to_string(p);
  }
  return out;
}

// Incidence-plane superscript: δ when ε = 1, ¬δ when ε = 0.
inline bool sup5(int eps, bool phi) { return eps == 1 ? phi : !phi; }

/// One instantiation of `axiom`; returns a description when it fails.
inline std::optional<std::string> instantiate(Axiom axiom, Sampler& rnd) {
  switch (axiom) {
    case Axiom::A1:
    case Axiom::A2: {
      const LineRep g = rnd.line();
      const bool on_line = !rnd.coin(4);
      const Point a = on_line ? rnd.on(g) : rnd.point();
      const Point b = on_line ? rnd.on(g) : rnd.point();
      const Point c = on_line ? rnd.on(g) : rnd.point();
      if (axiom == Axiom::A1 && between(a, b, c) && !between(c, b, a)) return pts({a, b, c});
      if (axiom == Axiom::A2 && between(a, b, c) && between(a, c, b)) return pts({a, b, c});
      return std::nullopt;
    }
    case Axiom::A3:
    case Axiom::A4:
    case Axiom::A5: {
      const LineRep g = rnd.line();
      const Point a = rnd.on(g), b = rnd.on(g), c = rnd.on(g), d = rnd.on(g);
      bool ok = true;
      if (axiom == Axiom::A3) ok = !(between(a, c, b) && between(a, b, d)) || between(c, b, d);
      if (axiom == Axiom::A4) ok = !(between(c, a, b) && between(a, b, d)) || between(c, b, d);
      if (axiom == Axiom::A5) {
        ok = !(c != d && between(a, b, c) && between(a, b, d)) || between(b, c, d) || between(b, d, c);
      }
      if (!ok) return pts({a, b, c, d});
      return std::nullopt;
    }
    case Axiom::A6: {
      Point a, b, c, d, e;
      do {
        a = rnd.point();
        b = rnd.point();
        c = rnd.point();
      } while (L(a, b, c));
      const Rational t(rnd.integer(1, 7), 8);
      d = Point{a.x + t * (c.x - a.x), a.y + t * (c.y - a.y)};
      do {
        e = rnd.point();
      } while (L(a, c, e) || L(e, d, b));
      // Antecedent holds by construction; f is found by intersecting ⟨e, d⟩
      // with the two remaining sides.
      const LineRep ed = LineRep::through(e, d);
      for (const auto& side : {std::array{a, b}, std::array{b, c}}) {
        if (auto f = intersect(ed, LineRep::through(side[0], side[1]))) {
          if (between(side[0], *f, side[1]) && L(e, d, *f)) return std::nullopt;
        }
      }
      return pts({a, b, c, d, e});
    }
    case Axiom::J1: {
      const Point a = rnd.point();
      Point b;
      do {
        b = rnd.point();
      } while (b == a);
      const LineRep g = LineRep::through(a, b);
      if (!incident(a, g) || !incident(b, g)) return "constructed line misses " + pts({a, b});
      const Point far{a.x + 3 * (b.x - a.x), a.y + 3 * (b.y - a.y)};
      const Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
      if (!(LineRep::through(b, a) == g) || !(LineRep::through(a, far) == g) ||
          !(LineRep::through(mid, b) == g)) {
        return "two representations of the line through " + pts({a, b}) + " differ";
      }
      const LineRep h = rnd.line_through(a, g);
      if (incident(b, h)) return "second line through " + pts({a, b});
      return std::nullopt;
    }
    case Axiom::J2: {
      const LineRep g = rnd.line();
      std::array<Point, 4> on;
      for (int i = 0; i < 4; ++i) on[i] = g.at(Rational(i) + Rational(rnd.integer(0, 5), 7));
      for (int i = 0; i < 4; ++i) {
        if (!incident(on[i], g)) return "constructed point off its line";
        for (int j = i + 1; j < 4; ++j) {
          if (on[i] == on[j]) return "constructed points coincide";
        }
      }
      return std::nullopt;
    }
    case Axiom::J3: {
      const Point a{0, 0}, b{1, 0}, c{0, 1};
      const LineRep g = rnd.coin(4) ? LineRep::through(rnd.coin(2) ? a : b, rnd.coin(2) ? c : Point{2, 0})
                                    : rnd.line();
      if (incident(a, g) && incident(b, g) && incident(c, g)) return "one line through three witnesses";
      return std::nullopt;
    }
    case Axiom::J4:
    case Axiom::J5:
    case Axiom::J6:
    case Axiom::J7: {
      const LineRep g = rnd.line();
      const Point a = rnd.maybe_on(g), b = rnd.maybe_on(g), c = rnd.maybe_on(g);
      bool ok = true;
      if (axiom == Axiom::J4) ok = !different_sides(a, g, b) || !incident(a, g);
      if (axiom == Axiom::J5) ok = !different_sides(a, g, b) || different_sides(b, g, a);
      if (axiom == Axiom::J6) {
        ok = !(!incident(c, g) && different_sides(a, g, b)) || different_sides(a, g, c) ||
             different_sides(b, g, c);
      }
      if (axiom == Axiom::J7) {
        ok = !(different_sides(a, g, b) && different_sides(b, g, c) && different_sides(c, g, a));
      }
      if (!ok) return pts({a, b, c}) + " line " + pts({g.base, g.dir});
      return std::nullopt;
    }
    case Axiom::J8: {
      const LineRep g = rnd.line();
      std::array<Point, 4> a;
      for (;;) {
        for (auto& p : a) p = rnd.on(g);
        bool distinct = true;
        for (int i = 0; i < 4; ++i) {
          for (int j = i + 1; j < 4; ++j) distinct = distinct && !(a[i] == a[j]);
        }
        if (distinct) break;
      }
      std::array<LineRep, 4> h;
      for (int i = 0; i < 4; ++i) h[i] = rnd.line_through(a[i], g);
      const bool d1 = same_separation(a[2], a[3], h[0], h[1]);
      const bool d2 = same_separation(a[1], a[3], h[0], h[2]);
      const bool d3 = same_separation(a[1], a[2], h[0], h[3]);
      bool formula = false;
      for (const auto& eps : {std::array{1, 1, 0}, std::array{1, 0, 1}, std::array{0, 1, 1}}) {
        formula = formula || (sup5(eps[0], d1) && sup5(eps[1], d2) && sup5(eps[2], d3));
      }
      if (!formula) return "separation formula fails on " + pts({a[0], a[1], a[2], a[3]});
      const int count = int(separates(a[0], a[1], a[2], a[3])) + int(separates(a[0], a[2], a[1], a[3])) +
                        int(separates(a[0], a[3], a[1], a[2]));
      if (count != 1) return "separation is not a partition on " + pts({a[0], a[1], a[2], a[3]});
      if (defsep(a[0], a[1], a[2], a[3], h[0], h[1]) != separates(a[0], a[1], a[2], a[3])) {
        return "defsep disagrees with interval separation on " + pts({a[0], a[1], a[2], a[3]});
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Instantiates `axiom` `trials` times with points and lines drawn from a
/// seeded sampler; existential quantifiers are witnessed by construction.
/// Returns every failing instance (expected: none).
inline std::vector<Violation> check_axiom(Axiom axiom, std::uint64_t seed, std::size_t trials) {
  if (trials < 1) throw ContractError("check_axiom: trials must be at least 1");
  // Each axiom gets its own stream so results do not depend on which other
  // axioms were checked.
  Sampler rnd(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(axiom) + 1);
  std::vector<Violation> out;
  for (std::size_t i = 0; i < trials; ++i) {
    if (auto why = detail::instantiate(axiom, rnd)) {
      out.push_back(Violation{std::string(axiom_name(axiom)), i, *why});
    }
  }
  return out;
}

inline std::vector<Violation> check_axiom(std::string_view name, std::uint64_t seed, std::size_t trials) {
  return check_axiom(parse_axiom(name), seed, trials);
}

/// A line and two points it separates although no point of the dyadic
/// plane (denominators powers of 2) lies on both the line and segment ab.
struct DyadicCertificate {
  Point a;
  Point b;
  Point anchor_p;  ///< two dyadic points spanning the separating line
  Point anchor_q;
  /// Affine functional of the separating line, scaled to -1 at the origin.
  Rational side_a;
  Rational side_b;
  Point intersection;
  bool points_dyadic = false;
  bool separated = false;
  bool intersection_between = false;
  bool intersection_dyadic = true;

  friend bool operator==(const DyadicCertificate&, const DyadicCertificate&) = default;
};

namespace detail {

inline bool dyadic_point(const Point& p) { return is_dyadic(p.x) && is_dyadic(p.y); }

inline Rational normalized_side(const Point& p, const Point& q, const Point& x) {
  const Point d = q - p;
  return -cross(d, x - p) / cross(d, Point{0, 0} - p);
}

}  // namespace detail

/// Fills the derived fields of a certificate from a, b and the anchors.
inline DyadicCertificate certify(const Point& a, const Point& b, const Point& anchor_p, const Point& anchor_q) {
  DyadicCertificate c;
  c.a = a;
  c.b = b;
  c.anchor_p = anchor_p;
  c.anchor_q = anchor_q;
  const LineRep g = LineRep::through(anchor_p, anchor_q);
  const LineRep ab = LineRep::through(a, b);
  c.side_a = detail::normalized_side(anchor_p, anchor_q, a);
  c.side_b = detail::normalized_side(anchor_p, anchor_q, b);
  c.points_dyadic = detail::dyadic_point(a) && detail::dyadic_point(b) && detail::dyadic_point(anchor_p) &&
                    detail::dyadic_point(anchor_q);
  c.separated = different_sides(a, g, b);
  const auto x = intersect(g, ab);
  if (!x) throw ContractError("certify: lines are parallel");
  c.intersection = *x;
  c.intersection_between = between(a, *x, b);
  c.intersection_dyadic = detail::dyadic_point(*x);
  return c;
}

inline DyadicCertificate dyadic_counterexample() {
  return certify(Point{0, 0}, Point{2, 2}, Point{0, 1}, Point{2, 0});
}

/// Recomputes the certificate from its stored points and checks the claim:
/// D(a g b) holds, every stored point is dyadic, and the only common point of
/// the two lines is not.
inline bool verify_certificate(const DyadicCertificate& c) {
  const DyadicCertificate again = certify(c.a, c.b, c.anchor_p, c.anchor_q);
  return again == c && c.points_dyadic && c.separated && c.intersection_between && !c.intersection_dyadic;
}

}  // namespace windmill

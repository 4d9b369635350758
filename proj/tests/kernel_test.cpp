#include <gtest/gtest.h>

#include <random>

#include "windmill/axioms.hpp"
#include "windmill/kernel.hpp"
#include "windmill/point_set.hpp"

using namespace windmill;

namespace {

Point P(long x, long y) { return Point{Rational(x), Rational(y)}; }

Rational R(long p, long q) { return Rational(p, q); }

struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  long small(long bound) { return static_cast<long>(g() % (2 * bound + 1)) - bound; }
  Rational rat() { return Rational(small(20), static_cast<long>(g() % 5) + 1); }
  Point point() { return Point{rat(), rat()}; }
};

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/4"), R(3, 4));
  EXPECT_EQ(parse_rational("-6/8"), R(-3, 4));
  EXPECT_EQ(parse_rational("0/7"), Rational(0));
  EXPECT_EQ(parse_rational("+1/2"), R(1, 2));
  EXPECT_EQ(to_string(parse_rational("4/2")), "2/1");
  EXPECT_EQ(to_string(R(-1, 3)), "-1/3");
  for (const char* bad : {"", "3", "1/0", "1/-2", "a/b", "1//2", " 1/2", "1/+2", "1/2/3"}) {
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
  }
}

TEST(Rational, Dyadic) {
  EXPECT_TRUE(is_dyadic(R(3, 8)));
  EXPECT_TRUE(is_dyadic(Rational(5)));
  EXPECT_FALSE(is_dyadic(R(2, 3)));
  EXPECT_FALSE(is_dyadic(R(1, 12)));
}

TEST(Kernel, OrientExamples) {
  EXPECT_EQ(orient(P(0, 0), P(1, 0), P(0, 1)), Sign::Positive);
  EXPECT_EQ(orient(P(0, 0), P(0, 1), P(1, 0)), Sign::Negative);
  EXPECT_EQ(orient(P(0, 0), P(1, 1), P(3, 3)), Sign::Zero);
  EXPECT_EQ(orient(Point{R(1, 3), R(1, 3)}, Point{R(2, 3), R(2, 3)}, Point{R(1, 1), R(1, 1)}), Sign::Zero);
}

TEST(Kernel, OrientSymmetries) {
  Rng rng(1);
  for (int trial = 0; trial < 2000; ++trial) {
    const Point a = rng.point(), b = rng.point(), c = rng.point();
    const Sign s = orient(a, b, c);
    EXPECT_EQ(orient(b, c, a), s);
    EXPECT_EQ(orient(b, a, c), -s);
    EXPECT_EQ(orient(a, c, b), -s);
    // Translation and positive scaling preserve the sign.
    const Point t = rng.point();
    const Rational k = Rational(static_cast<long>(rng.g() % 7) + 1, 3);
    auto map = [&](const Point& p) { return Point{k * p.x + t.x, k * p.y + t.y}; };
    EXPECT_EQ(orient(map(a), map(b), map(c)), s);
  }
}

TEST(Kernel, BetweenExamples) {
  EXPECT_TRUE(between(P(0, 0), P(1, 1), P(2, 2)));
  EXPECT_FALSE(between(P(0, 0), P(2, 2), P(1, 1)));
  EXPECT_FALSE(between(P(0, 0), P(0, 0), P(2, 2)));
  EXPECT_FALSE(between(P(0, 0), P(1, 2), P(2, 2)));
  EXPECT_TRUE(between(P(0, 0), P(0, 1), P(0, 3)));
  EXPECT_TRUE(between(Point{R(0, 1), R(0, 1)}, Point{R(2, 3), R(2, 3)}, Point{R(2, 1), R(2, 1)}));
}

// A1-A5 as properties of the exact model.
TEST(Kernel, BetweennessAxioms) {
  Rng rng(2);
  for (int trial = 0; trial < 5000; ++trial) {
    const Point a = rng.point(), b = rng.point(), c = rng.point(), d = rng.point();
    if (between(a, b, c)) {
      EXPECT_TRUE(between(c, b, a));                         // symmetry
      EXPECT_FALSE(between(a, c, b));                        // exclusivity
      EXPECT_TRUE(collinear(a, b, c));
      EXPECT_TRUE(a != b && b != c && a != c);
    }
    if (between(a, b, c) && between(a, c, d)) {
      EXPECT_TRUE(between(b, c, d));
    }
    if (a != b) {
      // Extension: the reflection of a through b lies beyond b.
      const Point e = Point{2 * b.x - a.x, 2 * b.y - a.y};
      EXPECT_TRUE(between(a, b, e));
    }
    if (a != c) {
      const Point m = Point{(a.x + c.x) / 2, (a.y + c.y) / 2};
      EXPECT_TRUE(between(a, m, c));
    }
    if (collinear(a, b, c) && a != b && b != c && a != c) {
      const int count = between(a, b, c) + between(b, c, a) + between(c, a, b);
      EXPECT_EQ(count, 1);
    }
  }
}

TEST(Kernel, OppositeSides) {
  EXPECT_TRUE(opposite_sides(P(0, 0), P(1, 0), P(0, 1), P(0, -1)));
  EXPECT_FALSE(opposite_sides(P(0, 0), P(1, 0), P(0, 1), P(5, 2)));
  EXPECT_FALSE(opposite_sides(P(0, 0), P(1, 0), P(3, 0), P(0, -1)));
  EXPECT_THROW(opposite_sides(P(1, 1), P(1, 1), P(0, 1), P(0, -1)), ContractError);
}

TEST(Kernel, OppositeSidesMatchesSegmentCrossing) {
  Rng rng(3);
  for (int trial = 0; trial < 3000; ++trial) {
    const Point a = rng.point(), b = rng.point(), u = rng.point(), v = rng.point();
    if (a == b || u == v) continue;
    const LineRep g = LineRep::through(a, b);
    if (incident(u, g) || incident(v, g)) {
      EXPECT_FALSE(opposite_sides(a, b, u, v));
      continue;
    }
    const auto x = intersect(g, LineRep::through(u, v));
    const bool crosses = x && between(u, *x, v);
    EXPECT_EQ(opposite_sides(a, b, u, v), crosses);
  }
}

TEST(Kernel, SeparatesExamples) {
  EXPECT_TRUE(separates(P(0, 0), P(2, 0), P(1, 0), P(3, 0)));
  EXPECT_FALSE(separates(P(0, 0), P(3, 0), P(1, 0), P(2, 0)));
  EXPECT_FALSE(separates(P(0, 0), P(1, 0), P(2, 0), P(3, 0)));
  EXPECT_THROW(separates(P(0, 0), P(1, 0), P(2, 1), P(3, 0)), ContractError);
  EXPECT_THROW(separates(P(0, 0), P(0, 0), P(2, 0), P(3, 0)), ContractError);
}

// Separation through auxiliary lines: any h through a1 and k through a2
// (both off the carrier) decide the same way, and agree with separates().
TEST(Kernel, SeparatesMatchesLineDefinition) {
  Rng rng(4);
  int checked = 0;
  for (int trial = 0; trial < 20000 && checked < 3000; ++trial) {
    const Point base = rng.point();
    const Point dir = rng.point();
    if (dir.x == 0 && dir.y == 0) continue;
    Point q[4];
    bool distinct = true;
    for (auto& p : q) {
      const Rational t = rng.rat();
      p = Point{base.x + t * dir.x, base.y + t * dir.y};
    }
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) distinct = distinct && q[i] != q[j];
    if (!distinct) continue;
    const LineRep g = LineRep::through(q[0], q[1]);
    auto off = [&](const Point& at) {
      for (;;) {
        const Point d = rng.point();
        if (d.x == 0 && d.y == 0) continue;
        LineRep h = LineRep::from_direction(at, d);
        if (!(h == g)) return h;
      }
    };
    const LineRep h = off(q[0]);
    const LineRep k = off(q[1]);
    EXPECT_EQ(separates(q[0], q[1], q[2], q[3]), defsep(q[0], q[1], q[2], q[3], h, k));
    ++checked;
  }
  EXPECT_EQ(checked, 3000);
}

TEST(Kernel, ZFromDAgreesWithBetween) {
  Rng rng(5);
  for (int trial = 0; trial < 10000; ++trial) {
    const Point a = rng.point(), c = rng.point();
    Point b = rng.point();
    if (trial % 2 == 0 && a != c) {
      const Rational t = Rational(static_cast<long>(rng.g() % 13) - 4, 4);
      b = Point{a.x + t * (c.x - a.x), a.y + t * (c.y - a.y)};
    }
    EXPECT_EQ(z_from_D(a, b, c), between(a, b, c));
    EXPECT_EQ(defz(a, b, c), between(a, b, c));
  }
}

TEST(PointSet, Validation) {
  EXPECT_NO_THROW(PointSet({P(0, 0), P(1, 0), P(0, 1)}));
  try {
    PointSet({P(0, 0), P(1, 0), P(0, 0)});
    FAIL();
  } catch (const InvalidPointSet& e) {
    EXPECT_EQ(e.defect().kind, Defect::Kind::Duplicate);
    EXPECT_EQ(e.defect().indices, (std::vector<PointIndex>{0, 2}));
  }
  try {
    PointSet({P(0, 0), P(5, 1), P(1, 1), P(2, 2)});
    FAIL();
  } catch (const InvalidPointSet& e) {
    EXPECT_EQ(e.defect().kind, Defect::Kind::Collinear);
    EXPECT_EQ(std::string(e.what()), "collinear triple (1,3,4)");
  }
  EXPECT_THROW(PointSet({P(0, 0)}), InvalidPointSet);
}

TEST(PointSet, TableMatchesDirectOrient) {
  Rng rng(6);
  std::vector<Point> pts;
  while (pts.size() < 12) {
    pts.push_back(rng.point());
    if (pts.size() >= 2 && find_defect(pts)) pts.pop_back();
  }
  const PointSet s(pts);
  for (PointIndex i = 0; i < s.size(); ++i)
    for (PointIndex j = 0; j < s.size(); ++j)
      for (PointIndex k = 0; k < s.size(); ++k) EXPECT_EQ(s.orient(i, j, k), orient(pts[i], pts[j], pts[k]));
}

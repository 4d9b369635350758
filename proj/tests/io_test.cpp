#include <gtest/gtest.h>

#include <regex>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "support.hpp"

using namespace windmill;
using namespace testing_support;

TEST(Io, ReadPoints) {
  const auto pts = read_points("{\"x\":\"1/2\",\"y\":\"-3/1\"}\n\n{\"x\":\"0/1\",\"y\":\"4/6\"}\r\n");
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0], (Point{Rational(1, 2), Rational(-3)}));
  EXPECT_EQ(pts[1], (Point{Rational(0), Rational(2, 3)}));
}

TEST(Io, ReadErrorsNameTheLine) {
  auto message = [](const char* text) {
    try {
      read_points(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message("{\"x\":\"1/1\",\"y\":\"1/1\"}\n{oops}\n").rfind("line 2:", 0), 0u);
  EXPECT_EQ(message("{\"x\":\"1/1\"}\n").rfind("line 1:", 0), 0u);
  EXPECT_EQ(message("{\"x\":1,\"y\":\"1/1\"}\n").rfind("line 1:", 0), 0u);
  EXPECT_EQ(message("\n{\"x\":\"1/0\",\"y\":\"1/1\"}\n").rfind("line 2:", 0), 0u);
}

TEST(Io, ParsePointsValidates) {
  EXPECT_NO_THROW(parse_points("{\"x\":\"0/1\",\"y\":\"0/1\"}\n{\"x\":\"1/1\",\"y\":\"0/1\"}\n"));
  try {
    parse_points("{\"x\":\"0/1\",\"y\":\"0/1\"}\n\n{\"x\":\"1/1\",\"y\":\"0/1\"}\n{\"x\":\"2/2\",\"y\":\"0/3\"}\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(std::string(e.what()), "duplicate point on lines 3 and 4");
  }
  try {
    parse_points(
        "{\"x\":\"0/1\",\"y\":\"0/1\"}\n{\"x\":\"0/1\",\"y\":\"5/1\"}\n{\"x\":\"1/1\",\"y\":\"1/1\"}\n"
        "{\"x\":\"2/1\",\"y\":\"2/1\"}\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(std::string(e.what()), "collinear triple (1,3,4)");
  }
  EXPECT_THROW(parse_points("{\"x\":\"0/1\",\"y\":\"0/1\"}\n"), InputError);
}

TEST(Io, RoundTrip) {
  const PointSet s = corpus_set(9, 3);
  const std::string text = format_points(s);
  EXPECT_EQ(parse_points(text), s);
  EXPECT_EQ(format_points(parse_points(text)), text);
}

TEST(Io, GeneratorIsSeededAndValid) {
  EXPECT_EQ(gen_points(8, 42, 100), gen_points(8, 42, 100));
  EXPECT_NE(gen_points(8, 42, 100), gen_points(8, 43, 100));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const PointSet s = gen_points(10, seed, 50);
    EXPECT_FALSE(find_defect(s.points()));
    for (const Point& p : s.points()) {
      EXPECT_TRUE(p.x >= 0 && p.x <= 50 && p.y >= 0 && p.y <= 50);
      EXPECT_EQ(boost::multiprecision::denominator(p.x), 1);
    }
  }
  EXPECT_THROW(gen_points(1, 0, 100), ContractError);
  EXPECT_THROW(gen_points(10, 0, 5), ContractError);
}

TEST(Io, TraceJsonShape) {
  const PointSet s = corpus_set(6, 7);
  const Trace t = run(s, halving_start(s));
  const std::string text = emit_trace(t, s);
  EXPECT_EQ(text, emit_trace(t, s));
  const Json doc = Json::parse(text);
  EXPECT_EQ(doc["n"], 6);
  EXPECT_EQ(doc["stops"].size(), t.stops.size());
  EXPECT_EQ(doc["stops"][0]["pivot"], t.stops[0].pivot + 1);
  EXPECT_EQ(doc["deltas"].size(), t.deltas.size());
  EXPECT_EQ(doc["first_return"], *t.first_return);
  EXPECT_EQ(doc["pivots_seen"], Json({1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(doc["report"]["coverage"], true);
  EXPECT_TRUE(doc["report"]["violations"].empty());
  // Keys come out in insertion order, so the layout is fixed.
  EXPECT_EQ(text.rfind("{\n  \"n\": 6,\n  \"points\": [", 0), 0u);
}

TEST(Io, WitnessJsonRoundTrip) {
  const Schedule w{{1, 2, 3, 1, 2}, {1, 0, 0, 1, 1}, 5};
  EXPECT_EQ(parse_witness(witness_json(w).dump()), w);
  EXPECT_THROW(parse_witness("{\"f\":[1,2]}"), InputError);
  EXPECT_THROW(parse_witness("not json"), InputError);
}

TEST(Io, Svg) {
  const PointSet s = corpus_set(7, 2);
  const Trace t = run(s, halving_start(s));
  const std::string svg = emit_svg(t, s);
  EXPECT_EQ(svg, emit_svg(t, s));

  std::istringstream in(svg);
  boost::property_tree::ptree tree;
  ASSERT_NO_THROW(boost::property_tree::read_xml(in, tree));
  std::size_t circles = 0, stops = 0, lines = 0;
  for (const auto& [tag, node] : tree.get_child("svg")) {
    if (tag == "circle" && node.get<std::string>("<xmlattr>.class") == "point") ++circles;
    if (tag == "g" && node.get<std::string>("<xmlattr>.class") == "stop") {
      ++stops;
      lines += node.count("line");
    }
  }
  EXPECT_EQ(circles, s.size());
  EXPECT_EQ(stops, t.stops.size());
  EXPECT_EQ(lines, t.stops.size());
}

#pragma once

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "windmill/axioms.hpp"
#include "windmill/engine.hpp"
#include "windmill/formula.hpp"
#include "windmill/point_set.hpp"

namespace windmill {

using Json = nlohmann::ordered_json;

/// Malformed or invalid input text.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads points, one JSON object {"x":"p/q","y":"p/q"} per line. Blank lines
/// are skipped. Only syntax is checked; see parse_points for validation.
inline std::vector<Point> read_points(std::string_view text, std::vector<std::size_t>* line_numbers = nullptr) {
  std::vector<Point> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    const std::string where = "line " + std::to_string(line_no) + ": ";
    Json obj;
    try {
      obj = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw InputError(where + "not valid JSON");
    }
    if (!obj.is_object() || !obj.contains("x") || !obj.contains("y") || !obj["x"].is_string() ||
        !obj["y"].is_string()) {
      throw InputError(where + "expected {\"x\":\"p/q\",\"y\":\"p/q\"}");
    }
    try {
      out.push_back(Point{parse_rational(obj["x"].get<std::string>()), parse_rational(obj["y"].get<std::string>())});
    } catch (const std::invalid_argument& e) {
      throw InputError(where + e.what());
    }
    if (line_numbers) line_numbers->push_back(line_no);
    if (end == text.size()) break;
  }
  return out;
}

/// Parses and validates a points file. Duplicates are reported by line
/// number, collinear triples by one-based point index.
inline PointSet parse_points(std::string_view text) {
  std::vector<std::size_t> lines;
  std::vector<Point> pts = read_points(text, &lines);
  if (auto d = find_defect(pts)) {
    switch (d->kind) {
      case Defect::Kind::TooFew: throw InputError("need at least two points");
      case Defect::Kind::Duplicate:
        throw InputError("duplicate point on lines " + std::to_string(lines[d->indices[0]]) + " and " +
                         std::to_string(lines[d->indices[1]]));
      case Defect::Kind::Collinear:
        throw InputError("collinear triple (" + std::to_string(d->indices[0] + 1) + "," +
                         std::to_string(d->indices[1] + 1) + "," + std::to_string(d->indices[2] + 1) + ")");
    }
  }
  return PointSet(std::move(pts));
}

inline std::string format_points(std::span<const Point> pts) {
  std::string out;
  for (const Point& p : pts) {
    Json o;
    o["x"] = to_string(p.x);
    o["y"] = to_string(p.y);
    out += o.dump() + "\n";
  }
  return out;
}

inline std::string format_points(const PointSet& s) { return format_points(s.points()); }

/// n integer points in [0, bound]^2 in general position, drawn from a
/// seeded mt19937_64 with rejection of duplicates and collinear triples.
inline PointSet gen_points(std::size_t n, std::uint64_t seed, std::int64_t bound) {
  if (n < 2) throw ContractError("gen_points: n must be at least 2");
  if (bound < static_cast<std::int64_t>(n)) throw ContractError("gen_points: bound must be at least n");
  std::mt19937_64 rng(seed);
  const auto span = static_cast<std::uint64_t>(bound) + 1;
  std::vector<Point> pts;
  std::size_t budget = 1000 * n + 10000;
  while (pts.size() < n) {
    if (budget-- == 0) throw InputError("gen_points: resampling budget exhausted (bound too small)");
    const Point q{Rational(static_cast<std::int64_t>(rng() % span)), Rational(static_cast<std::int64_t>(rng() % span))};
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i) {
      if (pts[i] == q) ok = false;
      for (std::size_t j = i + 1; j < pts.size() && ok; ++j) {
        if (collinear(pts[i], pts[j], q)) ok = false;
      }
    }
    if (ok) pts.push_back(q);
  }
  return PointSet(std::move(pts));
}

inline Json points_json(const PointSet& s) {
  Json arr = Json::array();
  for (const Point& p : s.points()) arr.push_back(Json{{"x", to_string(p.x)}, {"y", to_string(p.y)}});
  return arr;
}

inline Json report_json(const Report& r) {
  Json o;
  o["halving"] = r.halving;
  o["delta_values"] = Json(std::vector<int>(r.delta_values.begin(), r.delta_values.end()));
  o["delta_class"] = r.delta_class;
  Json ew = Json::array();
  for (bool west : r.pivot_west) ew.push_back(west ? "W" : "E");
  o["pivot_side"] = ew;
  o["cycle_length"] = r.cycle_length ? Json(*r.cycle_length) : Json(nullptr);
  o["coverage"] = r.coverage;
  o["violations"] = r.violations;
  return o;
}

/// Trace document. Point labels are one-based, matching a_1..a_n. The
/// report treats the first stop as a halving start when `halving` is set.
inline Json trace_json(const Trace& t, const PointSet& s, bool halving = true) {
  Json o;
  o["n"] = s.size();
  o["points"] = points_json(s);
  o["sense"] = t.stops.empty() ? 0 : to_int(t.stops.front().sense);
  Json stops = Json::array();
  for (const Stop& st : t.stops) {
    stops.push_back(Json{{"pivot", st.pivot + 1}, {"other", st.other + 1}, {"south", to_int(st.south)}});
  }
  o["stops"] = stops;
  o["deltas"] = t.deltas;
  o["first_return"] = t.first_return ? Json(*t.first_return) : Json(nullptr);
  Json seen = Json::array();
  for (PointIndex i : t.pivots_seen) seen.push_back(i + 1);
  o["pivots_seen"] = seen;
  o["report"] = report_json(analyze(t, s.size(), halving));
  return o;
}

inline std::string emit_trace(const Trace& t, const PointSet& s, bool halving = true) {
  return trace_json(t, s, halving).dump(2) + "\n";
}

inline Json witness_json(const Schedule& w) {
  Json o;
  o["f"] = w.f;
  o["g"] = w.g;
  o["k"] = w.k;
  return o;
}

inline Schedule parse_witness(std::string_view text) {
  try {
    const Json o = Json::parse(text);
    Schedule w;
    w.f = o.at("f").get<std::vector<std::size_t>>();
    w.g = o.at("g").get<std::vector<int>>();
    w.k = o.at("k").get<std::size_t>();
    return w;
  } catch (const Json::exception& e) {
    throw InputError(std::string("witness: ") + e.what());
  }
}

inline std::string_view method_name(WmResult::Method m) {
  switch (m) {
    case WmResult::Method::Vacuous: return "vacuous";
    case WmResult::Method::Enumeration: return "enumeration";
    case WmResult::Method::Construction: return "construction";
    case WmResult::Method::Empty: return "empty";
  }
  return "empty";
}

inline Json wm_json(const WmResult& r) {
  Json o;
  o["holds"] = r.holds;
  o["method"] = method_name(r.method);
  o["collinear_triple"] = r.collinear_triple ? Json(*r.collinear_triple) : Json(nullptr);
  o["witness"] = r.witness ? witness_json(*r.witness) : Json(nullptr);
  o["reference_fallback"] = r.reference_fallback;
  return o;
}

inline Json violations_json(std::span<const Violation> vs) {
  Json arr = Json::array();
  for (const Violation& v : vs) arr.push_back(Json{{"axiom", v.axiom}, {"trial", v.trial}, {"detail", v.detail}});
  return arr;
}

inline Json point_json(const Point& p) { return Json{{"x", to_string(p.x)}, {"y", to_string(p.y)}}; }

inline Json certificate_json(const DyadicCertificate& c) {
  Json o;
  o["a"] = point_json(c.a);
  o["b"] = point_json(c.b);
  o["line"] = Json::array({point_json(c.anchor_p), point_json(c.anchor_q)});
  o["side_a"] = to_string(c.side_a);
  o["side_b"] = to_string(c.side_b);
  o["intersection"] = point_json(c.intersection);
  o["points_dyadic"] = c.points_dyadic;
  o["separated"] = c.separated;
  o["intersection_between"] = c.intersection_between;
  o["intersection_dyadic"] = c.intersection_dyadic;
  o["verified"] = verify_certificate(c);
  return o;
}

namespace detail {

inline std::string num(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << v;
  return os.str();
}

// Convex hull indices, counterclockwise (monotone chain on exact points).
inline std::vector<PointIndex> hull(const PointSet& s) {
  std::vector<PointIndex> idx(s.size());
  for (PointIndex i = 0; i < s.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](PointIndex a, PointIndex b) { return lex_less(s[a], s[b]); });
  std::vector<PointIndex> h;
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t floor = h.size();
    for (PointIndex i : idx) {
      while (h.size() >= floor + 2 && s.orient(h[h.size() - 2], h.back(), i) != Sign::Positive) h.pop_back();
      h.push_back(i);
    }
    h.pop_back();
    std::reverse(idx.begin(), idx.end());
  }
  return h;
}

}  // namespace detail

/// Static figure: points, hull outline and one labeled segment per stop.
/// Coordinates become decimals here and nowhere else.
inline std::string emit_svg(const Trace& t, const PointSet& s) {
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (PointIndex i = 0; i < s.size(); ++i) {
    const double x = to_double(s[i].x), y = to_double(s[i].y);
    if (i == 0 || x < min_x) min_x = x;
    if (i == 0 || x > max_x) max_x = x;
    if (i == 0 || y < min_y) min_y = y;
    if (i == 0 || y > max_y) max_y = y;
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1.0});
  const double margin = 0.1 * span;
  const double size = 600.0;
  const double scale = size / (span + 2 * margin);
  auto sx = [&](const Rational& x) { return (to_double(x) - min_x + margin) * scale; };
  auto sy = [&](const Rational& y) { return size - (to_double(y) - min_y + margin) * scale; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
     << size << " " << size << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "  <polygon class=\"hull\" fill=\"none\" stroke=\"#bbbbbb\" points=\"";
  bool first = true;
  for (PointIndex i : detail::hull(s)) {
    os << (first ? "" : " ") << detail::num(sx(s[i].x)) << "," << detail::num(sy(s[i].y));
    first = false;
  }
  os << "\"/>\n";
  for (std::size_t k = 0; k < t.stops.size(); ++k) {
    const Point& a = s[t.stops[k].pivot];
    const Point& b = s[t.stops[k].other];
    const double x1 = sx(a.x), y1 = sy(a.y), x2 = sx(b.x), y2 = sy(b.y);
    os << "  <g class=\"stop\"><line x1=\"" << detail::num(x1) << "\" y1=\"" << detail::num(y1) << "\" x2=\""
       << detail::num(x2) << "\" y2=\"" << detail::num(y2) << "\" stroke=\"#3366cc\" stroke-opacity=\"0.5\"/>"
       << "<text x=\"" << detail::num((x1 + x2) / 2) << "\" y=\"" << detail::num((y1 + y2) / 2)
       << "\" font-size=\"10\" fill=\"#3366cc\">" << k << "</text></g>\n";
  }
  for (PointIndex i = 0; i < s.size(); ++i) {
    os << "  <circle class=\"point\" cx=\"" << detail::num(sx(s[i].x)) << "\" cy=\"" << detail::num(sy(s[i].y))
       << "\" r=\"4\" fill=\"black\"/>";
    os << "<text x=\"" << detail::num(sx(s[i].x) + 6) << "\" y=\"" << detail::num(sy(s[i].y) - 6)
       << "\" font-size=\"12\">a" << (i + 1) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace windmill

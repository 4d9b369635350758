#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "windmill/kernel.hpp"

namespace windmill {

/// Zero-based position of a point in a PointSet. Schedules and serialized
/// documents use the one-based labels a_1..a_n instead.
using PointIndex = std::size_t;

/// Why a list of points is not in general position.
struct Defect {
  enum class Kind { TooFew, Duplicate, Collinear };
  Kind kind;
  std::vector<PointIndex> indices;  // zero-based, ascending

  std::string describe() const {
    std::string out;
    switch (kind) {
      case Kind::TooFew: return "a point set needs at least two points";
      case Kind::Duplicate: out = "duplicate points"; break;
      case Kind::Collinear: out = "collinear triple"; break;
    }
    out += " (";
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(indices[i] + 1);
    }
    return out + ")";
  }
};

/// First defect found scanning pairs, then triples, in index order.
inline std::optional<Defect> find_defect(std::span<const Point> pts) {
  const std::size_t n = pts.size();
  if (n < 2) return Defect{Defect::Kind::TooFew, {}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (pts[i] == pts[j]) return Defect{Defect::Kind::Duplicate, {i, j}};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (collinear(pts[i], pts[j], pts[k])) return Defect{Defect::Kind::Collinear, {i, j, k}};
      }
    }
  }
  return std::nullopt;
}

class InvalidPointSet : public std::invalid_argument {
 public:
  explicit InvalidPointSet(Defect d)
      : std::invalid_argument(d.describe()), defect_(std::move(d)) {}
  const Defect& defect() const noexcept { return defect_; }

 private:
  Defect defect_;
};

/// Finite planar point set in general position: n >= 2, pairwise distinct,
/// no three collinear. Orientation signs of index triples are tabulated on
/// construction for small sets.
class PointSet {
 public:
  static constexpr std::size_t kTableLimit = 128;

  explicit PointSet(std::vector<Point> pts) : points_(std::move(pts)) {
    if (auto d = find_defect(points_)) throw InvalidPointSet(*d);
    const std::size_t n = points_.size();
    if (n <= kTableLimit) {
      table_.assign(n * n * n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            if (i < j && j < k) {
              const int s = to_int(windmill::orient(points_[i], points_[j], points_[k]));
              // Even permutations keep the sign, odd ones flip it.
              set(i, j, k, s);
              set(j, k, i, s);
              set(k, i, j, s);
              set(j, i, k, -s);
              set(i, k, j, -s);
              set(k, j, i, -s);
            }
          }
        }
      }
    }
  }

  std::size_t size() const noexcept { return points_.size(); }
  const Point& operator[](PointIndex i) const { return points_.at(i); }
  const std::vector<Point>& points() const noexcept { return points_; }

  Sign orient(PointIndex a, PointIndex b, PointIndex c) const {
    if (!table_.empty()) {
      const std::size_t n = points_.size();
      return static_cast<Sign>(table_.at((a * n + b) * n + c));
    }
    return windmill::orient(points_.at(a), points_.at(b), points_.at(c));
  }

  /// δ(abuv) on indices.
  bool opposite_sides(PointIndex a, PointIndex b, PointIndex u, PointIndex v) const {
    if (a == b) throw ContractError("opposite_sides: line points coincide");
    const Sign su = orient(a, b, u);
    const Sign sv = orient(a, b, v);
    return su != Sign::Zero && sv != Sign::Zero && su != sv;
  }

  friend bool operator==(const PointSet& l, const PointSet& r) { return l.points_ == r.points_; }

 private:
  void set(std::size_t i, std::size_t j, std::size_t k, int s) {
    const std::size_t n = points_.size();
    table_[(i * n + j) * n + k] = static_cast<std::int8_t>(s);
  }

  std::vector<Point> points_;
  std::vector<std::int8_t> table_;
};

}  // namespace windmill

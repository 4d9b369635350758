#pragma once

#include <cstddef>

#include "windmill/kernel.hpp"

namespace windmill {

/// α(n) = n(n-1) + 1, the length bound of a witness schedule.
constexpr std::size_t alpha(std::size_t n) {
  if (n < 2) throw ContractError("alpha: n must be at least 2");
  return n * (n - 1) + 1;
}

/// Upper bound on the steps a halving-start run needs to close.
constexpr std::size_t closure_bound(std::size_t n) { return n * (n - 1); }

/// The one-based orientation reference f(0) for a schedule starting with
/// f(1), f(2).
struct ReferenceIndex {
  std::size_t value;
  /// True when r_{n+1}(f1 + f2) was 0 or collided with f1/f2 and the smallest
  /// free index was used instead.
  bool fallback;
};

/// f(0) = (f1 + f2) mod (n + 1) when that names a third point, otherwise the
/// smallest index different from f1 and f2.
constexpr ReferenceIndex reference_index(std::size_t f1, std::size_t f2, std::size_t n) {
  if (n < 3) throw ContractError("reference_index: needs at least three points");
  if (f1 == f2 || f1 < 1 || f2 < 1 || f1 > n || f2 > n) {
    throw ContractError("reference_index: f1, f2 must be distinct indices in 1..n");
  }
  const std::size_t r = (f1 + f2) % (n + 1);
  if (r >= 1 && r <= n && r != f1 && r != f2) return {r, false};
  std::size_t v = 1;
  while (v == f1 || v == f2) ++v;
  return {v, true};
}

}  // namespace windmill

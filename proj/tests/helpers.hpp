#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "quiver_cones/quiver.hpp"

namespace qcones::test {

inline DimVector dim(std::initializer_list<std::int64_t> v) { return DimVector(std::vector<std::int64_t>(v)); }
inline Weight weight(std::initializer_list<std::int64_t> v) { return Weight(std::vector<std::int64_t>(v)); }

inline DimVector random_dim(std::mt19937_64& rng, std::size_t n, std::int64_t max) {
  std::uniform_int_distribution<std::int64_t> d(0, max);
  std::vector<std::int64_t> e(n);
  for (auto& x : e) x = d(rng);
  return DimVector(std::move(e));
}

/// Uniform on the box 0 <= b <= bound.
inline DimVector random_below(std::mt19937_64& rng, const DimVector& bound) {
  std::vector<std::int64_t> e(bound.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::uniform_int_distribution<std::int64_t>(0, bound[i])(rng);
  return DimVector(std::move(e));
}

inline Weight random_weight(std::mt19937_64& rng, std::size_t n, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  std::vector<std::int64_t> e(n);
  for (auto& x : e) x = d(rng);
  return Weight(std::move(e));
}

inline std::vector<std::int64_t> random_coords(std::mt19937_64& rng, std::size_t n, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  std::vector<std::int64_t> e(n);
  for (auto& x : e) x = d(rng);
  return e;
}

/// Entry bound for random dimension vectors; keeps the subdimension boxes small.
inline std::int64_t sample_bound(std::size_t vertices) { return vertices <= 6 ? 3 : 2; }

inline QuiverDesc a2_desc() { return {"A2", {"x", "y"}, {{"a", "x", "y"}}}; }

}  // namespace qcones::test

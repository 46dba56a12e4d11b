#include <climits>

#include "quiver_cones/kernels.hpp"

namespace qcones::simd::kernel {

std::int32_t max_dot_i32_scalar(const std::int32_t* const* cols, std::size_t dim, std::size_t rows,
                                const std::int32_t* w) {
  std::int32_t best = INT32_MIN;
  for (std::size_t r = 0; r < rows; ++r) {
    std::int32_t acc = 0;
    for (std::size_t x = 0; x < dim; ++x) acc += w[x] * cols[x][r];
    if (acc > best) best = acc;
  }
  return best;
}

}  // namespace qcones::simd::kernel

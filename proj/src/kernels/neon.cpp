#include <arm_neon.h>

#include <climits>

#include "quiver_cones/kernels.hpp"

namespace qcones::simd::kernel {

std::int32_t max_dot_i32_neon(const std::int32_t* const* cols, std::size_t dim, std::size_t rows,
                              const std::int32_t* w) {
  int32x4_t best = vdupq_n_s32(INT32_MIN);
  std::size_t r = 0;
  for (; r + 4 <= rows; r += 4) {
    int32x4_t acc = vdupq_n_s32(0);
    for (std::size_t x = 0; x < dim; ++x) acc = vmlaq_n_s32(acc, vld1q_s32(cols[x] + r), w[x]);
    best = vmaxq_s32(best, acc);
  }
  std::int32_t out = vmaxvq_s32(best);
  for (; r < rows; ++r) {
    std::int32_t acc = 0;
    for (std::size_t x = 0; x < dim; ++x) acc += w[x] * cols[x][r];
    if (acc > out) out = acc;
  }
  return out;
}

}  // namespace qcones::simd::kernel

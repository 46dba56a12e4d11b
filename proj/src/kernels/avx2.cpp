// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <climits>

#include "quiver_cones/kernels.hpp"

namespace qcones::simd::kernel {

std::int32_t max_dot_i32_avx2(const std::int32_t* const* cols, std::size_t dim, std::size_t rows,
                              const std::int32_t* w) {
  __m256i best = _mm256_set1_epi32(INT32_MIN);
  std::size_t r = 0;
  for (; r + 16 <= rows; r += 16) {
    __m256i acc0 = _mm256_setzero_si256();
    __m256i acc1 = _mm256_setzero_si256();
    for (std::size_t x = 0; x < dim; ++x) {
      const __m256i wx = _mm256_set1_epi32(w[x]);
      const auto* c = reinterpret_cast<const __m256i*>(cols[x] + r);
      acc0 = _mm256_add_epi32(acc0, _mm256_mullo_epi32(wx, _mm256_loadu_si256(c)));
      acc1 = _mm256_add_epi32(acc1, _mm256_mullo_epi32(wx, _mm256_loadu_si256(c + 1)));
    }
    best = _mm256_max_epi32(best, _mm256_max_epi32(acc0, acc1));
  }
  for (; r + 8 <= rows; r += 8) {
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t x = 0; x < dim; ++x) {
      const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cols[x] + r));
      acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(_mm256_set1_epi32(w[x]), v));
    }
    best = _mm256_max_epi32(best, acc);
  }
  __m128i m = _mm_max_epi32(_mm256_castsi256_si128(best), _mm256_extracti128_si256(best, 1));
  m = _mm_max_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(1, 0, 3, 2)));
  m = _mm_max_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(2, 3, 0, 1)));
  std::int32_t out = _mm_cvtsi128_si32(m);

  for (; r < rows; ++r) {
    std::int32_t acc = 0;
    for (std::size_t x = 0; x < dim; ++x) acc += w[x] * cols[x][r];
    if (acc > out) out = acc;
  }
  return out;
}

}  // namespace qcones::simd::kernel

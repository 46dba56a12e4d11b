#pragma once

// Row-set kernels. Every cone query in this library reduces to
//
//     max over rows r of  sum_x w[x] * block[r][x]
//
// over a block of nonnegative integer vectors (generic subdimensions, or the
// normals of an inequality system). Blocks are stored column-major in int32 so
// the reduction vectorizes across rows.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "quiver_cones/quiver.hpp"

namespace qcones::simd {

enum class Isa { Scalar, Avx2, Neon };

const char* to_string(Isa isa);

/// True if this binary carries a kernel for `isa` and the CPU can run it.
bool isa_available(Isa isa);

/// Best available ISA, unless QUIVER_CONES_ISA (scalar|avx2|neon) selects another
/// available one.
Isa detect_isa();

/// The ISA used by max_dot. Initialized from detect_isa().
Isa active_isa();
/// Throws BadParameter if `isa` is not available.
void set_active_isa(Isa isa);

/// Column-major block of nonnegative vectors of fixed dimension.
class VectorBlock {
 public:
  explicit VectorBlock(std::size_t dim);

  /// Entries must lie in [0, INT32_MAX].
  void push_back(std::span<const std::int64_t> row);
  void push_back(const DimVector& row) { push_back(row.entries()); }

  std::size_t dim() const noexcept { return cols_.size(); }
  std::size_t rows() const noexcept { return rows_; }
  bool empty() const noexcept { return rows_ == 0; }

  std::int32_t at(std::size_t row, std::size_t col) const { return cols_[col][row]; }
  const std::int32_t* column(std::size_t col) const noexcept { return cols_[col].data(); }
  std::int32_t column_max(std::size_t col) const noexcept { return col_max_[col]; }

  DimVector row(std::size_t r) const;
  std::vector<DimVector> to_vectors() const;

 private:
  std::vector<std::vector<std::int32_t>> cols_;
  std::vector<std::int32_t> col_max_;
  std::size_t rows_ = 0;
};

/// max_r <w, block[r]>. Runs the int32 kernel of `isa` when the magnitude bound
/// sum_x |w[x]| * column_max(x) fits in int32, otherwise checked int64 scalar
/// arithmetic (Overflow on a genuine overflow). Throws BadParameter on an empty
/// block.
std::int64_t max_dot(const VectorBlock& block, std::span<const std::int64_t> w, Isa isa);
inline std::int64_t max_dot(const VectorBlock& block, std::span<const std::int64_t> w) {
  return max_dot(block, w, active_isa());
}

/// First row whose dot product with w exceeds `threshold` (checked scalar).
std::optional<std::size_t> first_row_above(const VectorBlock& block, std::span<const std::int64_t> w,
                                           std::int64_t threshold);

namespace kernel {

// Raw int32 kernels. The caller guarantees no partial sum leaves int32 range
// and rows > 0. Kept free of library types so the ISA-specific translation
// units instantiate nothing shared.
std::int32_t max_dot_i32_scalar(const std::int32_t* const* cols, std::size_t dim, std::size_t rows,
                                const std::int32_t* w);
std::int32_t max_dot_i32_avx2(const std::int32_t* const* cols, std::size_t dim, std::size_t rows,
                              const std::int32_t* w);
std::int32_t max_dot_i32_neon(const std::int32_t* const* cols, std::size_t dim, std::size_t rows,
                              const std::int32_t* w);

}  // namespace kernel

}  // namespace qcones::simd

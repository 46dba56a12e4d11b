#include <atomic>
#include <climits>
#include <cstdlib>
#include <string>

#include "quiver_cones/checked.hpp"
#include "quiver_cones/kernels.hpp"

namespace qcones::simd {

const char* to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(QCONES_HAVE_AVX2_KERNEL)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(QCONES_HAVE_NEON_KERNEL)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detect_isa() {
  if (const char* env = std::getenv("QUIVER_CONES_ISA")) {
    std::string s(env);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon})
      if (s == to_string(isa) && isa_available(isa)) return isa;
  }
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

namespace {

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detect_isa()};
  return isa;
}

}  // namespace

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_available(isa))
    throw QuiverError(ErrorKind::BadParameter, std::string("kernel ISA not available: ") + to_string(isa));
  active().store(isa, std::memory_order_relaxed);
}

// ---------------------------------------------------------------------------

VectorBlock::VectorBlock(std::size_t dim) : cols_(dim), col_max_(dim, 0) {}

void VectorBlock::push_back(std::span<const std::int64_t> row) {
  if (row.size() != cols_.size()) throw QuiverError(ErrorKind::DimensionMismatch, "row has wrong dimension");
  for (auto v : row)
    if (v < 0 || v > INT32_MAX) throw QuiverError(ErrorKind::Overflow, "block entry outside [0, INT32_MAX]");
  for (std::size_t x = 0; x < row.size(); ++x) {
    auto v = static_cast<std::int32_t>(row[x]);
    cols_[x].push_back(v);
    if (v > col_max_[x]) col_max_[x] = v;
  }
  ++rows_;
}

DimVector VectorBlock::row(std::size_t r) const {
  std::vector<std::int64_t> e(cols_.size());
  for (std::size_t x = 0; x < e.size(); ++x) e[x] = cols_[x].at(r);
  return DimVector(std::move(e));
}

std::vector<DimVector> VectorBlock::to_vectors() const {
  std::vector<DimVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

namespace {

std::int64_t max_dot_checked(const VectorBlock& block, std::span<const std::int64_t> w) {
  std::int64_t best = INT64_MIN;
  for (std::size_t r = 0; r < block.rows(); ++r) {
    std::int64_t acc = 0;
    for (std::size_t x = 0; x < block.dim(); ++x) acc = checked::add(acc, checked::mul(w[x], block.at(r, x)));
    if (acc > best) best = acc;
  }
  return best;
}

// True when sum_x |w[x]| * colmax[x] fits in int32, which bounds every partial sum.
bool fits_int32(const VectorBlock& block, std::span<const std::int64_t> w) {
  std::int64_t bound = 0;
  for (std::size_t x = 0; x < block.dim(); ++x) {
    if (w[x] > INT32_MAX || w[x] < -INT32_MAX) return false;
    std::int64_t term = (w[x] < 0 ? -w[x] : w[x]) * static_cast<std::int64_t>(block.column_max(x));
    bound += term;
    if (bound > INT32_MAX) return false;
  }
  return true;
}

}  // namespace

std::int64_t max_dot(const VectorBlock& block, std::span<const std::int64_t> w, Isa isa) {
  if (block.empty()) throw QuiverError(ErrorKind::BadParameter, "max_dot over an empty block");
  if (w.size() != block.dim()) throw QuiverError(ErrorKind::DimensionMismatch, "weight has wrong dimension");
  if (!fits_int32(block, w)) return max_dot_checked(block, w);

  constexpr std::size_t kInline = 32;
  std::int32_t w_inline[kInline];
  const std::int32_t* c_inline[kInline];
  std::vector<std::int32_t> w_heap;
  std::vector<const std::int32_t*> c_heap;
  std::int32_t* w32 = w_inline;
  const std::int32_t** cols = c_inline;
  if (w.size() > kInline) {
    w_heap.resize(w.size());
    c_heap.resize(w.size());
    w32 = w_heap.data();
    cols = c_heap.data();
  }
  for (std::size_t x = 0; x < w.size(); ++x) {
    w32[x] = static_cast<std::int32_t>(w[x]);
    cols[x] = block.column(x);
  }
  switch (isa) {
#if defined(QCONES_HAVE_AVX2_KERNEL)
    case Isa::Avx2: return kernel::max_dot_i32_avx2(cols, block.dim(), block.rows(), w32);
#endif
#if defined(QCONES_HAVE_NEON_KERNEL)
    case Isa::Neon: return kernel::max_dot_i32_neon(cols, block.dim(), block.rows(), w32);
#endif
    default: return kernel::max_dot_i32_scalar(cols, block.dim(), block.rows(), w32);
  }
}

std::optional<std::size_t> first_row_above(const VectorBlock& block, std::span<const std::int64_t> w,
                                           std::int64_t threshold) {
  if (w.size() != block.dim()) throw QuiverError(ErrorKind::DimensionMismatch, "weight has wrong dimension");
  for (std::size_t r = 0; r < block.rows(); ++r) {
    std::int64_t acc = 0;
    for (std::size_t x = 0; x < block.dim(); ++x) acc = checked::add(acc, checked::mul(w[x], block.at(r, x)));
    if (acc > threshold) return r;
  }
  return std::nullopt;
}

}  // namespace qcones::simd

#include "quiver_cones/schofield.hpp"

#include <mutex>

#include "quiver_cones/checked.hpp"

namespace qcones {

BoxEnumerator::BoxEnumerator(const DimVector& bound) : bound_(bound), size_(1) {
  for (auto x : bound.entries()) {
    std::size_t next;
    if (__builtin_mul_overflow(size_, static_cast<std::size_t>(x) + 1, &next))
      throw QuiverError(ErrorKind::Overflow, "enumeration box too large");
    size_ = next;
  }
}

DimVector BoxEnumerator::at(std::size_t i) const {
  std::vector<std::int64_t> e(bound_.size(), 0);
  for (std::size_t x = bound_.size(); x-- > 0;) {
    auto radix = static_cast<std::size_t>(bound_[x]) + 1;
    e[x] = static_cast<std::int64_t>(i % radix);
    i /= radix;
  }
  return DimVector(std::move(e));
}

// ---------------------------------------------------------------------------

ExtTable::ExtTable(Quiver q) : quiver_(std::move(q)) {}

void ExtTable::check_bound(const DimVector& v) const {
  if (v.size() != quiver_.vertex_count())
    throw QuiverError(ErrorKind::DimensionMismatch, "dimension vector not bound to quiver '" + quiver_.name() + "'");
}

std::shared_ptr<const simd::VectorBlock> ExtTable::subdims_of(const DimVector& a) const {
  {
    std::shared_lock lock(mutex_);
    auto it = subdim_cache_.find(a);
    if (it != subdim_cache_.end()) return it->second;
  }
  auto built = build_subdims(a);
  std::unique_lock lock(mutex_);
  return subdim_cache_.try_emplace(a, std::move(built)).first->second;
}

std::shared_ptr<const simd::VectorBlock> ExtTable::build_subdims(const DimVector& a) const {
  const std::size_t n = quiver_.vertex_count();
  auto block = std::make_shared<simd::VectorBlock>(n);
  std::vector<std::int64_t> rest(n);
  std::vector<std::int64_t> w(n);

  BoxEnumerator(a).for_each([&](std::span<const std::int64_t> sub) {
    bool zero = true;
    bool full = true;
    for (std::size_t x = 0; x < n; ++x) {
      rest[x] = a[x] - sub[x];
      zero = zero && sub[x] == 0;
      full = full && rest[x] == 0;
    }
    if (zero || full) {
      block->push_back(sub);
      return;
    }
    // ext(sub, rest) = max over s -> sub of -<s, rest>; s = 0 contributes 0.
    // -<s, rest> = s . w with w(x) = -rest(x) + sum_{ta = x} rest(ha).
    for (std::size_t x = 0; x < n; ++x) w[x] = -rest[x];
    for (const auto& arr : quiver_.arrows()) w[arr.tail] = checked::add(w[arr.tail], rest[arr.head]);
    auto inner = subdims_of(DimVector(std::vector<std::int64_t>(sub.begin(), sub.end())));
    if (simd::max_dot(*inner, w) <= 0) block->push_back(sub);
  });
  return block;
}

std::int64_t ExtTable::ext_uncached(const DimVector& a, const DimVector& b) const {
  auto w = -right_euler_weight(quiver_, b);
  std::int64_t m = simd::max_dot(*subdims_of(a), w.entries());
  return m < 0 ? 0 : m;
}

std::int64_t ExtTable::ext(const DimVector& a, const DimVector& b) const {
  check_bound(a);
  check_bound(b);
  if (a.is_zero() || b.is_zero()) return 0;
  auto key = std::make_pair(a, b);
  {
    std::shared_lock lock(mutex_);
    auto it = ext_cache_.find(key);
    if (it != ext_cache_.end()) return it->second;
  }
  std::int64_t v = ext_uncached(a, b);
  std::unique_lock lock(mutex_);
  return ext_cache_.try_emplace(std::move(key), v).first->second;
}

std::int64_t ExtTable::hom(const DimVector& a, const DimVector& b) const {
  return checked::add(euler_form(quiver_, a, b), ext(a, b));
}

bool ExtTable::is_generic_subdim(const DimVector& b, const DimVector& a) const {
  check_bound(a);
  check_bound(b);
  if (!leq(b, a)) return false;
  return ext(b, a - b) == 0;
}

std::vector<DimVector> ExtTable::generic_subdims(const DimVector& a) const {
  check_bound(a);
  return subdims_of(a)->to_vectors();
}

std::shared_ptr<const simd::VectorBlock> ExtTable::generic_subdim_block(const DimVector& a) const {
  check_bound(a);
  return subdims_of(a);
}

std::int64_t ExtTable::disc(const DimVector& a, const Weight& s) const {
  check_bound(a);
  if (s.size() != a.size()) throw QuiverError(ErrorKind::DimensionMismatch, "weight not bound to this quiver");
  return simd::max_dot(*subdims_of(a), s.entries());
}

std::pair<std::int64_t, DimVector> ExtTable::disc_witness(const DimVector& a, const Weight& s) const {
  std::int64_t d = disc(a, s);
  auto block = subdims_of(a);
  auto row = simd::first_row_above(*block, s.entries(), d - 1);
  return {d, block->row(*row)};
}

bool ExtTable::circ_nonzero(const DimVector& a, const DimVector& b) const {
  return euler_form(quiver_, a, b) == 0 && ext(a, b) == 0;
}

bool ExtTable::filtration_necessary(std::span<const DimVector> parts) const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) sum = checked::add(sum, euler_form(quiver_, parts[i], parts[j]));
  return sum >= 0;
}

std::size_t ExtTable::cached_ext_pairs() const {
  std::shared_lock lock(mutex_);
  return ext_cache_.size();
}

std::size_t ExtTable::cached_subdim_lists() const {
  std::shared_lock lock(mutex_);
  return subdim_cache_.size();
}

}  // namespace qcones

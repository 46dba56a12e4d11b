#pragma once

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quiver_cones/kernels.hpp"
#include "quiver_cones/quiver.hpp"

namespace qcones {

/// Generic hom/ext for one quiver, computed by Schofield's recursion
///
///     ext(a, b) = max over a' -> a of  -<a', b>
///
/// where a' -> a (a' is a generic subdimension of a) means ext(a', a - a') = 0.
/// The recursion only ever descends in the first argument, so the table keeps
/// the ordered list of generic subdimensions of every first argument it has
/// seen; ext(a, .) is then a single max-dot-product over that list.
///
/// Lookups and insertions are thread-safe. Two threads computing the same key
/// produce the same value; the first insertion wins.
class ExtTable {
 public:
  explicit ExtTable(Quiver q);

  ExtTable(const ExtTable&) = delete;
  ExtTable& operator=(const ExtTable&) = delete;

  const Quiver& quiver() const noexcept { return quiver_; }

  /// Generic dim Ext(V, W) for V, W of dimensions a, b.
  std::int64_t ext(const DimVector& a, const DimVector& b) const;
  /// Generic dim Hom(V, W) = <a, b> + ext(a, b).
  std::int64_t hom(const DimVector& a, const DimVector& b) const;

  /// b -> a: b <= a and ext(b, a - b) = 0.
  bool is_generic_subdim(const DimVector& b, const DimVector& a) const;

  /// All generic subdimensions of a, mixed-radix lexicographic in canonical
  /// vertex order (first vertex most significant). Always starts with 0 and
  /// ends with a.
  std::vector<DimVector> generic_subdims(const DimVector& a) const;
  /// Same set as a column-major block, shared with the cache.
  std::shared_ptr<const simd::VectorBlock> generic_subdim_block(const DimVector& a) const;

  /// disc(a, s) = max over b -> a of s(b); always >= 0.
  std::int64_t disc(const DimVector& a, const Weight& s) const;
  /// disc together with the first subdimension (in enumeration order) attaining it.
  std::pair<std::int64_t, DimVector> disc_witness(const DimVector& a, const Weight& s) const;

  /// a o b != 0, tested as <a, b> = 0 and ext(a, b) = 0.
  bool circ_nonzero(const DimVector& a, const DimVector& b) const;

  /// Necessary condition for (parts) to be a generic filtration dimension:
  /// sum_{i<j} <parts_i, parts_j> >= 0.
  bool filtration_necessary(std::span<const DimVector> parts) const;

  std::size_t cached_ext_pairs() const;
  std::size_t cached_subdim_lists() const;

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<DimVector, DimVector>& p) const noexcept {
      DimVectorHash h;
      return h(p.first) * 31u ^ h(p.second);
    }
  };

  void check_bound(const DimVector& v) const;
  std::int64_t ext_uncached(const DimVector& a, const DimVector& b) const;
  std::shared_ptr<const simd::VectorBlock> subdims_of(const DimVector& a) const;
  std::shared_ptr<const simd::VectorBlock> build_subdims(const DimVector& a) const;

  Quiver quiver_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::pair<DimVector, DimVector>, std::int64_t, PairHash> ext_cache_;
  mutable std::unordered_map<DimVector, std::shared_ptr<const simd::VectorBlock>, DimVectorHash> subdim_cache_;
};

/// Iterates every b with 0 <= b <= bound in mixed-radix lexicographic order.
class BoxEnumerator {
 public:
  explicit BoxEnumerator(const DimVector& bound);

  /// Number of vectors in the box, checked.
  std::size_t size() const noexcept { return size_; }
  /// The i-th vector in enumeration order.
  DimVector at(std::size_t i) const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    std::vector<std::int64_t> cur(bound_.size(), 0);
    for (std::size_t i = 0; i < size_; ++i) {
      fn(std::span<const std::int64_t>(cur));
      for (std::size_t x = cur.size(); x-- > 0;) {
        if (cur[x] < bound_[x]) {
          ++cur[x];
          break;
        }
        cur[x] = 0;
      }
    }
  }

 private:
  DimVector bound_;
  std::size_t size_;
};

}  // namespace qcones

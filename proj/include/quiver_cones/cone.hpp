#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "quiver_cones/kernels.hpp"
#include "quiver_cones/quiver.hpp"
#include "quiver_cones/schofield.hpp"

namespace qcones {

/// Which characterization of Sigma(Q, alpha) to use.
///  - Dw:        s(b) <= 0 for every generic subdimension b -> alpha.
///  - Inductive: s(b) <= 0 for every b with b o (alpha - b) != 0.
///  - AntiInv:   s(b) <= 0 for every (b, g) in II0 (anti-symmetric s only).
enum class Method { Dw, Inductive, AntiInv };

const char* to_string(Method m);
/// "dw", "inductive", "antiinv"; throws BadParameter otherwise.
Method parse_method(const std::string& s);

struct MembershipResult {
  bool member = false;
  /// A normal b with s(b) > 0, when rejection came from an inequality.
  std::optional<DimVector> witness;
  /// s(alpha) when rejection came from the equality s(alpha) = 0.
  std::optional<std::int64_t> weight_on_alpha;

  explicit operator bool() const noexcept { return member; }
};

/// (beta, gamma) with alpha = beta + gamma + tau beta.
struct IsoPair {
  DimVector beta;
  DimVector gamma;
  friend bool operator==(const IsoPair&, const IsoPair&) = default;
};

struct InequalitySystem {
  DimVector alpha;
  /// Each normal b encodes s(b) <= 0; 0 <= b <= alpha.
  std::vector<DimVector> normals;
  /// Set when the system is restricted to anti-symmetric weights.
  std::optional<OrbitBasis> coordinate_space;
  /// Parallel to `normals` when coordinate_space is set.
  std::vector<std::vector<std::int64_t>> restricted;

  /// Coefficient rows: restricted vectors if present, otherwise the normals.
  std::vector<std::vector<std::int64_t>> rows() const;
  /// Copy keeping the rows at `indices`, in that order.
  InequalitySystem subset(const std::vector<std::size_t>& indices) const;
};

struct InequalityOptions {
  /// AntiInv only: normalize restricted rows to primitive vectors and drop repeats.
  bool dedup = false;
  /// Drop normals whose row is zero.
  bool drop_zero = false;
  /// Orbit representatives overriding the default choice.
  std::vector<std::string> representatives;
};

struct Counts {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::optional<std::size_t> n3;
};

/// The semi-invariant cone Sigma(Q, alpha) for one alpha. Caches the normal
/// set of each method so repeated membership queries are one kernel call each.
/// Thread-safe.
class SemiInvariantCone {
 public:
  SemiInvariantCone(const ExtTable& table, DimVector alpha);

  const DimVector& alpha() const noexcept { return alpha_; }
  const ExtTable& table() const noexcept { return table_; }

  /// Normals for `m` in enumeration order. AntiInv requires `inv` with
  /// alpha = tau alpha (NotSymmetricDimension otherwise).
  std::shared_ptr<const simd::VectorBlock> normals(Method m, const Involution* inv = nullptr) const;

  /// The II0 pairs, ordered lexicographically in beta; contains (0, alpha).
  std::vector<IsoPair> iso_pairs(const Involution& inv) const;

  /// AntiInv additionally requires s = -tau s (NotAntiSymmetric otherwise).
  MembershipResult member(Method m, const Weight& s, const Involution* inv = nullptr) const;

 private:
  std::shared_ptr<const simd::VectorBlock> inductive_normals() const;
  std::shared_ptr<const std::vector<IsoPair>> iso_pairs_cached(const Involution& inv) const;

  const ExtTable& table_;
  DimVector alpha_;
  mutable std::mutex mutex_;
  mutable std::shared_ptr<const simd::VectorBlock> inductive_;
  mutable std::map<std::vector<std::size_t>, std::shared_ptr<const std::vector<IsoPair>>> pairs_;
  mutable std::map<std::vector<std::size_t>, std::shared_ptr<const simd::VectorBlock>> antiinv_;
};

MembershipResult member_dw(const ExtTable& t, const Weight& s, const DimVector& a);
MembershipResult member_inductive(const ExtTable& t, const Weight& s, const DimVector& a);
MembershipResult member_antiinv(const ExtTable& t, const Weight& s, const DimVector& a, const Involution& inv);

std::vector<IsoPair> enumerate_I0(const ExtTable& t, const DimVector& a, const Involution& inv);

/// The inequality system of `method`. AntiInv requires `inv` and populates the
/// coordinate space and restricted rows.
InequalitySystem inequalities(const ExtTable& t, const DimVector& a, Method method, const Involution* inv = nullptr,
                              const InequalityOptions& options = {});

/// n1 = #{b -> a}, n2 = #{b <= a : b o (a - b) != 0}, n3 = #II0(a, tau) when
/// `inv` is given. Trivial members are counted.
Counts counts(const ExtTable& t, const DimVector& a, const Involution* inv = nullptr);

/// Worker count for enumeration sweeps: hardware concurrency, capped by
/// QUIVER_CONES_THREADS when set.
std::size_t worker_count();

}  // namespace qcones

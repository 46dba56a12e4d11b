#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "quiver_cones/error.hpp"

namespace qcones {

// ---------------------------------------------------------------------------
// Lattice vectors
// ---------------------------------------------------------------------------

namespace detail {

/// Dense integer vector indexed by canonical vertex position.
template <class Derived>
class IntVector {
 public:
  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::span<const std::int64_t> entries() const noexcept { return entries_; }

  bool is_zero() const noexcept {
    for (auto x : entries_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const IntVector&, const IntVector&) = default;
  friend auto operator<=>(const IntVector&, const IntVector&) = default;

 protected:
  IntVector() = default;
  explicit IntVector(std::vector<std::int64_t> e) : entries_(std::move(e)) {}
  std::vector<std::int64_t> entries_;
};

}  // namespace detail

/// A dimension vector: nonnegative integer per vertex.
class DimVector : public detail::IntVector<DimVector> {
 public:
  DimVector() = default;
  /// Throws BadParameter on a negative entry.
  explicit DimVector(std::vector<std::int64_t> entries);
  static DimVector zero(std::size_t n) { return DimVector(std::vector<std::int64_t>(n, 0)); }
  static DimVector unit(std::size_t n, std::size_t i);

  /// Sum of the entries (checked).
  std::int64_t mass() const;

  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend auto operator<=>(const DimVector&, const DimVector&) = default;
};

/// A weight: arbitrary integer per vertex.
class Weight : public detail::IntVector<Weight> {
 public:
  Weight() = default;
  explicit Weight(std::vector<std::int64_t> entries) : IntVector(std::move(entries)) {}
  static Weight zero(std::size_t n) { return Weight(std::vector<std::int64_t>(n, 0)); }

  Weight operator-() const;
  /// k * this, checked.
  Weight scaled(std::int64_t k) const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Entrywise b <= a (sizes must agree).
bool leq(const DimVector& b, const DimVector& a);
DimVector operator+(const DimVector& a, const DimVector& b);
/// a - b; requires b <= a.
DimVector operator-(const DimVector& a, const DimVector& b);

struct DimVectorHash {
  std::size_t operator()(const DimVector& v) const noexcept;
};

// ---------------------------------------------------------------------------
// Quiver
// ---------------------------------------------------------------------------

struct ArrowDesc {
  std::string id;
  std::string tail;
  std::string head;
  friend bool operator==(const ArrowDesc&, const ArrowDesc&) = default;
};

/// Unvalidated quiver data, as read from a file or built by hand.
struct QuiverDesc {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<ArrowDesc> arrows;
  friend bool operator==(const QuiverDesc&, const QuiverDesc&) = default;
};

/// Throws DuplicateId, DanglingEndpoint or OrientedCycle (with one witness cycle
/// in the message).
void validate_quiver(const QuiverDesc& desc);

/// Immutable acyclic quiver. Vertices and arrows keep declaration order.
class Quiver {
 public:
  struct Arrow {
    std::string id;
    std::size_t tail;
    std::size_t head;
  };

  explicit Quiver(QuiverDesc desc);

  const std::string& name() const noexcept { return name_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::string& vertex_id(std::size_t i) const { return vertices_.at(i); }
  const std::vector<std::string>& vertex_ids() const noexcept { return vertices_; }
  const Arrow& arrow(std::size_t i) const { return arrows_.at(i); }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  std::optional<std::size_t> vertex_index(const std::string& id) const;
  std::optional<std::size_t> arrow_index(const std::string& id) const;

  /// Vertex indices in a topological order (tails before heads).
  const std::vector<std::size_t>& topological_order() const noexcept { return topo_; }

  QuiverDesc describe() const;

  friend bool operator==(const Quiver& a, const Quiver& b) { return a.describe() == b.describe(); }

 private:
  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> arrow_index_;
  std::vector<std::size_t> topo_;
};

/// <a,b> = sum_x a(x)b(x) - sum_arrows a(ta)b(ha), checked.
std::int64_t euler_form(const Quiver& q, const DimVector& a, const DimVector& b);

/// The weight <a,.>: x -> a(x) - sum_{ha=x} a(ta).
Weight left_euler_weight(const Quiver& q, const DimVector& a);

/// The weight <.,b>: x -> b(x) - sum_{ta=x} b(ha).
Weight right_euler_weight(const Quiver& q, const DimVector& b);

/// sigma(a) = sum_x sigma(x) a(x), checked.
std::int64_t weight_eval(const Weight& s, const DimVector& a);

// ---------------------------------------------------------------------------
// Involutions
// ---------------------------------------------------------------------------

/// Unvalidated involution data; ids absent from a map are fixed points.
struct InvolutionDesc {
  std::string name;
  std::map<std::string, std::string> vmap;
  std::map<std::string, std::string> amap;
  friend bool operator==(const InvolutionDesc&, const InvolutionDesc&) = default;
};

/// Throws BadParameter (unknown id), NotSelfInverse or AxiomViolation (naming
/// the offending arrow).
void validate_involution(const Quiver& q, const InvolutionDesc& desc);

class Involution {
 public:
  Involution(const Quiver& q, const InvolutionDesc& desc);

  const std::string& name() const noexcept { return name_; }
  std::size_t vertex_image(std::size_t v) const { return vmap_.at(v); }
  std::size_t arrow_image(std::size_t a) const { return amap_.at(a); }
  std::span<const std::size_t> vertex_map() const noexcept { return vmap_; }

  /// Canonical description: both directions of every swapped pair, fixed points omitted.
  InvolutionDesc describe(const Quiver& q) const;

 private:
  std::string name_;
  std::vector<std::size_t> vmap_;
  std::vector<std::size_t> amap_;
};

/// (tau a)(x) = a(tau x).
DimVector tau_dim(const Involution& inv, const DimVector& a);
Weight tau_weight(const Involution& inv, const Weight& s);

/// A quiver together with the involutions declared for it.
struct QuiverBundle {
  Quiver quiver;
  std::vector<Involution> involutions;

  /// Throws BadParameter if no involution has this name.
  const Involution& involution(const std::string& name) const;
};

/// Orbits of tau on vertices, and the coordinate isomorphism between
/// anti-symmetric weights (s = -tau s) and Z^{#swapped orbits}.
class OrbitBasis {
 public:
  struct Orbit {
    std::size_t rep;
    std::optional<std::size_t> partner;  // empty for a fixed vertex
    bool swapped() const noexcept { return partner.has_value(); }
  };

  /// Representative of a swapped orbit defaults to the lexicographically
  /// larger vertex id; `rep_overrides` names vertex ids to use instead.
  OrbitBasis(const Quiver& q, const Involution& inv, std::span<const std::string> rep_overrides = {});

  /// All orbits, ordered by representative's canonical index.
  const std::vector<Orbit>& orbits() const noexcept { return orbits_; }
  std::size_t vertex_count() const noexcept { return n_; }
  /// Number of swapped orbits; the coordinate dimension.
  std::size_t dimension() const noexcept { return swapped_.size(); }
  /// Representatives of swapped orbits in coordinate order.
  std::vector<std::size_t> representatives() const;

  std::vector<std::int64_t> to_coords(const Weight& s) const;
  Weight from_coords(std::span<const std::int64_t> coords) const;

  /// Coefficients c with s(b) = sum_o c_o s(rep_o) for every anti-symmetric s:
  /// c_o = b(rep_o) - b(tau rep_o).
  std::vector<std::int64_t> restrict_normal(const DimVector& b) const;

 private:
  std::size_t n_;
  std::vector<Orbit> orbits_;
  std::vector<std::size_t> swapped_;  // indices into orbits_
};

}  // namespace qcones

#include "quiver_cones/cone.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "parallel.hpp"
#include "quiver_cones/checked.hpp"

namespace qcones {

const char* to_string(Method m) {
  switch (m) {
    case Method::Dw: return "dw";
    case Method::Inductive: return "inductive";
    case Method::AntiInv: return "antiinv";
  }
  return "unknown";
}

Method parse_method(const std::string& s) {
  for (Method m : {Method::Dw, Method::Inductive, Method::AntiInv})
    if (s == to_string(m)) return m;
  throw QuiverError(ErrorKind::BadParameter, "unknown method '" + s + "' (expected dw, inductive or antiinv)");
}

std::size_t worker_count() {
  std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("QUIVER_CONES_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return std::min<std::size_t>(static_cast<std::size_t>(v), hw);
  }
  return hw;
}

// ---------------------------------------------------------------------------

std::vector<std::vector<std::int64_t>> InequalitySystem::rows() const {
  if (coordinate_space) return restricted;
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& b : normals) out.emplace_back(b.entries().begin(), b.entries().end());
  return out;
}

InequalitySystem InequalitySystem::subset(const std::vector<std::size_t>& indices) const {
  InequalitySystem out{alpha, {}, coordinate_space, {}};
  for (auto i : indices) {
    out.normals.push_back(normals.at(i));
    if (coordinate_space) out.restricted.push_back(restricted.at(i));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void require_symmetric(const DimVector& a, const Involution& inv) {
  if (tau_dim(inv, a) != a)
    throw QuiverError(ErrorKind::NotSymmetricDimension, "dimension vector is not tau-symmetric under '" + inv.name() + "'");
}

std::vector<std::size_t> key_of(const Involution& inv) {
  return {inv.vertex_map().begin(), inv.vertex_map().end()};
}

}  // namespace

SemiInvariantCone::SemiInvariantCone(const ExtTable& table, DimVector alpha) : table_(table), alpha_(std::move(alpha)) {
  if (alpha_.size() != table_.quiver().vertex_count())
    throw QuiverError(ErrorKind::DimensionMismatch, "alpha not bound to quiver '" + table_.quiver().name() + "'");
}

std::shared_ptr<const simd::VectorBlock> SemiInvariantCone::inductive_normals() const {
  {
    std::lock_guard lock(mutex_);
    if (inductive_) return inductive_;
  }
  // Fills the subdimension lists of every b <= alpha before the sweep.
  table_.generic_subdim_block(alpha_);
  BoxEnumerator box(alpha_);
  std::vector<char> keep(box.size(), 0);
  detail::parallel_for(box.size(), worker_count(), [&](std::size_t i) {
    DimVector b = box.at(i);
    keep[i] = table_.circ_nonzero(b, alpha_ - b);
  });
  auto block = std::make_shared<simd::VectorBlock>(alpha_.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    if (keep[i]) block->push_back(box.at(i));
  std::lock_guard lock(mutex_);
  if (!inductive_) inductive_ = std::move(block);
  return inductive_;
}

std::shared_ptr<const std::vector<IsoPair>> SemiInvariantCone::iso_pairs_cached(const Involution& inv) const {
  require_symmetric(alpha_, inv);
  auto key = key_of(inv);
  {
    std::lock_guard lock(mutex_);
    auto it = pairs_.find(key);
    if (it != pairs_.end()) return it->second;
  }
  table_.generic_subdim_block(alpha_);
  BoxEnumerator box(alpha_);
  std::vector<char> keep(box.size(), 0);
  detail::parallel_for(box.size(), worker_count(), [&](std::size_t i) {
    DimVector b = box.at(i);
    DimVector tb = tau_dim(inv, b);
    DimVector both = b + tb;
    if (!leq(both, alpha_)) return;
    DimVector g = alpha_ - both;
    keep[i] = table_.circ_nonzero(b, g) && table_.circ_nonzero(b, tb);
  });
  auto pairs = std::make_shared<std::vector<IsoPair>>();
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!keep[i]) continue;
    DimVector b = box.at(i);
    DimVector g = alpha_ - (b + tau_dim(inv, b));
    pairs->push_back(IsoPair{std::move(b), std::move(g)});
  }
  std::lock_guard lock(mutex_);
  return pairs_.try_emplace(std::move(key), std::move(pairs)).first->second;
}

std::vector<IsoPair> SemiInvariantCone::iso_pairs(const Involution& inv) const { return *iso_pairs_cached(inv); }

std::shared_ptr<const simd::VectorBlock> SemiInvariantCone::normals(Method m, const Involution* inv) const {
  switch (m) {
    case Method::Dw: return table_.generic_subdim_block(alpha_);
    case Method::Inductive: return inductive_normals();
    case Method::AntiInv: {
      if (!inv) throw QuiverError(ErrorKind::BadParameter, "antiinv method requires an involution");
      auto pairs = iso_pairs_cached(*inv);
      auto key = key_of(*inv);
      std::lock_guard lock(mutex_);
      auto it = antiinv_.find(key);
      if (it != antiinv_.end()) return it->second;
      auto block = std::make_shared<simd::VectorBlock>(alpha_.size());
      for (const auto& p : *pairs) block->push_back(p.beta);
      return antiinv_.emplace(std::move(key), std::move(block)).first->second;
    }
  }
  throw std::logic_error("unreachable");
}

MembershipResult SemiInvariantCone::member(Method m, const Weight& s, const Involution* inv) const {
  if (s.size() != alpha_.size()) throw QuiverError(ErrorKind::DimensionMismatch, "weight not bound to this quiver");
  if (m == Method::AntiInv) {
    if (!inv) throw QuiverError(ErrorKind::BadParameter, "antiinv method requires an involution");
    require_symmetric(alpha_, *inv);
    if (tau_weight(*inv, s) != -s)
      throw QuiverError(ErrorKind::NotAntiSymmetric, "weight is not anti-symmetric under '" + inv->name() + "'");
  }

  MembershipResult result;
  std::int64_t on_alpha = weight_eval(s, alpha_);
  if (on_alpha != 0) {
    if (m == Method::AntiInv) throw std::logic_error("anti-symmetric weight is nonzero on a symmetric dimension");
    result.weight_on_alpha = on_alpha;
    if (on_alpha > 0) result.witness = alpha_;
    return result;
  }
  auto block = normals(m, inv);
  if (simd::max_dot(*block, s.entries()) <= 0) {
    result.member = true;
    return result;
  }
  result.witness = block->row(*simd::first_row_above(*block, s.entries(), 0));
  return result;
}

// ---------------------------------------------------------------------------

MembershipResult member_dw(const ExtTable& t, const Weight& s, const DimVector& a) {
  return SemiInvariantCone(t, a).member(Method::Dw, s);
}

MembershipResult member_inductive(const ExtTable& t, const Weight& s, const DimVector& a) {
  return SemiInvariantCone(t, a).member(Method::Inductive, s);
}

MembershipResult member_antiinv(const ExtTable& t, const Weight& s, const DimVector& a, const Involution& inv) {
  return SemiInvariantCone(t, a).member(Method::AntiInv, s, &inv);
}

std::vector<IsoPair> enumerate_I0(const ExtTable& t, const DimVector& a, const Involution& inv) {
  return SemiInvariantCone(t, a).iso_pairs(inv);
}

namespace {

std::vector<std::int64_t> primitive(std::vector<std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

bool is_zero_row(const std::vector<std::int64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

}  // namespace

InequalitySystem inequalities(const ExtTable& t, const DimVector& a, Method method, const Involution* inv,
                              const InequalityOptions& options) {
  SemiInvariantCone cone(t, a);
  InequalitySystem sys{a, cone.normals(method, inv)->to_vectors(), std::nullopt, {}};
  if (method == Method::AntiInv) {
    sys.coordinate_space.emplace(t.quiver(), *inv, options.representatives);
    for (const auto& b : sys.normals) {
      if (!leq(b + tau_dim(*inv, b), a)) throw std::logic_error("II0 pair with beta + tau beta > alpha");
      sys.restricted.push_back(sys.coordinate_space->restrict_normal(b));
    }
  }

  std::vector<std::size_t> keep;
  std::set<std::vector<std::int64_t>> seen;
  auto rows = sys.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (options.drop_zero && is_zero_row(rows[i])) continue;
    if (options.dedup && method == Method::AntiInv) {
      sys.restricted[i] = primitive(sys.restricted[i]);
      if (!seen.insert(sys.restricted[i]).second) continue;
    }
    keep.push_back(i);
  }
  return sys.subset(keep);
}

Counts counts(const ExtTable& t, const DimVector& a, const Involution* inv) {
  SemiInvariantCone cone(t, a);
  Counts c;
  c.n1 = cone.normals(Method::Dw)->rows();
  c.n2 = cone.normals(Method::Inductive)->rows();
  if (inv) c.n3 = cone.normals(Method::AntiInv, inv)->rows();
  return c;
}

}  // namespace qcones

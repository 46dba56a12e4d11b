#include "quiver_cones/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "quiver_cones/checked.hpp"

namespace qcones {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorKind::OrientedCycle: return "OrientedCycle";
    case ErrorKind::NotSelfInverse: return "NotSelfInverse";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotAntiSymmetric: return "NotAntiSymmetric";
    case ErrorKind::NotSymmetricDimension: return "NotSymmetricDimension";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::LPNumericalInvariantViolation: return "LPNumericalInvariantViolation";
  }
  return "Unknown";
}

namespace {

std::string format_error(ErrorKind kind, const std::string& message, std::optional<int> line) {
  std::ostringstream os;
  if (line) os << "line " << *line << ": ";
  os << to_string(kind) << ": " << message;
  return os.str();
}

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw QuiverError(ErrorKind::DimensionMismatch, "vectors bound to different quivers");
}

}  // namespace

QuiverError::QuiverError(ErrorKind kind, const std::string& message, std::optional<int> line)
    : std::runtime_error(format_error(kind, message, line)), kind_(kind), message_(message), line_(line) {}

// ---------------------------------------------------------------------------

DimVector::DimVector(std::vector<std::int64_t> entries) : IntVector(std::move(entries)) {
  for (auto x : entries_)
    if (x < 0) throw QuiverError(ErrorKind::BadParameter, "dimension vector entries must be nonnegative");
}

DimVector DimVector::unit(std::size_t n, std::size_t i) {
  std::vector<std::int64_t> e(n, 0);
  e.at(i) = 1;
  return DimVector(std::move(e));
}

std::int64_t DimVector::mass() const {
  std::int64_t m = 0;
  for (auto x : entries_) m = checked::add(m, x);
  return m;
}

Weight Weight::operator-() const { return scaled(-1); }

Weight Weight::scaled(std::int64_t k) const {
  std::vector<std::int64_t> e(entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked::mul(k, entries_[i]);
  return Weight(std::move(e));
}

bool leq(const DimVector& b, const DimVector& a) {
  require_same_size(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] > a[i]) return false;
  return true;
}

DimVector operator+(const DimVector& a, const DimVector& b) {
  require_same_size(a.size(), b.size());
  std::vector<std::int64_t> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked::add(a[i], b[i]);
  return DimVector(std::move(e));
}

DimVector operator-(const DimVector& a, const DimVector& b) {
  require_same_size(a.size(), b.size());
  std::vector<std::int64_t> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (b[i] > a[i]) throw QuiverError(ErrorKind::BadParameter, "difference of dimension vectors is negative");
    e[i] = a[i] - b[i];
  }
  return DimVector(std::move(e));
}

std::size_t DimVectorHash::operator()(const DimVector& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto x : v.entries()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------

void validate_quiver(const QuiverDesc& desc) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < desc.vertices.size(); ++i) {
    if (!index.emplace(desc.vertices[i], i).second)
      throw QuiverError(ErrorKind::DuplicateId, "vertex '" + desc.vertices[i] + "' declared twice");
  }
  std::set<std::string> arrow_ids;
  std::vector<std::vector<std::size_t>> out(desc.vertices.size());
  for (const auto& a : desc.arrows) {
    if (!arrow_ids.insert(a.id).second) throw QuiverError(ErrorKind::DuplicateId, "arrow '" + a.id + "' declared twice");
    if (index.contains(a.id)) throw QuiverError(ErrorKind::DuplicateId, "arrow id '" + a.id + "' collides with a vertex");
    auto t = index.find(a.tail);
    auto h = index.find(a.head);
    if (t == index.end())
      throw QuiverError(ErrorKind::DanglingEndpoint, "arrow '" + a.id + "' has undeclared tail '" + a.tail + "'");
    if (h == index.end())
      throw QuiverError(ErrorKind::DanglingEndpoint, "arrow '" + a.id + "' has undeclared head '" + a.head + "'");
    out[t->second].push_back(h->second);
  }

  // Iterative DFS; a back edge to a vertex on the stack closes a cycle.
  enum : char { White, Grey, Black };
  std::vector<char> colour(desc.vertices.size(), White);
  std::vector<std::size_t> parent(desc.vertices.size(), 0);
  for (std::size_t root = 0; root < desc.vertices.size(); ++root) {
    if (colour[root] != White) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    colour[root] = Grey;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < out[v].size()) {
        std::size_t w = out[v][next++];
        if (colour[w] == Grey) {
          std::vector<std::string> cycle{desc.vertices[w]};
          for (std::size_t u = v; u != w; u = parent[u]) cycle.push_back(desc.vertices[u]);
          std::reverse(cycle.begin() + 1, cycle.end());
          std::string msg = "oriented cycle ";
          for (const auto& c : cycle) msg += c + " -> ";
          msg += desc.vertices[w];
          throw QuiverError(ErrorKind::OrientedCycle, msg);
        }
        if (colour[w] == White) {
          colour[w] = Grey;
          parent[w] = v;
          stack.emplace_back(w, 0);
        }
      } else {
        colour[v] = Black;
        stack.pop_back();
      }
    }
  }
}

Quiver::Quiver(QuiverDesc desc) {
  validate_quiver(desc);
  name_ = std::move(desc.name);
  vertices_ = std::move(desc.vertices);
  for (std::size_t i = 0; i < vertices_.size(); ++i) vertex_index_.emplace(vertices_[i], i);
  for (auto& a : desc.arrows) {
    arrow_index_.emplace(a.id, arrows_.size());
    arrows_.push_back(Arrow{std::move(a.id), vertex_index_.at(a.tail), vertex_index_.at(a.head)});
  }

  // Kahn's algorithm, smallest index first for a deterministic order.
  std::vector<std::size_t> indegree(vertices_.size(), 0);
  for (const auto& a : arrows_) ++indegree[a.head];
  std::set<std::size_t> ready;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (indegree[v] == 0) ready.insert(v);
  while (!ready.empty()) {
    std::size_t v = *ready.begin();
    ready.erase(ready.begin());
    topo_.push_back(v);
    for (const auto& a : arrows_)
      if (a.tail == v && --indegree[a.head] == 0) ready.insert(a.head);
  }
}

std::optional<std::size_t> Quiver::vertex_index(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Quiver::arrow_index(const std::string& id) const {
  auto it = arrow_index_.find(id);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

QuiverDesc Quiver::describe() const {
  QuiverDesc d{name_, vertices_, {}};
  for (const auto& a : arrows_) d.arrows.push_back({a.id, vertices_[a.tail], vertices_[a.head]});
  return d;
}

// ---------------------------------------------------------------------------

std::int64_t euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  require_same_size(a.size(), q.vertex_count());
  require_same_size(b.size(), q.vertex_count());
  std::int64_t r = 0;
  for (std::size_t x = 0; x < a.size(); ++x) r = checked::add(r, checked::mul(a[x], b[x]));
  for (const auto& arr : q.arrows()) r = checked::sub(r, checked::mul(a[arr.tail], b[arr.head]));
  return r;
}

Weight left_euler_weight(const Quiver& q, const DimVector& a) {
  require_same_size(a.size(), q.vertex_count());
  std::vector<std::int64_t> w(a.entries().begin(), a.entries().end());
  for (const auto& arr : q.arrows()) w[arr.head] = checked::sub(w[arr.head], a[arr.tail]);
  return Weight(std::move(w));
}

Weight right_euler_weight(const Quiver& q, const DimVector& b) {
  require_same_size(b.size(), q.vertex_count());
  std::vector<std::int64_t> w(b.entries().begin(), b.entries().end());
  for (const auto& arr : q.arrows()) w[arr.tail] = checked::sub(w[arr.tail], b[arr.head]);
  return Weight(std::move(w));
}

std::int64_t weight_eval(const Weight& s, const DimVector& a) {
  require_same_size(s.size(), a.size());
  std::int64_t r = 0;
  for (std::size_t x = 0; x < a.size(); ++x) r = checked::add(r, checked::mul(s[x], a[x]));
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::size_t> resolve_map(const std::map<std::string, std::string>& m, std::size_t n,
                                     const auto& lookup, const char* what) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  for (const auto& [from, to] : m) {
    auto f = lookup(from);
    auto t = lookup(to);
    if (!f) throw QuiverError(ErrorKind::BadParameter, std::string("involution names unknown ") + what + " '" + from + "'");
    if (!t) throw QuiverError(ErrorKind::BadParameter, std::string("involution names unknown ") + what + " '" + to + "'");
    out[*f] = *t;
  }
  return out;
}

}  // namespace

void validate_involution(const Quiver& q, const InvolutionDesc& desc) {
  auto vmap = resolve_map(desc.vmap, q.vertex_count(), [&](const std::string& s) { return q.vertex_index(s); }, "vertex");
  auto amap = resolve_map(desc.amap, q.arrow_count(), [&](const std::string& s) { return q.arrow_index(s); }, "arrow");
  for (std::size_t v = 0; v < vmap.size(); ++v)
    if (vmap[vmap[v]] != v)
      throw QuiverError(ErrorKind::NotSelfInverse, "vertex map of '" + desc.name + "' is not self-inverse at '" +
                                                       q.vertex_id(v) + "'");
  for (std::size_t a = 0; a < amap.size(); ++a)
    if (amap[amap[a]] != a)
      throw QuiverError(ErrorKind::NotSelfInverse, "arrow map of '" + desc.name + "' is not self-inverse at '" +
                                                       q.arrow(a).id + "'");
  for (std::size_t a = 0; a < amap.size(); ++a) {
    const auto& arr = q.arrow(a);
    const auto& img = q.arrow(amap[a]);
    if (img.head != vmap[arr.tail] || img.tail != vmap[arr.head])
      throw QuiverError(ErrorKind::AxiomViolation, "involution '" + desc.name + "' violates h(tau a) = tau(t a) / t(tau a) = tau(h a) at arrow '" +
                                                       arr.id + "'");
  }
}

Involution::Involution(const Quiver& q, const InvolutionDesc& desc) : name_(desc.name) {
  validate_involution(q, desc);
  vmap_ = resolve_map(desc.vmap, q.vertex_count(), [&](const std::string& s) { return q.vertex_index(s); }, "vertex");
  amap_ = resolve_map(desc.amap, q.arrow_count(), [&](const std::string& s) { return q.arrow_index(s); }, "arrow");
}

InvolutionDesc Involution::describe(const Quiver& q) const {
  InvolutionDesc d{name_, {}, {}};
  for (std::size_t v = 0; v < vmap_.size(); ++v)
    if (vmap_[v] > v) d.vmap.emplace(q.vertex_id(v), q.vertex_id(vmap_[v]));
  for (std::size_t a = 0; a < amap_.size(); ++a)
    if (amap_[a] > a) d.amap.emplace(q.arrow(a).id, q.arrow(amap_[a]).id);
  // Maps in a desc are directed; store both directions.
  for (auto [x, y] : std::map(d.vmap)) d.vmap.emplace(y, x);
  for (auto [x, y] : std::map(d.amap)) d.amap.emplace(y, x);
  return d;
}

DimVector tau_dim(const Involution& inv, const DimVector& a) {
  require_same_size(a.size(), inv.vertex_map().size());
  std::vector<std::int64_t> e(a.size());
  for (std::size_t x = 0; x < e.size(); ++x) e[x] = a[inv.vertex_image(x)];
  return DimVector(std::move(e));
}

Weight tau_weight(const Involution& inv, const Weight& s) {
  require_same_size(s.size(), inv.vertex_map().size());
  std::vector<std::int64_t> e(s.size());
  for (std::size_t x = 0; x < e.size(); ++x) e[x] = s[inv.vertex_image(x)];
  return Weight(std::move(e));
}

const Involution& QuiverBundle::involution(const std::string& name) const {
  for (const auto& inv : involutions)
    if (inv.name() == name) return inv;
  throw QuiverError(ErrorKind::BadParameter, "quiver '" + quiver.name() + "' has no involution '" + name + "'");
}

// ---------------------------------------------------------------------------

OrbitBasis::OrbitBasis(const Quiver& q, const Involution& inv, std::span<const std::string> rep_overrides)
    : n_(q.vertex_count()) {
  std::vector<std::size_t> rep(n_);
  for (std::size_t v = 0; v < n_; ++v) {
    std::size_t w = inv.vertex_image(v);
    rep[v] = q.vertex_id(v) >= q.vertex_id(w) ? v : w;
  }
  std::set<std::size_t> seen_orbits;
  for (const auto& id : rep_overrides) {
    auto v = q.vertex_index(id);
    if (!v) throw QuiverError(ErrorKind::BadParameter, "representative '" + id + "' is not a vertex");
    std::size_t w = inv.vertex_image(*v);
    if (w == *v) throw QuiverError(ErrorKind::BadParameter, "representative '" + id + "' is a fixed vertex");
    if (!seen_orbits.insert(std::min(*v, w)).second)
      throw QuiverError(ErrorKind::BadParameter, "two representatives given for the orbit of '" + id + "'");
    rep[*v] = *v;
    rep[w] = *v;
  }
  for (std::size_t v = 0; v < n_; ++v) {
    if (rep[v] != v) continue;
    std::size_t w = inv.vertex_image(v);
    orbits_.push_back(Orbit{v, w == v ? std::nullopt : std::optional<std::size_t>(w)});
  }
  for (std::size_t i = 0; i < orbits_.size(); ++i)
    if (orbits_[i].swapped()) swapped_.push_back(i);
}

std::vector<std::size_t> OrbitBasis::representatives() const {
  std::vector<std::size_t> r;
  for (auto i : swapped_) r.push_back(orbits_[i].rep);
  return r;
}

std::vector<std::int64_t> OrbitBasis::to_coords(const Weight& s) const {
  require_same_size(s.size(), n_);
  for (const auto& o : orbits_) {
    std::int64_t other = o.swapped() ? s[*o.partner] : s[o.rep];
    if (s[o.rep] != checked::neg(other))
      throw QuiverError(ErrorKind::NotAntiSymmetric, "weight is not anti-symmetric (sigma != -tau sigma)");
  }
  std::vector<std::int64_t> c;
  for (auto i : swapped_) c.push_back(s[orbits_[i].rep]);
  return c;
}

Weight OrbitBasis::from_coords(std::span<const std::int64_t> coords) const {
  if (coords.size() != swapped_.size())
    throw QuiverError(ErrorKind::DimensionMismatch, "expected " + std::to_string(swapped_.size()) + " coordinates");
  std::vector<std::int64_t> e(n_, 0);
  for (std::size_t k = 0; k < swapped_.size(); ++k) {
    const auto& o = orbits_[swapped_[k]];
    e[o.rep] = coords[k];
    e[*o.partner] = checked::neg(coords[k]);
  }
  return Weight(std::move(e));
}

std::vector<std::int64_t> OrbitBasis::restrict_normal(const DimVector& b) const {
  require_same_size(b.size(), n_);
  std::vector<std::int64_t> c;
  for (auto i : swapped_) {
    const auto& o = orbits_[i];
    c.push_back(checked::sub(b[o.rep], b[*o.partner]));
  }
  return c;
}

}  // namespace qcones

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quiver_cones/quiver.hpp"

namespace qcones::io {

/// Parses the line-oriented quiver format:
///
///     # comment
///     quiver <name>
///     vertices <id> <id> ...
///     arrow <id> <tail> <head>
///     involution <name>
///     vmap <x> <y>
///     amap <a> <b>
///
/// `vmap`/`amap` pairs are unordered; fixed points may be listed or omitted.
/// Errors carry the offending line number.
QuiverBundle parse_quiver_file(std::string_view text);

/// Canonical text: declaration order, each swapped pair once (smaller index
/// first), fixed points omitted. Reparses to an equal bundle.
std::string serialize_quiver_file(const Quiver& q, std::span<const Involution> involutions);
inline std::string serialize_quiver_file(const QuiverBundle& b) {
  return serialize_quiver_file(b.quiver, b.involutions);
}

/// `x1=2,x3=1`; omitted vertices are 0; an empty string is the zero vector.
DimVector parse_dim_literal(const Quiver& q, std::string_view text);
Weight parse_weight_literal(const Quiver& q, std::string_view text);

/// Comma-separated integers, e.g. `2,3,4,4,3,2`; an empty string is empty.
std::vector<std::int64_t> parse_int_list(std::string_view text);
/// Comma-separated identifiers.
std::vector<std::string> parse_id_list(std::string_view text);

/// `2,3,4,4,3,2` in canonical vertex order.
std::string format_values(std::span<const std::int64_t> v);
/// `x1=2,x2=3,...` listing every vertex.
std::string format_literal(const Quiver& q, std::span<const std::int64_t> v);

}  // namespace qcones::io

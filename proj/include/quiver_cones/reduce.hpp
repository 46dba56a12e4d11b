#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "quiver_cones/cone.hpp"

namespace qcones {

using Rational = boost::multiprecision::cpp_rational;

/// maximize objective . x  subject to  le_rows x <= le_rhs,  eq_rows x = eq_rhs,
/// x free. Exact rationals throughout.
struct RationalLP {
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> le_rows;
  std::vector<Rational> le_rhs;
  std::vector<std::vector<Rational>> eq_rows;
  std::vector<Rational> eq_rhs;
};

enum class LPStatus { Optimal, Unbounded, Infeasible };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rational value;
  std::vector<Rational> x;
};

/// Two-phase primal simplex with Bland's rule. The returned point is checked
/// against every constraint; a violation throws LPNumericalInvariantViolation.
LPResult maximize(const RationalLP& lp);

/// Largest coordinate dimension accepted by the redundancy tests.
inline constexpr std::size_t kMaxReduceDimension = 8;

/// Row `index` of the homogeneous system {rows . x <= 0, equalities . x = 0} is
/// redundant iff  max rows[index] . x  subject to the other rows, rows[index] . x <= 1
/// and the equalities is <= 0.
bool is_redundant(std::span<const std::vector<std::int64_t>> rows, std::size_t index,
                  std::span<const std::vector<std::int64_t>> equalities = {});

/// For a restricted system the rows are the coordinate rows; otherwise the
/// normals with the equality alpha . x = 0. Throws DimensionTooLarge above
/// kMaxReduceDimension (after removing the equality).
bool is_redundant(const InequalitySystem& system, std::size_t index);

/// Indices of a greedy irredundant subsystem, scanning in order and dropping
/// each row that is redundant with respect to the rows still present.
std::vector<std::size_t> irredundant_rows(std::span<const std::vector<std::int64_t>> rows,
                                          std::span<const std::vector<std::int64_t>> equalities = {});

InequalitySystem irredundant_core(const InequalitySystem& system);

}  // namespace qcones

#include "quiver_cones/reduce.hpp"

#include <algorithm>
#include <optional>

namespace qcones {

namespace {

struct Tableau {
  std::vector<std::vector<Rational>> a;  // rows x (cols + 1); last column is the rhs
  std::vector<std::size_t> basis;
  std::size_t cols = 0;

  const Rational& rhs(std::size_t i) const { return a[i][cols]; }

  void pivot(std::size_t row, std::size_t col) {
    Rational p = a[row][col];
    if (p == 0) throw QuiverError(ErrorKind::LPNumericalInvariantViolation, "pivot on a zero entry");
    for (auto& v : a[row]) v /= p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = 0; j <= cols; ++j) a[i][j] -= f * a[row][j];
    }
    basis[row] = col;
  }
};

enum class Phase { Optimal, Unbounded };

// Maximizes cost . y from the current basic feasible tableau. Columns at or
// beyond `allowed` never enter. Bland's rule: lowest-index improving column,
// ties in the ratio test broken by lowest basic index.
Phase run_simplex(Tableau& t, const std::vector<Rational>& cost, std::size_t allowed) {
  for (;;) {
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j < allowed && !enter; ++j) {
      Rational r = cost[j];
      for (std::size_t i = 0; i < t.a.size(); ++i) r -= cost[t.basis[i]] * t.a[i][j];
      if (r > 0) enter = j;
    }
    if (!enter) return Phase::Optimal;

    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t i = 0; i < t.a.size(); ++i) {
      if (t.a[i][*enter] <= 0) continue;
      Rational ratio = t.rhs(i) / t.a[i][*enter];
      if (!leave || ratio < best || (ratio == best && t.basis[i] < t.basis[*leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (!leave) return Phase::Unbounded;
    t.pivot(*leave, *enter);
  }
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

}  // namespace

LPResult maximize(const RationalLP& lp) {
  const std::size_t n = lp.objective.size();
  const std::size_t m_le = lp.le_rows.size();
  const std::size_t m_eq = lp.eq_rows.size();
  if (lp.le_rhs.size() != m_le || lp.eq_rhs.size() != m_eq)
    throw QuiverError(ErrorKind::DimensionMismatch, "LP right-hand sides do not match the rows");
  for (const auto& r : lp.le_rows)
    if (r.size() != n) throw QuiverError(ErrorKind::DimensionMismatch, "LP row has wrong length");
  for (const auto& r : lp.eq_rows)
    if (r.size() != n) throw QuiverError(ErrorKind::DimensionMismatch, "LP row has wrong length");

  // Columns: u (n), v (n), slacks (m_le), artificials. x = u - v.
  const std::size_t m = m_le + m_eq;
  std::vector<bool> needs_artificial(m, false);
  std::size_t artificials = 0;
  for (std::size_t i = 0; i < m; ++i) {
    bool is_le = i < m_le;
    const Rational& b = is_le ? lp.le_rhs[i] : lp.eq_rhs[i - m_le];
    needs_artificial[i] = !is_le || b < 0;
    if (needs_artificial[i]) ++artificials;
  }
  const std::size_t art_begin = 2 * n + m_le;

  Tableau t;
  t.cols = art_begin + artificials;
  t.a.assign(m, std::vector<Rational>(t.cols + 1, Rational(0)));
  t.basis.assign(m, 0);
  std::size_t next_art = art_begin;
  for (std::size_t i = 0; i < m; ++i) {
    bool is_le = i < m_le;
    const auto& row = is_le ? lp.le_rows[i] : lp.eq_rows[i - m_le];
    Rational b = is_le ? lp.le_rhs[i] : lp.eq_rhs[i - m_le];
    int sign = b < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      t.a[i][j] = sign * row[j];
      t.a[i][n + j] = -sign * row[j];
    }
    if (is_le) t.a[i][2 * n + i] = sign;
    t.a[i][t.cols] = sign * b;
    if (needs_artificial[i]) {
      t.a[i][next_art] = 1;
      t.basis[i] = next_art++;
    } else {
      t.basis[i] = 2 * n + i;
    }
  }

  LPResult result;
  if (artificials > 0) {
    std::vector<Rational> phase1(t.cols, Rational(0));
    for (std::size_t j = art_begin; j < t.cols; ++j) phase1[j] = -1;
    run_simplex(t, phase1, t.cols);
    Rational infeasibility = 0;
    for (std::size_t i = 0; i < t.a.size(); ++i)
      if (t.basis[i] >= art_begin) infeasibility += t.rhs(i);
    if (infeasibility != 0) {
      result.status = LPStatus::Infeasible;
      return result;
    }
    // Drive remaining (zero-level) artificials out; drop rows that are dependent.
    for (std::size_t i = 0; i < t.a.size();) {
      if (t.basis[i] < art_begin) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < art_begin && !col; ++j)
        if (t.a[i][j] != 0) col = j;
      if (col) {
        t.pivot(i, *col);
        ++i;
      } else {
        t.a.erase(t.a.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::vector<Rational> phase2(t.cols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    phase2[j] = lp.objective[j];
    phase2[n + j] = -lp.objective[j];
  }
  if (run_simplex(t, phase2, art_begin) == Phase::Unbounded) {
    result.status = LPStatus::Unbounded;
    return result;
  }

  std::vector<Rational> y(t.cols, Rational(0));
  for (std::size_t i = 0; i < t.a.size(); ++i) y[t.basis[i]] = t.rhs(i);
  result.x.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) result.x[j] = y[j] - y[n + j];
  result.value = dot(lp.objective, result.x);
  result.status = LPStatus::Optimal;

  for (std::size_t j = 0; j < t.cols; ++j)
    if (y[j] < 0) throw QuiverError(ErrorKind::LPNumericalInvariantViolation, "negative basic variable at optimum");
  for (std::size_t i = 0; i < m_le; ++i)
    if (dot(lp.le_rows[i], result.x) > lp.le_rhs[i])
      throw QuiverError(ErrorKind::LPNumericalInvariantViolation, "optimal point violates an inequality row");
  for (std::size_t i = 0; i < m_eq; ++i)
    if (dot(lp.eq_rows[i], result.x) != lp.eq_rhs[i])
      throw QuiverError(ErrorKind::LPNumericalInvariantViolation, "optimal point violates an equality row");
  return result;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Rational> to_rational(const std::vector<std::int64_t>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(x);
  return out;
}

std::size_t common_dimension(std::span<const std::vector<std::int64_t>> rows,
                             std::span<const std::vector<std::int64_t>> equalities) {
  std::optional<std::size_t> dim;
  for (auto group : {rows, equalities})
    for (const auto& r : group) {
      if (dim && *dim != r.size()) throw QuiverError(ErrorKind::DimensionMismatch, "rows of different lengths");
      dim = r.size();
    }
  return dim.value_or(0);
}

bool redundant_among(std::span<const std::vector<std::int64_t>> rows, const std::vector<std::size_t>& active,
                     std::size_t index, std::span<const std::vector<std::int64_t>> equalities) {
  RationalLP lp;
  lp.objective = to_rational(rows[index]);
  for (auto j : active) {
    if (j == index) continue;
    lp.le_rows.push_back(to_rational(rows[j]));
    lp.le_rhs.emplace_back(0);
  }
  lp.le_rows.push_back(lp.objective);
  lp.le_rhs.emplace_back(1);
  for (const auto& e : equalities) {
    lp.eq_rows.push_back(to_rational(e));
    lp.eq_rhs.emplace_back(0);
  }
  LPResult r = maximize(lp);
  if (r.status != LPStatus::Optimal)
    throw QuiverError(ErrorKind::LPNumericalInvariantViolation, "redundancy LP is not bounded and feasible");
  return r.value <= 0;
}

std::vector<std::vector<std::int64_t>> system_equalities(const InequalitySystem& s) {
  if (s.coordinate_space || s.alpha.is_zero()) return {};
  return {std::vector<std::int64_t>(s.alpha.entries().begin(), s.alpha.entries().end())};
}

std::size_t reduced_dimension(const InequalitySystem& s) {
  if (s.coordinate_space) return s.coordinate_space->dimension();
  return s.alpha.size() - (s.alpha.is_zero() ? 0 : 1);
}

void check_dimension(const InequalitySystem& s) {
  std::size_t d = reduced_dimension(s);
  if (d > kMaxReduceDimension)
    throw QuiverError(ErrorKind::DimensionTooLarge,
                      "coordinate dimension " + std::to_string(d) + " exceeds " + std::to_string(kMaxReduceDimension));
}

}  // namespace

bool is_redundant(std::span<const std::vector<std::int64_t>> rows, std::size_t index,
                  std::span<const std::vector<std::int64_t>> equalities) {
  if (index >= rows.size()) throw QuiverError(ErrorKind::BadParameter, "row index out of range");
  common_dimension(rows, equalities);
  std::vector<std::size_t> all(rows.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return redundant_among(rows, all, index, equalities);
}

bool is_redundant(const InequalitySystem& system, std::size_t index) {
  check_dimension(system);
  auto rows = system.rows();
  auto eq = system_equalities(system);
  return is_redundant(rows, index, eq);
}

std::vector<std::size_t> irredundant_rows(std::span<const std::vector<std::int64_t>> rows,
                                          std::span<const std::vector<std::int64_t>> equalities) {
  common_dimension(rows, equalities);
  std::vector<std::size_t> active(rows.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;
  std::vector<std::size_t> removed;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (redundant_among(rows, active, i, equalities)) {
      active.erase(std::find(active.begin(), active.end(), i));
      removed.push_back(i);
    }
  }
  // Every removed row must follow from the core alone.
  for (auto r : removed) {
    std::vector<std::size_t> with_r = active;
    with_r.push_back(r);
    if (!redundant_among(rows, with_r, r, equalities))
      throw QuiverError(ErrorKind::LPNumericalInvariantViolation, "removed row is not implied by the core");
  }
  return active;
}

InequalitySystem irredundant_core(const InequalitySystem& system) {
  check_dimension(system);
  auto rows = system.rows();
  auto eq = system_equalities(system);
  return system.subset(irredundant_rows(rows, eq));
}

}  // namespace qcones

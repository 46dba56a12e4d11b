#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <random>

#include "helpers.hpp"
#include "parallel.hpp"
#include "quiver_cones/reduce.hpp"
#include "quiver_cones/zoo.hpp"

using namespace qcones;
using qcones::test::dim;

using Rows = std::vector<std::vector<std::int64_t>>;

namespace {

std::vector<Rational> rat(std::initializer_list<int> v) {
  std::vector<Rational> out;
  for (int x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("simplex on small programs") {
  SUBCASE("bounded optimum with a fractional vertex") {
    // max x + y  s.t.  2x + y <= 4, x + 3y <= 6
    RationalLP lp{rat({1, 1}), {rat({2, 1}), rat({1, 3})}, rat({4, 6}), {}, {}};
    auto r = maximize(lp);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == Rational(14, 5));
    CHECK(r.x[0] == Rational(6, 5));
    CHECK(r.x[1] == Rational(8, 5));
  }
  SUBCASE("free variables and equalities") {
    // max -x  s.t.  x + y = -3, y <= 1  -> x = -4, value 4
    RationalLP lp{rat({-1, 0}), {rat({0, 1})}, rat({1}), {rat({1, 1})}, rat({-3})};
    auto r = maximize(lp);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == 4);
  }
  SUBCASE("unbounded") {
    RationalLP lp{rat({1, 0}), {rat({0, 1})}, rat({0}), {}, {}};
    CHECK(maximize(lp).status == LPStatus::Unbounded);
  }
  SUBCASE("infeasible") {
    RationalLP lp{rat({1}), {rat({1}), rat({-1})}, rat({-1, -1}), {}, {}};
    CHECK(maximize(lp).status == LPStatus::Infeasible);
  }
  SUBCASE("mismatched rows") {
    RationalLP lp{rat({1, 1}), {rat({1})}, rat({0}), {}, {}};
    CHECK_THROWS_AS(maximize(lp), QuiverError);
  }
}

TEST_CASE("3s(x5) + 2s(x6) <= 0 is redundant") {
  Rows rows{{0, 1, 0}, {0, 0, 1}, {0, 3, 2}};
  CHECK(is_redundant(rows, 2));
  CHECK_FALSE(is_redundant(rows, 0));
  CHECK_FALSE(is_redundant(rows, 1));
  Rows alone{{0, 3, 2}};
  CHECK_FALSE(is_redundant(alone, 0));
}

TEST_CASE("redundancy with equalities") {
  // On the line x = y, x <= 0 and y <= 0 imply each other.
  Rows rows{{1, 0}, {0, 1}};
  Rows eq{{1, -1}};
  CHECK(is_redundant(rows, 0, eq));
  CHECK_FALSE(is_redundant(rows, 0));
  CHECK(irredundant_rows(rows, eq).size() == 1);
}

TEST_CASE("D5-hat irredundant core") {
  auto d5 = zoo::make_d5hat();
  ExtTable t(d5.quiver);
  InequalityOptions opts{true, true, {}};
  auto sys = inequalities(t, dim({2, 3, 4, 4, 3, 2}), Method::AntiInv, &d5.involutions[0], opts);
  auto core = irredundant_core(sys);
  auto rows = core.rows();
  std::sort(rows.begin(), rows.end());
  CHECK(rows == Rows{{0, 0, 1}, {0, 1, 0}, {1, 0, 1}, {1, 1, 0}});
  auto all = sys.rows();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] == std::vector<std::int64_t>{0, 3, 2}) CHECK(is_redundant(sys, i));
  }
}

TEST_CASE("ambient systems reduce modulo sigma(alpha) = 0") {
  ExtTable t(Quiver(test::a2_desc()));
  auto sys = inequalities(t, dim({1, 1}), Method::Dw);
  // Rows (0,0), (0,1), (1,1): on sigma(1,1) = 0 the zero row and the alpha row are implied.
  auto core = irredundant_core(sys);
  CHECK(core.normals == std::vector<DimVector>{dim({0, 1})});
}

TEST_CASE("dimension guard") {
  Quiver big({"big", {"1", "2", "3", "4", "5", "6", "7", "8", "9", "10"}, {}});
  ExtTable t(big);
  auto alpha = DimVector(std::vector<std::int64_t>(10, 1));
  InequalitySystem sys{alpha, {alpha}, std::nullopt, {}};
  try {
    is_redundant(sys, 0);
    FAIL("expected DimensionTooLarge");
  } catch (const QuiverError& e) {
    CHECK(e.kind() == ErrorKind::DimensionTooLarge);
  }
}

TEST_CASE("property: the core implies every row and no core row is redundant") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::int64_t> e(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = 2 + trial % 3;
    Rows rows(3 + rng() % 6, std::vector<std::int64_t>(d));
    for (auto& r : rows)
      for (auto& v : r) v = e(rng);
    auto keep = irredundant_rows(rows);
    Rows core;
    for (auto i : keep) core.push_back(rows[i]);
    for (std::size_t i = 0; i < core.size(); ++i) CHECK_FALSE(is_redundant(core, i));
    for (const auto& r : rows) {
      Rows with = core;
      with.push_back(r);
      CHECK(is_redundant(with, with.size() - 1));
    }
  }
}

TEST_CASE("parallel_for visits each index once and rethrows") {
  std::vector<std::atomic<int>> hits(5000);
  detail::parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
  CHECK(std::all_of(hits.begin(), hits.end(), [](const auto& h) { return h.load() == 1; }));
  CHECK_THROWS_AS(detail::parallel_for(5000, 4,
                                       [](std::size_t i) {
                                         if (i == 3001) throw QuiverError(ErrorKind::Overflow, "boom");
                                       }),
                  QuiverError);
}

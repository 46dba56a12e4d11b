#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "quiver_cones/zoo.hpp"

using namespace qcones;
using qcones::test::dim;
using qcones::test::weight;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const QuiverError& e) {
    return e.kind();
  }
  FAIL("expected a QuiverError");
  return ErrorKind::BadParameter;
}

}  // namespace

TEST_CASE("validate_quiver accepts A2 and D5-hat") {
  CHECK_NOTHROW(validate_quiver(test::a2_desc()));
  auto d5 = zoo::make_d5hat();
  CHECK(d5.quiver.vertex_count() == 6);
  CHECK(d5.quiver.arrow_count() == 5);
  CHECK_NOTHROW(validate_quiver(d5.quiver.describe()));
}

TEST_CASE("validate_quiver rejects cycles, duplicates and dangling endpoints") {
  QuiverDesc cyc{"c", {"x", "y"}, {{"a", "x", "y"}, {"b", "y", "x"}}};
  CHECK(kind_of([&] { validate_quiver(cyc); }) == ErrorKind::OrientedCycle);
  try {
    validate_quiver(cyc);
  } catch (const QuiverError& e) {
    CHECK(std::string(e.what()).find("x -> y -> x") != std::string::npos);
  }

  QuiverDesc loop{"l", {"x"}, {{"a", "x", "x"}}};
  CHECK(kind_of([&] { validate_quiver(loop); }) == ErrorKind::OrientedCycle);

  QuiverDesc dup{"d", {"x", "x"}, {}};
  CHECK(kind_of([&] { validate_quiver(dup); }) == ErrorKind::DuplicateId);
  QuiverDesc dup_arrow{"d", {"x", "y"}, {{"a", "x", "y"}, {"a", "x", "y"}}};
  CHECK(kind_of([&] { validate_quiver(dup_arrow); }) == ErrorKind::DuplicateId);

  QuiverDesc dangling{"d", {"x"}, {{"a", "x", "zz"}}};
  CHECK(kind_of([&] { validate_quiver(dangling); }) == ErrorKind::DanglingEndpoint);
}

TEST_CASE("topological order puts tails first") {
  auto sun = zoo::make_sun(3, 2);
  const auto& q = sun.quiver;
  std::vector<std::size_t> pos(q.vertex_count());
  const auto& topo = q.topological_order();
  REQUIRE(topo.size() == q.vertex_count());
  for (std::size_t i = 0; i < topo.size(); ++i) pos[topo[i]] = i;
  for (const auto& a : q.arrows()) CHECK(pos[a.tail] < pos[a.head]);
}

TEST_CASE("validate_involution") {
  auto d5 = zoo::make_d5hat();
  const Quiver& q = d5.quiver;

  SUBCASE("the involution as printed, (x1 x5)(x3 x4)(x2 x6) with (a1 a4)(a2 a5), is valid") {
    InvolutionDesc printed{"printed",
                           {{"x1", "x5"}, {"x5", "x1"}, {"x3", "x4"}, {"x4", "x3"}, {"x2", "x6"}, {"x6", "x2"}},
                           {{"a1", "a4"}, {"a4", "a1"}, {"a2", "a5"}, {"a5", "a2"}}};
    CHECK_NOTHROW(validate_involution(q, printed));
  }
  SUBCASE("the zoo involution is valid") { CHECK_NOTHROW(validate_involution(q, d5.involutions[0].describe(q))); }

  SUBCASE("identity fails the exchange axiom on A2") {
    Quiver a2(test::a2_desc());
    InvolutionDesc id{"id", {}, {}};
    CHECK(kind_of([&] { validate_involution(a2, id); }) == ErrorKind::AxiomViolation);
    try {
      validate_involution(a2, id);
    } catch (const QuiverError& e) {
      CHECK(std::string(e.what()).find("'a'") != std::string::npos);
    }
  }

  SUBCASE("swap of the Kronecker vertices fixing both arrows is valid") {
    Quiver theta({"theta2", {"s", "t"}, {{"a1", "s", "t"}, {"a2", "s", "t"}}});
    InvolutionDesc swap{"swap", {{"s", "t"}, {"t", "s"}}, {}};
    CHECK_NOTHROW(validate_involution(theta, swap));
  }

  SUBCASE("a map that is not self-inverse is rejected") {
    Quiver three({"three", {"x", "y", "z"}, {}});
    InvolutionDesc cyc{"cyc", {{"x", "y"}, {"y", "z"}, {"z", "x"}}, {}};
    CHECK(kind_of([&] { validate_involution(three, cyc); }) == ErrorKind::NotSelfInverse);
  }
}

TEST_CASE("euler_form and weight_eval examples") {
  Quiver a2(test::a2_desc());
  CHECK(euler_form(a2, dim({1, 0}), dim({0, 1})) == -1);
  CHECK(euler_form(a2, dim({0, 0}), dim({3, 5})) == 0);
  Quiver theta({"theta2", {"s", "t"}, {{"a1", "s", "t"}, {"a2", "s", "t"}}});
  CHECK(euler_form(theta, dim({1, 0}), dim({0, 1})) == -2);

  CHECK(weight_eval(weight({1, -1}), dim({1, 1})) == 0);
  CHECK(weight_eval(weight({0, 0}), dim({4, 7})) == 0);

  auto d5 = zoo::make_d5hat();
  OrbitBasis basis(d5.quiver, d5.involutions[0]);
  std::vector<std::int64_t> c{0, 0, -1};
  CHECK(weight_eval(basis.from_coords(c), dim({2, 3, 4, 4, 3, 2})) == 0);
}

TEST_CASE("euler_form reports overflow") {
  Quiver a2(test::a2_desc());
  DimVector huge({std::int64_t{1} << 40, 0});
  CHECK(kind_of([&] { euler_form(a2, huge, huge); }) == ErrorKind::Overflow);
  CHECK(kind_of([&] { weight_eval(Weight({std::int64_t{1} << 40, 0}), huge); }) == ErrorKind::Overflow);
}

TEST_CASE("tau on dimensions") {
  auto d5 = zoo::make_d5hat();
  const auto& tau = d5.involutions[0];
  CHECK(tau_dim(tau, dim({2, 3, 4, 4, 3, 2})) == dim({2, 3, 4, 4, 3, 2}));
  // tau swaps x1 and x6.
  CHECK(tau_dim(tau, DimVector::unit(6, 5)) == DimVector::unit(6, 0));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    auto a = test::random_dim(rng, 6, 9);
    CHECK(tau_dim(tau, tau_dim(tau, a)) == a);
    auto s = test::random_weight(rng, 6, 9);
    CHECK(tau_weight(tau, tau_weight(tau, s)) == s);
  }
}

TEST_CASE("orbit basis") {
  auto d5 = zoo::make_d5hat();
  const auto& q = d5.quiver;
  OrbitBasis basis(q, d5.involutions[0]);
  CHECK(basis.dimension() == 3);
  CHECK(basis.orbits().size() == 3);
  std::vector<std::string> reps;
  for (auto r : basis.representatives()) reps.push_back(q.vertex_id(r));
  CHECK(reps == std::vector<std::string>{"x4", "x5", "x6"});

  std::vector<std::int64_t> zero{0, 0, 0};
  CHECK(basis.from_coords(zero) == Weight::zero(6));

  SUBCASE("explicit representatives") {
    std::vector<std::string> over{"x1", "x2"};
    OrbitBasis other(q, d5.involutions[0], over);
    std::vector<std::string> got;
    for (auto r : other.representatives()) got.push_back(q.vertex_id(r));
    CHECK(got == std::vector<std::string>{"x1", "x2", "x4"});
    std::vector<std::string> fixed_bad{"x1", "x6"};
    CHECK(kind_of([&] { OrbitBasis(q, d5.involutions[0], fixed_bad); }) == ErrorKind::BadParameter);
  }

  SUBCASE("to_coords rejects non anti-symmetric weights") {
    CHECK(kind_of([&] { (void)basis.to_coords(weight({1, 0, 0, 0, 0, 0})); }) == ErrorKind::NotAntiSymmetric);
  }

  SUBCASE("Sun(3,1) with tau has three swapped orbits") {
    auto sun = zoo::make_sun(3, 1);
    CHECK(OrbitBasis(sun.quiver, sun.involution("tau")).dimension() == 3);
  }

  SUBCASE("fixed vertices are forced to zero") {
    auto line = zoo::make_line(3);
    OrbitBasis b3(line.quiver, line.involutions[0]);
    CHECK(b3.dimension() == 1);
    CHECK(b3.orbits().size() == 2);
    std::vector<std::int64_t> c{5};
    CHECK(b3.from_coords(c) == weight({-5, 0, 5}));
  }
}

TEST_CASE("property: Euler form is bilinear and tau-dual") {
  std::mt19937_64 rng(2024);
  std::vector<QuiverBundle> zoo_quivers;
  zoo_quivers.push_back(zoo::make_d5hat());
  zoo_quivers.push_back(zoo::make_sun(3, 1));
  zoo_quivers.push_back(zoo::make_sun(2, 2));
  zoo_quivers.push_back(zoo::make_line(4));
  zoo_quivers.push_back(zoo::make_kronecker(3));
  for (const auto& b : zoo_quivers) {
    const auto& q = b.quiver;
    const std::size_t n = q.vertex_count();
    for (int i = 0; i < 100; ++i) {
      auto a = test::random_dim(rng, n, 10), a2 = test::random_dim(rng, n, 10), c = test::random_dim(rng, n, 10);
      CHECK(euler_form(q, a + a2, c) == euler_form(q, a, c) + euler_form(q, a2, c));
      CHECK(euler_form(q, c, a + a2) == euler_form(q, c, a) + euler_form(q, c, a2));
      CHECK(euler_form(q, a, c) == weight_eval(right_euler_weight(q, c), a));
      CHECK(euler_form(q, a, c) == weight_eval(left_euler_weight(q, a), c));
      auto s = test::random_weight(rng, n, 10);
      for (const auto& tau : b.involutions) {
        CHECK(euler_form(q, a, c) == euler_form(q, tau_dim(tau, c), tau_dim(tau, a)));
        CHECK(weight_eval(tau_weight(tau, s), a) == weight_eval(s, tau_dim(tau, a)));
      }
    }
  }
}

TEST_CASE("property: anti-symmetric coordinate roundtrip") {
  std::mt19937_64 rng(7);
  for (auto b : {zoo::make_d5hat(), zoo::make_sun(3, 2), zoo::make_line(5), zoo::make_kronecker(2)}) {
    for (const auto& tau : b.involutions) {
      OrbitBasis basis(b.quiver, tau);
      for (int i = 0; i < 100; ++i) {
        auto c = test::random_coords(rng, basis.dimension(), 20);
        Weight s = basis.from_coords(c);
        CHECK(basis.to_coords(s) == c);
        CHECK(tau_weight(tau, s) == -s);
        for (const auto& o : basis.orbits())
          if (!o.swapped()) CHECK(s[o.rep] == 0);
      }
    }
  }
}

#include <doctest.h>

#include "helpers.hpp"
#include "quiver_cones/io.hpp"
#include "quiver_cones/zoo.hpp"

using namespace qcones;

namespace {

QuiverError parse_error(const std::string& text) {
  try {
    io::parse_quiver_file(text);
  } catch (const QuiverError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return QuiverError(ErrorKind::SyntaxError, "");
}

bool same(const QuiverBundle& a, const QuiverBundle& b) {
  if (!(a.quiver == b.quiver) || a.involutions.size() != b.involutions.size()) return false;
  for (std::size_t i = 0; i < a.involutions.size(); ++i)
    if (a.involutions[i].describe(a.quiver) != b.involutions[i].describe(b.quiver)) return false;
  return true;
}

}  // namespace

TEST_CASE("roundtrip of zoo quivers") {
  for (auto b : {zoo::make_d5hat(), zoo::make_sun(3, 1), zoo::make_sun(2, 3), zoo::make_line(4), zoo::make_kronecker(3)}) {
    std::string text = io::serialize_quiver_file(b);
    auto back = io::parse_quiver_file(text);
    CHECK(same(b, back));
    CHECK(io::serialize_quiver_file(back) == text);
  }
  auto sun = io::parse_quiver_file(io::serialize_quiver_file(zoo::make_sun(3, 1)));
  CHECK(sun.involutions.size() == 2);
}

TEST_CASE("pairs in either direction, fixed points and comments") {
  const char* text = R"(# Example quiver
quiver q
vertices x1 x2 x3

arrow a x1 x2   # first
arrow b x2 x3
involution t
vmap x3 x1
vmap x2 x2
amap b a
)";
  auto b = io::parse_quiver_file(text);
  CHECK(b.quiver.name() == "q");
  REQUIRE(b.involutions.size() == 1);
  CHECK(b.involutions[0].vertex_image(0) == 2);
  CHECK(b.involutions[0].vertex_image(1) == 1);
  CHECK(b.involutions[0].arrow_image(0) == 1);
}

TEST_CASE("errors carry line numbers") {
  auto e = parse_error("quiver q\nvertices x1 x3\narrow a1 x1 zz\n");
  CHECK(e.kind() == ErrorKind::DanglingEndpoint);
  CHECK(e.line() == 3);

  e = parse_error("quiver q\nvertices x y\nedge a x y\n");
  CHECK(e.kind() == ErrorKind::SyntaxError);
  CHECK(e.line() == 3);

  e = parse_error("quiver q\nvertices x y\narrow a x y\narrow a y x\n");
  CHECK(e.kind() == ErrorKind::DuplicateId);
  CHECK(e.line() == 4);

  e = parse_error("quiver q\nvertices x y\narrow a x y\narrow b y x\n");
  CHECK(e.kind() == ErrorKind::OrientedCycle);

  e = parse_error("quiver q\nvertices x y\narrow a x y\ninvolution t\nvmap x q\n");
  CHECK(e.kind() == ErrorKind::BadParameter);
  CHECK(e.line() == 5);

  e = parse_error("quiver q\nvertices x y\narrow a x y\ninvolution t\n");
  CHECK(e.kind() == ErrorKind::AxiomViolation);
  CHECK(e.line() == 4);
  CHECK(std::string(e.what()).starts_with("line 4: AxiomViolation:"));

  e = parse_error("quiver q\nvertices x y z\ninvolution t\nvmap x y\nvmap x z\n");
  CHECK(e.kind() == ErrorKind::NotSelfInverse);
}

TEST_CASE("vector literals") {
  auto d5 = zoo::make_d5hat();
  const auto& q = d5.quiver;
  CHECK(io::parse_dim_literal(q, "x1=2,x2=3,x3=4,x4=4,x5=3,x6=2") == test::dim({2, 3, 4, 4, 3, 2}));
  CHECK(io::parse_dim_literal(q, "x4=1") == DimVector::unit(6, 3));
  CHECK(io::parse_dim_literal(q, "") == DimVector::zero(6));
  CHECK(io::parse_weight_literal(q, "x4=1,x5=0,x6=-1,x3=-1,x1=0,x2=1") == test::weight({0, 1, -1, 1, 0, -1}));
  CHECK_THROWS_AS(io::parse_dim_literal(q, "x1=-1"), QuiverError);
  CHECK_THROWS_AS(io::parse_dim_literal(q, "x9=1"), QuiverError);
  CHECK_THROWS_AS(io::parse_dim_literal(q, "x1"), QuiverError);
  CHECK_THROWS_AS(io::parse_weight_literal(q, "x1=abc"), QuiverError);

  CHECK(io::parse_int_list("1,0,-1") == std::vector<std::int64_t>{1, 0, -1});
  CHECK(io::parse_int_list("").empty());
  CHECK(io::parse_id_list("x4,x5,x6") == std::vector<std::string>{"x4", "x5", "x6"});
  std::vector<std::int64_t> v{2, 3, 4};
  CHECK(io::format_values(v) == "2,3,4");
  std::vector<std::int64_t> w{1, 0, -1, 0, 0, 0};
  CHECK(io::format_literal(q, w) == "x1=1,x2=0,x3=-1,x4=0,x5=0,x6=0");
}

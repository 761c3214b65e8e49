#include "doctest.h"

#include "ecdetect/deflation.hpp"
#include "ecdetect/errors.hpp"
#include "ecdetect/random.hpp"
#include "support.hpp"

using namespace ecdetect;
using testing::polys;

TEST_CASE("deflation generators") {
  auto r = make_ring({"x"});
  const auto s = deflate(polys(r, {"x^2"}), 1);
  REQUIRE(s.generators.size() == 2);
  CHECK(s.ring->names() == std::vector<std::string>{"x", "a_0", "a_1"});
  CHECK(s.generators[1] == parse_polynomial("x^2*a_0 + 2*x*a_1", s.ring));

  const auto lin = deflate(polys(r, {"x"}), 1);
  CHECK(lin.generators[1] == parse_polynomial("x*a_0 + a_1", lin.ring));
  CHECK_THROWS_AS(deflate(polys(r, {"x"}), 0), PreconditionError);
}

TEST_CASE("deflation counts") {
  auto r = make_ring({"x", "y"});
  const auto f = polys(r, {"x*(y^2-x^3)", "y*(y^2-x^3)"});
  const auto s1 = deflate(f, 1);
  CHECK(s1.generators.size() == 4);
  CHECK(s1.na() == 3);
  CHECK(s1.a_exponents == std::vector<Exponent>{{0, 0}, {0, 1}, {1, 0}});
  const auto s3 = deflate(f, 3);
  CHECK(s3.na() == 10);
  CHECK(s3.generators.size() == 2 + 2 * 6);
}

TEST_CASE("fiber dimension equals the local dual dimension") {
  auto r1 = make_ring({"x"});
  CHECK(fiber_dual_dim(polys(r1, {"x^2"}), Point::origin(1), 1) == 2);
  auto r = make_ring({"x", "y"});
  CHECK(fiber_dual_dim(polys(r, {"x", "y"}), Point::origin(2), 3) == 1);
  const auto f = polys(r, {"x*(y^2-x^3)", "y*(y^2-x^3)"});
  CHECK(fiber_dual_dim(f, Point::origin(2), 4) == 10);
  for (int d = 1; d <= 3; ++d)
    CHECK(fiber_dual_dim(f, Point{{1.0, 1.0}, 0.0}, d) ==
          truncated_dual(f, Point{{1.0, 1.0}, 0.0}, d).dim());
}

TEST_CASE("fiber dimension does not depend on the generators") {
  auto r = make_ring({"x", "y"});
  const auto f = polys(r, {"x*(y^2-x^3)", "y*(y^2-x^3)"});
  auto g = f;
  g.push_back(f[0] + f[1]);
  Rng rng(7);
  for (int i = 0; i < 5; ++i) {
    const Complex t = random_unit_disc(rng);
    const Point p{{t * t, t * t * t}, 0.0};
    for (int d = 1; d <= 3; ++d) CHECK(fiber_dual_dim(f, p, d) == fiber_dual_dim(g, p, d));
  }
}

TEST_CASE("fiber off the variety") {
  auto r = make_ring({"x"});
  CHECK_THROWS_AS(fiber_dual_dim(polys(r, {"x - 1"}), Point::origin(1), 1), NotOnVarietyError);
}

#include "doctest.h"

#include "ecdetect/errors.hpp"
#include "ecdetect/staircase.hpp"
#include "exact_macaulay.hpp"
#include "support.hpp"

using namespace ecdetect;
using testing::names;
using testing::polys;

TEST_CASE("hilbert function") {
  auto r = make_ring({"x", "y"});
  const auto cusp = polys(r, {"x*(y^2-x^3)", "y*(y^2-x^3)"});
  CHECK(hilbert_values(cusp, Point::origin(2), 4) == std::vector<long long>{1, 2, 3, 2, 2});
  CHECK(hilbert_function(polys(r, {"x", "y"}), Point::origin(2), 1) == 0);
  CHECK(hilbert_values(polys(r, {"x^2 + y"}), Point::origin(2), 3) ==
        std::vector<long long>{1, 1, 1, 1});
}

TEST_CASE("g-corners") {
  auto r = make_ring({"x", "y"});
  const Point o = Point::origin(2);
  CHECK(names(r, gcorners(polys(r, {"x^3", "x^2*y^2", "y^4"}), o).gcorners) ==
        std::vector<std::string>{"x^3", "y^4", "x^2*y^2"});
  CHECK(names(r, gcorners(polys(r, {"x", "y"}), o).gcorners) ==
        std::vector<std::string>{"y", "x"});
  CHECK(names(r, gcorners(polys(r, {"x^2 + y"}), o).gcorners) == std::vector<std::string>{"y"});
}

TEST_CASE("cusp g-corners match the exact oracle") {
  const std::vector<std::string> vars{"x", "y"};
  const std::vector<std::string> gens{"x*y^2 - x^4", "y^3 - x^3*y"};
  auto r = make_ring(vars);
  std::vector<exact::Poly> ef;
  for (const auto& g : gens) ef.push_back(exact::parse(g, vars));
  auto expected = exact::corners(ef, {0, 0}, 9);
  std::vector<Polynomial> f;
  for (const auto& g : gens) f.push_back(parse_polynomial(g, r));
  auto got = gcorners(f, Point::origin(2)).gcorners;
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  CHECK(got == expected);
}

TEST_CASE("g-corners at a non-origin point") {
  auto r = make_ring({"x", "y"});
  // (x-1)^2, y^2 shifted to (1, 0)
  const auto st = gcorners(polys(r, {"x^2 - 2*x + 1", "y^2"}), Point{{1.0, 0.0}, 0.0});
  CHECK(names(r, st.gcorners) == std::vector<std::string>{"y^2", "x^2"});
}

TEST_CASE("incomplete staircase reports partial corners") {
  auto r = make_ring({"x", "y"});
  NumericalConfig cfg;
  cfg.max_degree = 3;
  try {
    (void)gcorners(polys(r, {"x^5", "y^6"}), Point::origin(2), cfg);
    FAIL("expected IncompleteStaircaseError");
  } catch (const IncompleteStaircaseError& e) {
    CHECK(e.partial_corners().empty());
  }
}

TEST_CASE("s-corners") {
  const auto stair = monomial_staircase(2, {{3, 0}, {2, 2}, {0, 4}});
  auto s = scorners(stair, 10);
  std::sort(s.begin(), s.end());
  CHECK(s == std::vector<Exponent>{{1, 3}, {2, 1}});
  CHECK(scorners(monomial_staircase(2, {{1, 0}, {0, 1}}), 5) == std::vector<Exponent>{{0, 0}});
  CHECK(scorners(monomial_staircase(1, {{2}}), 5) == std::vector<Exponent>{{1}});
  // Bound cuts off higher socle monomials.
  CHECK(scorners(stair, 3).size() == 1);
}

TEST_CASE("s-corners match the exact socle on the monomial staircase") {
  const std::vector<std::string> vars{"x", "y"};
  std::vector<exact::Poly> ef;
  for (const char* g : {"x^3", "x^2*y^2", "y^4"}) ef.push_back(exact::parse(g, vars));
  auto expected = exact::socle_monomials(ef, {0, 0}, 6);
  auto r = make_ring(vars);
  auto got = scorners(gcorners(polys(r, {"x^3", "x^2*y^2", "y^4"}), Point::origin(2)), 6);
  std::sort(expected.begin(), expected.end());
  std::sort(got.begin(), got.end());
  CHECK(got == expected);
}

TEST_CASE("monomial staircase keeps minimal generators") {
  const auto st = monomial_staircase(2, {{2, 1}, {1, 0}, {0, 3}, {1, 2}});
  CHECK(st.gcorners.size() == 2);
  CHECK(st.in_ideal({3, 3}));
  CHECK(st.is_standard({0, 2}));
  CHECK(st.dimension() == 0);
  CHECK(monomial_staircase(3, {{1, 0, 0}}).dimension() == 2);
}

TEST_CASE("staircase statistics") {
  auto r = make_ring({"x", "y"});
  const Point o = Point::origin(2);
  const auto stair = staircase_stats(polys(r, {"x^3", "x^2*y^2", "y^4"}), o);
  CHECK(stair.regularity == 5);
  CHECK(stair.multiplicity == 10);
  CHECK(stair.dimension == 0);
  CHECK(stair.values == std::vector<long long>{1, 2, 3, 3, 1, 0});

  const auto maximal = staircase_stats(polys(r, {"x", "y"}), o);
  CHECK(maximal.regularity == 1);
  CHECK(maximal.multiplicity == 1);

  const auto curve = staircase_stats(polys(r, {"x^2 + y"}), o);
  CHECK(curve.dimension == 1);
  CHECK(curve.multiplicity == 1);
  for (int k = 0; k < 8; ++k) CHECK(curve.hilbert_polynomial(k) == 1);

  const auto cusp = staircase_stats(polys(r, {"x*(y^2-x^3)", "y*(y^2-x^3)"}), o);
  CHECK(cusp.dimension == 1);
  CHECK(cusp.multiplicity == 2);
  CHECK(cusp.hilbert_polynomial(10) == 2);
}

TEST_CASE("count_standard agrees with the hilbert function") {
  auto r = make_ring({"x", "y", "z"});
  const auto f = polys(r, {"x^2 - y*z", "y^2 - x*z"});
  const auto st = gcorners(f, Point::origin(3));
  const auto h = hilbert_values(f, Point::origin(3), 6);
  for (int k = 0; k <= 6; ++k) CHECK(count_standard(st, k) == h[k]);
}

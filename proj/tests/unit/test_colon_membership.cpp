#include "doctest.h"

#include <fstream>

#include "ecdetect/colon.hpp"
#include "ecdetect/errors.hpp"
#include "ecdetect/staircase.hpp"
#include "exact_macaulay.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace ecdetect;
using testing::polys;

namespace {

DualFunctional monomial_functional(const Ring& r, const Exponent& e) {
  DualFunctional q(r, std::vector<Complex>(r->nvars(), 0.0));
  q.add_term(e, 1.0);
  return q;
}

}  // namespace

TEST_CASE("colon dual shifts by the multiplier") {
  auto r = make_ring({"x", "y"});
  const DualBasis b{r, {0.0, 0.0}, 2, true,
                    {monomial_functional(r, {0, 0}), monomial_functional(r, {1, 0}),
                     monomial_functional(r, {2, 0})}};
  auto terms = colon_dual(b, parse_polynomial("x", r)).initial_terms();
  std::sort(terms.begin(), terms.end());
  CHECK(terms == std::vector<Exponent>{{0, 0}, {1, 0}});

  auto same = colon_dual(b, parse_polynomial("1", r)).initial_terms();
  std::sort(same.begin(), same.end());
  CHECK(same == std::vector<Exponent>{{0, 0}, {1, 0}, {2, 0}});
}

TEST_CASE("homogenized colon of the cusp system by the cusp") {
  auto r = make_ring({"x", "y"});
  auto rh = homogenized_ring(r);
  std::vector<Polynomial> fh;
  for (const auto& f : polys(r, {"x*(y^2-x^3)", "y*(y^2-x^3)"})) fh.push_back(homogenize(f, rh));
  NumericalConfig cfg;
  GradedDualEngine engine(rh, fh, cfg);
  HomogeneousColon colon(engine, homogenize(parse_polynomial("y^2 - x^3", r), rh), cfg);
  CHECK(colon.shift() == 3);
  // Degree one of the colon: only h survives, x h^0 and y h^0 are corners.
  std::vector<std::string> inside;
  for (const auto& e : colon.initial_ideal_part(1)) inside.push_back(format_monomial(e, *rh));
  std::sort(inside.begin(), inside.end());
  CHECK(inside == std::vector<std::string>{"x", "y"});
  CHECK(colon.initial_terms(1).size() == 1);
}

TEST_CASE("membership basics") {
  auto r = make_ring({"x", "y"});
  CHECK(ideal_membership(polys(r, {"x"}), parse_polynomial("x", r)));
  CHECK_FALSE(ideal_membership(polys(r, {"x^2"}), parse_polynomial("x", r)));
  const auto cusp = polys(r, {"x*(y^2-x^3)", "y*(y^2-x^3)"});
  CHECK_FALSE(ideal_membership(cusp, parse_polynomial("y^2 - x^3", r)));
  CHECK(ideal_membership(cusp, parse_polynomial("x*y^2 - x^4 + 3*y^3 - 3*x^3*y", r)));
  CHECK(ideal_membership(cusp, parse_polynomial("0", r)));
  CHECK(ideal_membership(polys(r, {"x + x^2"}), parse_polynomial("x", r)));  // a unit multiple
}

TEST_CASE("membership at a translated point") {
  auto r = make_ring({"x", "y"});
  const auto f = polys(r, {"(x-1)^2", "y"});
  const Point p{{1.0, 0.0}, 0.0};
  CHECK(ideal_membership(f, parse_polynomial("(x-1)^2 + y*x", r), p));
  CHECK_FALSE(ideal_membership(f, parse_polynomial("x - 1", r), p));
}

TEST_CASE("membership agrees with exact truncated membership") {
  // For <x^3, x^2 y^2, y^4> every monomial of degree 6 is inside, so the
  // exact degree-6 test decides local membership.
  const std::vector<std::string> vars{"x", "y"};
  auto r = make_ring(vars);
  std::vector<exact::Poly> ef;
  for (const char* g : {"x^3", "x^2*y^2", "y^4"}) ef.push_back(exact::parse(g, vars));
  const auto f = polys(r, {"x^3", "x^2*y^2", "y^4"});
  for (const char* g : {"x^2*y + y^4", "x*y^3", "x^2*y^2 - 2*x^3*y", "x*y^3 + x^2*y", "y^5"}) {
    CAPTURE(g);
    CHECK(ideal_membership(f, parse_polynomial(g, r)) ==
          exact::truncated_member(ef, exact::parse(g, vars), {0, 0}, 6));
  }
}

TEST_CASE("membership golden data") {
  std::ifstream in(ECDETECT_TEST_DATA "/membership_golden.json");
  REQUIRE(in);
  const auto doc = nlohmann::json::parse(in);
  int members = 0, non_members = 0;
  for (const auto& sys : doc) {
    auto r = make_ring(sys["variables"].get<std::vector<std::string>>());
    std::vector<Polynomial> f;
    for (const auto& g : sys["generators"]) f.push_back(parse_polynomial(g.get<std::string>(), r));
    for (const auto& g : sys["members"]) {
      CAPTURE(g.get<std::string>());
      CHECK(ideal_membership(f, parse_polynomial(g.get<std::string>(), r)));
      ++members;
    }
    for (const auto& g : sys["non_members"]) {
      CAPTURE(g.get<std::string>());
      CHECK_FALSE(ideal_membership(f, parse_polynomial(g.get<std::string>(), r)));
      ++non_members;
    }
  }
  CHECK(members == 50);
  CHECK(non_members == 20);
}

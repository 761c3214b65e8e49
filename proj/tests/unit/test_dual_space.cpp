#include "doctest.h"

#include "ecdetect/dual_space.hpp"
#include "ecdetect/errors.hpp"
#include "exact_macaulay.hpp"
#include "support.hpp"

using namespace ecdetect;
using testing::polys;

namespace {

DualFunctional functional(const Ring& r, std::initializer_list<std::pair<Exponent, Complex>> terms) {
  DualFunctional q(r, std::vector<Complex>(r->nvars(), 0.0));
  for (const auto& [e, c] : terms) q.add_term(e, c);
  return q;
}

bool close(const DualFunctional& a, const DualFunctional& b, double tol = 1e-8) {
  DualFunctional d = a;
  DualFunctional nb = b;
  nb *= -1.0;
  d += nb;
  for (const auto& [e, c] : d.terms())
    if (std::abs(c) > tol) return false;
  return true;
}

}  // namespace

TEST_CASE("apply uses normalized partials") {
  auto r = make_ring({"x", "y"});
  const auto dx = functional(r, {{{1, 0}, 1.0}});
  const auto dxx = functional(r, {{{2, 0}, 1.0}});
  const auto q = functional(r, {{{2, 0}, 1.0}, {{0, 1}, -1.0}});
  CHECK(std::abs(apply(dx, parse_polynomial("x^2", r))) < 1e-14);
  CHECK(apply(dxx, parse_polynomial("x^2", r)) == Complex(1.0));
  CHECK(std::abs(apply(q, parse_polynomial("x^2 + y", r))) < 1e-14);

  DualFunctional at(r, {2.0, 0.0});
  at.add_term({1, 0}, 1.0);
  CHECK(apply(at, parse_polynomial("x^3", r)) == Complex(12.0));
}

TEST_CASE("differentiate shifts exponents down") {
  auto r = make_ring({"x", "y"});
  const auto dx = functional(r, {{{1, 0}, 1.0}});
  CHECK(close(differentiate(functional(r, {{{2, 0}, 1.0}}), 0), dx));
  CHECK(differentiate(functional(r, {{{0, 1}, 1.0}}), 0).is_zero());
  CHECK(close(differentiate(functional(r, {{{2, 0}, 1.0}, {{0, 1}, -1.0}}), 0), dx));
  const auto q = functional(r, {{{2, 1}, 2.0}, {{1, 0}, 1.0}});
  CHECK(close(multiply(parse_polynomial("x*y", r), q), functional(r, {{{1, 0}, 2.0}})));
}

TEST_CASE("truncated dual of the maximal ideal") {
  auto r = make_ring({"x", "y"});
  const auto f = polys(r, {"x", "y"});
  for (int k : {0, 1, 3}) {
    const auto b = truncated_dual(f, Point::origin(2), k);
    REQUIRE(b.dim() == 1);
    CHECK(b.initial_terms() == std::vector<Exponent>{{0, 0}});
  }
}

TEST_CASE("cusp dual dimensions") {
  auto r = make_ring({"x", "y"});
  const auto f = polys(r, {"x*(y^2-x^3)", "y*(y^2-x^3)"});
  std::vector<std::size_t> dims;
  for (int k = 0; k <= 4; ++k) dims.push_back(truncated_dual(f, Point::origin(2), k).dim());
  CHECK(dims == std::vector<std::size_t>{1, 3, 6, 8, 10});
}

TEST_CASE("reduced dual basis of a smooth curve point") {
  auto r = make_ring({"x", "y"});
  const auto b = reduce_basis(truncated_dual(polys(r, {"x^2 + y"}), Point::origin(2), 2));
  REQUIRE(b.dim() == 3);
  CHECK(b.reduced);
  // Most significant in the dual order first.
  CHECK(close(b.functionals[0], functional(r, {{{2, 0}, 1.0}, {{0, 1}, -1.0}})));
  CHECK(close(b.functionals[1], functional(r, {{{1, 0}, 1.0}})));
  CHECK(close(b.functionals[2], functional(r, {{{0, 0}, 1.0}})));
}

TEST_CASE("reduce_basis") {
  auto r = make_ring({"x", "y"});
  DualBasis raw{r, {0.0, 0.0}, 1, false,
                {functional(r, {{{0, 0}, 1.0}}), functional(r, {{{0, 0}, 1.0}, {{1, 0}, 1.0}})}};
  const auto b = reduce_basis(raw);
  REQUIRE(b.dim() == 2);
  CHECK(close(b.functionals[0], functional(r, {{{1, 0}, 1.0}})));
  CHECK(close(b.functionals[1], functional(r, {{{0, 0}, 1.0}})));
  const auto again = reduce_basis(b);
  CHECK(again.initial_terms() == b.initial_terms());

  raw.functionals.push_back(functional(r, {{{1, 0}, 2.0}}));
  CHECK_THROWS_AS(reduce_basis(raw), PreconditionError);
}

TEST_CASE("cusp initial terms at order two") {
  auto r = make_ring({"x", "y"});
  auto f = polys(r, {"x*(y^2-x^3)", "y*(y^2-x^3)"});
  auto terms = reduce_basis(truncated_dual(f, Point::origin(2), 2)).initial_terms();
  std::sort(terms.begin(), terms.end());
  CHECK(terms == std::vector<Exponent>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}});
}

TEST_CASE("dual basis annihilates the ideal") {
  auto r = make_ring({"x", "y", "z"});
  const auto f = polys(r, {"x*y", "x*z", "y*z"});
  const auto b = truncated_dual(f, Point::origin(3), 3);
  for (const auto& q : b.functionals)
    for (const auto& g : f)
      for (const char* m : {"1", "x", "y", "z", "x*y"})
        CHECK(std::abs(apply(q, g * parse_polynomial(m, r))) < 1e-10);
}

TEST_CASE("base point off the variety") {
  auto r = make_ring({"x", "y"});
  CHECK_THROWS_AS(truncated_dual(polys(r, {"x - 1"}), Point::origin(2), 1), NotOnVarietyError);
}

TEST_CASE("dimensions agree with exact Macaulay matrices") {
  struct Case {
    std::vector<std::string> vars;
    std::vector<std::string> gens;
    std::vector<exact::Q> point;
    int k;
  };
  const std::vector<Case> cases{
      {{"x", "y"}, {"x*y^2 - x^4", "y^3 - x^3*y"}, {0, 0}, 5},
      {{"x", "y"}, {"x^3", "x^2*y^2", "y^4"}, {0, 0}, 6},
      {{"x", "y", "z"}, {"x^2 - y*z", "y^2 - x*z"}, {0, 0, 0}, 4},
      {{"x", "y", "z"}, {"x^3 + y", "y^3"}, {0, 0, 2}, 4},
      {{"x", "y"}, {"x^2 + y^2 - 2", "x*y - 1"}, {1, 1}, 4},
  };
  for (const auto& c : cases) {
    auto r = make_ring(c.vars);
    std::vector<Polynomial> f;
    std::vector<exact::Poly> ef;
    for (const auto& g : c.gens) {
      f.push_back(parse_polynomial(g, r));
      ef.push_back(exact::parse(g, c.vars));
    }
    Point y;
    for (const auto& q : c.point) y.coords.push_back(static_cast<double>(q));
    const auto expected = exact::dual_dims(ef, c.point, c.k);
    for (int k = 0; k <= c.k; ++k) {
      CAPTURE(c.gens[0]);
      CAPTURE(k);
      CHECK(static_cast<long long>(truncated_dual(f, y, k).dim()) == expected[k]);
    }
  }
}

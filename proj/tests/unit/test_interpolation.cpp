#include "doctest.h"

#include "ecdetect/errors.hpp"
#include "ecdetect/interpolation.hpp"
#include "ecdetect/staircase.hpp"
#include "support.hpp"

using namespace ecdetect;
using testing::polys;

namespace {

OracleHandle cusp_oracle(std::uint64_t seed) {
  auto r = make_ring({"x", "y"});
  return OracleHandle(polys(r, {"x*(y^2-x^3)", "y*(y^2-x^3)"}),
                      {ComponentSpec::from_parametrization("cusp", 1, {"t^2", "t^3"}, 2)}, seed);
}

}  // namespace

TEST_CASE("interpolating the cusp") {
  auto h = cusp_oracle(42);
  for (int e : {1, 2}) CHECK(interpolate_isolated(h, "cusp", e).dim() == 0);
  const auto q3 = interpolate_isolated(h, "cusp", 3);
  REQUIRE(q3.dim() == 1);
  const auto& f = q3.basis[0];
  const Complex s = f.coefficient({0, 2});
  CHECK((f - parse_polynomial("y^2 - x^3", f.ring()) * s).coefficient_norm() < 1e-8);

  // Vanishes on fresh samples of the component.
  for (int i = 0; i < 20; ++i) {
    const Point p = h.sample_anywhere(0);
    CHECK(std::abs(f.evaluate(p.coords)) < 1e-8);
  }
}

TEST_CASE("interpolating a line in three-space") {
  auto r = make_ring({"x", "y", "z"});
  OracleHandle h(polys(r, {"x", "y"}),
                 {ComponentSpec::from_parametrization("line", 1, {"0", "0", "t"}, 3)}, 1);
  const auto q = interpolate_isolated(h, "line", 1);
  REQUIRE(q.dim() == 2);
  auto lead = q.initial_terms();
  std::sort(lead.begin(), lead.end());
  CHECK(lead == std::vector<Exponent>{{0, 1, 0}, {1, 0, 0}});
}

TEST_CASE("dual dimensions of truncated ideals") {
  auto h = cusp_oracle(42);
  const Point o = Point::origin(2);
  CHECK(dual_dims_of_truncated_ideal(interpolate_isolated(h, "cusp", 1), o, 4) ==
        std::vector<std::size_t>{1, 3, 6, 10, 15});
  CHECK(dual_dims_of_truncated_ideal(interpolate_isolated(h, "cusp", 3), o, 4) ==
        std::vector<std::size_t>{1, 3, 5, 7, 9});

  auto r = make_ring({"x", "y"});
  TruncationSpace maximal{r, 1, 0, false, polys(r, {"x", "y"})};
  CHECK(dual_dims_of_truncated_ideal(maximal, o, 3) == std::vector<std::size_t>{1, 1, 1, 1});
}

TEST_CASE("multiplicity is preserved by adding the interpolant") {
  auto h = cusp_oracle(8);
  const auto q = interpolate_isolated(h, "cusp", 3);
  REQUIRE(q.dim() == 1);
  const auto& gens = h.generators();
  const Point p = h.sample_anywhere(0);
  Rng rng(4);
  const auto plane = AffinePlane::random_through(p.coords, 1, rng);
  Polynomial l = Polynomial::constant(gens[0].ring(), -plane.b(0));
  for (std::size_t i = 0; i < 2; ++i)
    l += Polynomial::variable(gens[0].ring(), i) * plane.a(0, static_cast<Eigen::Index>(i));
  std::vector<Polynomial> base(gens.begin(), gens.end());
  base.push_back(l);
  auto with_f = base;
  with_f.push_back(q.basis[0]);
  CHECK(staircase_stats(base, p).multiplicity == staircase_stats(with_f, p).multiplicity);
}

TEST_CASE("unknown component and sample budget") {
  auto h = cusp_oracle(1);
  CHECK_THROWS_AS(interpolate_isolated(h, "nope", 2), PreconditionError);
  NumericalConfig cfg;
  cfg.max_samples = 1;
  CHECK_THROWS_AS(interpolate_isolated(h, "cusp", 3, cfg), InconclusiveError);
}

TEST_CASE("the cusp ideal is seen at order three") {
  auto r = make_ring({"x", "y"});
  const auto f = polys(r, {"x*(y^2-x^3)", "y*(y^2-x^3)"});
  auto h = cusp_oracle(42);
  const auto zero = dual_dims_of_truncated_ideal(interpolate_isolated(h, "cusp", 2), Point::origin(2), 3);
  CHECK(truncated_dual(f, Point::origin(2), 2).dim() == zero[2]);
  CHECK(truncated_dual(f, Point::origin(2), 3).dim() < zero[3]);
}

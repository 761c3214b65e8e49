#include "doctest.h"

#include "exact_macaulay.hpp"

using exact::Exp;
using exact::Q;

namespace {

std::vector<exact::Poly> parse_all(std::initializer_list<const char*> texts,
                                   const std::vector<std::string>& vars) {
  std::vector<exact::Poly> out;
  for (const char* t : texts) out.push_back(exact::parse(t, vars));
  return out;
}

}  // namespace

TEST_CASE("reference parser") {
  const std::vector<std::string> v{"x", "y"};
  const auto p = exact::parse("3/2*x*y^2 - y + 4", v);
  CHECK(p.terms.size() == 3);
  CHECK(p.terms.at(Exp{1, 2}) == Q(3) / 2);
  CHECK(p.terms.at(Exp{0, 1}) == -1);
  CHECK(exact::parse("x - x", v).terms.empty());
  CHECK_THROWS(exact::parse("x + w", v));
}

TEST_CASE("reference translation") {
  const std::vector<std::string> v{"x"};
  const auto p = exact::translate(exact::parse("x^2", v), {Q(1)});
  CHECK(p.terms.at(Exp{2}) == 1);
  CHECK(p.terms.at(Exp{1}) == 2);
  CHECK(p.terms.at(Exp{0}) == 1);
}

TEST_CASE("reference local order") {
  CHECK(exact::local_greater({0, 0}, {1, 0}));
  CHECK(exact::local_greater({0, 1}, {2, 0}));
  CHECK(exact::local_greater({0, 2}, {1, 1}));
  const auto m = exact::monomials_upto(2, 2);
  CHECK(m.front() == Exp{0, 0});
  CHECK(m.back() == Exp{2, 0});
}

TEST_CASE("reference dual dimensions") {
  const std::vector<std::string> v{"x", "y"};
  CHECK(exact::dual_dims(parse_all({"x*y^2 - x^4", "y^3 - x^3*y"}, v), {0, 0}, 4) ==
        std::vector<long long>{1, 3, 6, 8, 10});
  CHECK(exact::dual_dims(parse_all({"x", "y"}, v), {0, 0}, 3) ==
        std::vector<long long>{1, 1, 1, 1});
  CHECK(exact::dual_dims(parse_all({"x^2 + y"}, v), {0, 0}, 3) ==
        std::vector<long long>{1, 2, 3, 4});
  // Off the variety nothing survives.
  CHECK(exact::dual_dims(parse_all({"x - 1"}, v), {0, 0}, 2) == std::vector<long long>{0, 0, 0});
}

TEST_CASE("reference corners and socle") {
  const std::vector<std::string> v{"x", "y"};
  const auto stair = parse_all({"x^3", "x^2*y^2", "y^4"}, v);
  auto c = exact::corners(stair, {0, 0}, 8);
  std::sort(c.begin(), c.end());
  CHECK(c == std::vector<Exp>{{0, 4}, {2, 2}, {3, 0}});
  auto s = exact::socle_monomials(stair, {0, 0}, 6);
  std::sort(s.begin(), s.end());
  CHECK(s == std::vector<Exp>{{1, 3}, {2, 1}});
  auto in = exact::corners(parse_all({"x^2 + y"}, v), {0, 0}, 4);
  CHECK(in == std::vector<Exp>{{0, 1}});
}

TEST_CASE("reference truncated membership") {
  const std::vector<std::string> v{"x", "y"};
  const auto stair = parse_all({"x^3", "x^2*y^2", "y^4"}, v);
  CHECK(exact::truncated_member(stair, exact::parse("x^3 + 2*y^4", v), {0, 0}, 6));
  CHECK_FALSE(exact::truncated_member(stair, exact::parse("x^2*y", v), {0, 0}, 6));
}

#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ecdetect/polynomial.hpp"

namespace testing {

using namespace ecdetect;

inline std::vector<Polynomial> polys(const Ring& ring, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(parse_polynomial(t, ring));
  return out;
}

inline Exponent mono(const Ring& ring, const std::string& text) {
  return initial_term(parse_polynomial(text, ring));
}

inline std::vector<std::string> names(const Ring& ring, const std::vector<Exponent>& es) {
  std::vector<std::string> out;
  for (const auto& e : es) out.push_back(format_monomial(e, *ring));
  return out;
}

}  // namespace testing

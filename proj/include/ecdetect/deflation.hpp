#pragma once

#include <span>
#include <vector>

#include "ecdetect/dual_space.hpp"

namespace ecdetect {

/// The order-d deflation ideal in C[x, a]: F together with q(x^alpha f_i)
/// for |alpha| <= d-1, where q = sum_{|beta| <= d} a_beta d^beta.
struct DeflationSystem {
  Ring ring;  ///< x-variables first, then one a-variable per beta
  std::size_t nx = 0;
  int order = 0;
  /// beta for each a-variable, in ring order (degree, then lexicographic).
  std::vector<Exponent> a_exponents;
  std::vector<Polynomial> generators;

  std::size_t na() const { return a_exponents.size(); }
};

DeflationSystem deflate(std::span<const Polynomial> generators, int d);

/// Dimension of the fiber of the deflated variety over x, i.e. the nullity of
/// the linear system in a obtained by fixing x. Equals dim D_x^d[F].
std::size_t fiber_dual_dim(std::span<const Polynomial> generators, const Point& x, int d,
                           const NumericalConfig& cfg = {});

}  // namespace ecdetect

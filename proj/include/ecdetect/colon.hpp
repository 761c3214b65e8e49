#pragma once

#include <span>
#include <vector>

#include "ecdetect/dual_engine.hpp"

namespace ecdetect {

/// Matrix of q -> g . q on coordinates: (g . q)_a = sum_c g_c q_{a+c}, with
/// q over `from` and the result over `to`. Coordinates missing from `from`
/// count as zero.
Matrix multiplication_matrix(const Polynomial& g, const MonomialBasis& from,
                             const MonomialBasis& to);

/// Span of {g . q : q in B}, reduced. For a truncation D_0^d[I] this is a
/// subspace of D_0^{d-e}[I : g] (e the lowest degree of g), and all of it
/// when I and g are homogeneous.
DualBasis colon_dual(const DualBasis& basis, const Polynomial& g, const NumericalConfig& cfg = {});

/// Degree pieces of D_0[<F^h> : g^h] = g^h . D_0[<F^h>] for homogeneous F^h
/// and g^h: the degree-d piece is g^h applied to the degree-(d+e) piece.
class HomogeneousColon {
 public:
  /// `engine` must outlive this object.
  HomogeneousColon(GradedDualEngine& engine, const Polynomial& gh, const NumericalConfig& cfg);

  int shift() const { return e_; }
  /// Orthonormal columns over engine.piece_monomials(d).
  const Matrix& piece(int d);
  /// Dual-order initial terms of the degree-d piece (standard monomials of
  /// the colon in degree d).
  const std::vector<Exponent>& initial_terms(int d);
  /// Degree-d monomials of R[h] lying in in(<F^h> : g^h).
  std::vector<Exponent> initial_ideal_part(int d);

 private:
  void extend_to(int d);

  GradedDualEngine& engine_;
  Polynomial gh_;
  int e_;
  NumericalConfig cfg_;
  std::vector<Matrix> pieces_;
  std::vector<std::vector<Exponent>> initial_;
};

/// Local membership g in <F> R_y by simultaneous Hilbert-function and
/// homogenized-colon tests. Throws InconclusiveError when cfg.max_degree is
/// exhausted first.
bool ideal_membership(std::span<const Polynomial> generators, const Polynomial& g,
                      const NumericalConfig& cfg = {});
bool ideal_membership(std::span<const Polynomial> generators, const Polynomial& g, const Point& y,
                      const NumericalConfig& cfg = {});

}  // namespace ecdetect

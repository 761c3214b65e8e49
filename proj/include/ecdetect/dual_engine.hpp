#pragma once

#include <vector>

#include "ecdetect/dual_space.hpp"

namespace ecdetect {

/// Incremental completion of D_0^k[<F>] for generators already translated so
/// that the base point is the origin. Each order is stored as an orthonormal
/// basis over the monomials of degree <= k.
class DualEngine {
 public:
  DualEngine(Ring ring, std::vector<Polynomial> generators, const NumericalConfig& cfg);

  const Ring& ring() const { return ring_; }
  int computed_order() const { return static_cast<int>(bases_.size()) - 1; }
  void extend_to(int k);

  std::size_t dim(int k);
  /// Orthonormal columns spanning D_0^k over monomials(k).
  const Matrix& dense(int k);
  const MonomialBasis& monomials(int k);
  DualBasis basis(int k, std::span<const Complex> basepoint);
  bool ill_conditioned() const { return ill_conditioned_; }

 private:
  Ring ring_;
  std::vector<Polynomial> generators_;
  std::vector<double> norms_;
  NumericalConfig cfg_;
  std::vector<Matrix> bases_;
  std::vector<MonomialBasis> monomials_;
  bool ill_conditioned_ = false;
};

/// Completion for homogeneous generators, one degree at a time: the dual
/// space of a homogeneous ideal is graded, so D^k is the direct sum of the
/// pieces H_0, ..., H_k with H_i spanned by functionals of order exactly i.
class GradedDualEngine {
 public:
  GradedDualEngine(Ring ring, std::vector<Polynomial> generators, const NumericalConfig& cfg);

  const Ring& ring() const { return ring_; }
  void extend_to(int k);
  int computed_degree() const { return static_cast<int>(pieces_.size()) - 1; }

  std::size_t piece_dim(int i);
  std::size_t dim(int k);
  const Matrix& piece(int i);
  const MonomialBasis& piece_monomials(int i);
  /// Dual-order initial terms of H_i, most significant first.
  const std::vector<Exponent>& piece_initial_terms(int i);
  DualBasis basis(int k);
  bool ill_conditioned() const { return ill_conditioned_; }

 private:
  Ring ring_;
  PrimalOrder ord_;
  std::vector<Polynomial> generators_;
  std::vector<double> norms_;
  NumericalConfig cfg_;
  std::vector<Matrix> pieces_;
  std::vector<MonomialBasis> monomials_;
  std::vector<std::vector<Exponent>> initial_terms_;
  std::vector<bool> have_initial_;
  bool ill_conditioned_ = false;
};

/// Translate generators so that y becomes the origin.
std::vector<Polynomial> translate_all(std::span<const Polynomial> generators,
                                      std::span<const Complex> y);

}  // namespace ecdetect

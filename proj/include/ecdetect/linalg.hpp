#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ecdetect/polynomial.hpp"

namespace ecdetect {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

std::size_t count_monomials(std::size_t nvars, int degree);
/// All exponents of total degree exactly `degree`, primal-greatest first.
std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree,
                                          const PrimalOrder& ord = {});

/// Indexed set of monomials with min_degree <= |alpha| <= max_degree, stored
/// in increasing degree and, within a degree, in decreasing primal order.
/// A basis with a smaller max_degree is therefore a prefix of a larger one.
class MonomialBasis {
 public:
  MonomialBasis() = default;
  MonomialBasis(std::size_t nvars, int min_degree, int max_degree, const PrimalOrder& ord = {});

  std::size_t size() const { return monomials_.size(); }
  std::size_t nvars() const { return nvars_; }
  int max_degree() const { return max_degree_; }
  const Exponent& at(std::size_t i) const { return monomials_[i]; }
  const std::vector<Exponent>& monomials() const { return monomials_; }
  std::optional<std::size_t> index(const Exponent& e) const;
  /// Number of stored monomials with degree <= d.
  std::size_t prefix_size(int d) const;

 private:
  std::size_t nvars_ = 0;
  int min_degree_ = 0;
  int max_degree_ = -1;
  std::vector<Exponent> monomials_;
  std::vector<std::size_t> degree_end_;
  std::map<Exponent, std::size_t> index_;
};

/// Numerical kernel: right singular vectors whose singular values fall at or
/// below delta * max(sigma_max, scale_floor). A positive floor keeps a matrix
/// made only of round-off from being read as full rank.
struct KernelResult {
  Matrix basis;  ///< orthonormal columns
  Eigen::Index rank = 0;
  /// A singular value lies within a factor 10 of the threshold.
  bool ill_conditioned = false;
};

KernelResult numerical_kernel(const Matrix& a, Eigen::Index ncols, double delta,
                              double scale_floor = 0.0);

/// Orthonormal basis of the numerical column span; singular values at or
/// below delta * max(sigma_max, scale_floor) are dropped.
Matrix orthonormal_range(const Matrix& columns, double delta, double scale_floor = 0.0);

/// Basis of the orthogonal complement of the span of orthonormal columns.
Matrix orthogonal_complement(const Matrix& orthonormal);

/// Reduced echelon form of a subspace with respect to a ranking of the
/// coordinates. `row_order` lists coordinate indices from most to least
/// significant; each returned vector has a unit entry at its pivot, zeros at
/// every more significant coordinate and at all other pivots.
struct Echelon {
  std::vector<Vector> vectors;
  std::vector<Eigen::Index> pivots;
};

Echelon reduced_echelon(const Matrix& basis, std::span<const Eigen::Index> row_order,
                        double pivot_tol);

}  // namespace ecdetect

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "ecdetect/linalg.hpp"
#include "ecdetect/polynomial.hpp"

namespace ecdetect {

/// Approximate point y_eps with |y_eps - y| < error_bound.
struct Point {
  std::vector<Complex> coords;
  double error_bound = 0.0;

  std::size_t size() const { return coords.size(); }
  static Point origin(std::size_t n) { return Point{std::vector<Complex>(n, 0.0), 0.0}; }
};

double distance(const Point& a, const Point& b);

/// Numerical knobs. Every threshold that turns floating point data into a
/// discrete answer lives here.
struct NumericalConfig {
  /// Singular values <= delta * sigma_max count as zero.
  double delta = 1e-8;
  /// Smallest admissible pivot when reading initial terms off a subspace.
  double pivot_tol = 1e-6;
  /// Base point accepted when |f(y)| < residual_tol * (1 + |f|).
  double residual_tol = 1e-6;
  /// Coefficients below this (relative to the unit leading coefficient) are
  /// dropped from reported dual functionals and polynomials.
  double chop_tol = 1e-12;
  std::uint64_t seed = 42;
  /// Degree cap for staircase and membership loops.
  int max_degree = 12;
  /// Caps for the embedded-component test: polynomial degree and dual order.
  int max_d = 10;
  int max_e = 10;
  /// Sample budget for interpolation.
  int max_samples = 50;
  /// Extra degrees without new corners required before a staircase is
  /// declared complete.
  int corner_confirm = 1;
};

/// Orders monomial functionals by the dual order: d^a >= d^b iff x^a <= x^b.
struct DualGreater {
  PrimalOrder ord;
  bool operator()(const Exponent& a, const Exponent& b) const { return ord.greater(b, a); }
};

/// q = sum c_alpha d^alpha[y] with normalized partials
/// d^alpha = (1/alpha!) d^|alpha| / dx^alpha.
class DualFunctional {
 public:
  using TermMap = std::map<Exponent, Complex, DualGreater>;

  DualFunctional(Ring ring, std::vector<Complex> basepoint);

  const Ring& ring() const { return ring_; }
  const std::vector<Complex>& basepoint() const { return basepoint_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, Complex c);
  Complex coefficient(const Exponent& e) const;
  /// max |alpha| over non-zero terms; -1 for the zero functional.
  int order() const;
  /// Largest monomial functional in the dual order.
  Exponent initial_term() const;

  DualFunctional& operator+=(const DualFunctional& o);
  DualFunctional& operator*=(Complex c);

  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Complex> basepoint_;
  TermMap terms_;
};

/// Basis of a truncated dual space D_y^k[I].
struct DualBasis {
  Ring ring;
  std::vector<Complex> basepoint;
  int order = 0;
  bool reduced = false;
  std::vector<DualFunctional> functionals;
  /// Some singular value sat within a factor 10 of the kernel threshold.
  bool ill_conditioned = false;

  std::size_t dim() const { return functionals.size(); }
  std::vector<Exponent> initial_terms() const;
};

/// q(f) = sum c_alpha (d^alpha f)(y).
Complex apply(const DualFunctional& q, const Polynomial& f);

/// The action x_i . q, defined by (x_i . q)(f) = q(x_i f).
DualFunctional differentiate(const DualFunctional& q, std::size_t i);

/// The action g . q, defined by (g . q)(f) = q(g f).
DualFunctional multiply(const Polynomial& g, const DualFunctional& q);

/// D_y^k[<F>] by the degree-by-degree completion algorithm with SVD kernels.
/// Throws NotOnVarietyError when some |f(y)| exceeds the residual tolerance.
DualBasis truncated_dual(std::span<const Polynomial> generators, const Point& y, int k,
                         const NumericalConfig& cfg = {});

/// Same span, pairwise distinct initial terms, unit leading coefficients.
/// Throws PreconditionError when the input functionals are dependent.
DualBasis reduce_basis(const DualBasis& basis, const NumericalConfig& cfg = {});

/// Residual check shared by every entry point that needs y on V(F).
void check_on_variety(std::span<const Polynomial> generators, std::span<const Complex> y,
                      const NumericalConfig& cfg);

/// Coordinates of functionals over a monomial basis (columns = functionals).
Matrix to_matrix(const std::vector<DualFunctional>& functionals, const MonomialBasis& monomials);

/// Coordinate rows from most to least significant in the dual order
/// (highest degree first, primal-smallest first within a degree).
std::vector<Eigen::Index> dual_row_order(const MonomialBasis& monomials);
/// Coordinate rows from most to least significant in the primal order.
std::vector<Eigen::Index> primal_row_order(const MonomialBasis& monomials);

}  // namespace ecdetect

#pragma once

#include <span>
#include <vector>

#include "ecdetect/dual_space.hpp"

namespace ecdetect {

/// A monomial ideal described by its minimal generators (g-corners).
struct Staircase {
  std::size_t nvars = 0;
  /// Minimal generators, primal-greatest first.
  std::vector<Exponent> gcorners;
  /// Highest degree of the homogenized dual computation behind the corners;
  /// -1 when the staircase was given directly.
  int degree_reached = -1;

  bool in_ideal(const Exponent& m) const;
  bool is_standard(const Exponent& m) const { return !in_ideal(m); }
  /// Largest number of variables spanning a face free of corners.
  int dimension() const;
};

/// Minimal generators of the monomial ideal generated by `monomials`.
Staircase monomial_staircase(std::size_t nvars, std::vector<Exponent> monomials);

struct HilbertData {
  /// H(0), ..., H(m); for 0-dimensional ideals the list ends at the first zero.
  std::vector<long long> values;
  int regularity = 0;
  long long multiplicity = 0;
  int dimension = 0;
  /// Newton-form data of the Hilbert polynomial: HP(k) = sum_j hp_diffs[j] *
  /// C(k - hp_base, j). Empty for dimension 0 (HP = 0).
  std::vector<long long> hp_diffs;
  int hp_base = 0;

  long long hilbert_polynomial(int k) const;
};

/// H_I(k) = dim D_y^k[I] - dim D_y^{k-1}[I].
long long hilbert_function(std::span<const Polynomial> generators, const Point& y, int k,
                           const NumericalConfig& cfg = {});
std::vector<long long> hilbert_values(std::span<const Polynomial> generators, const Point& y,
                                      int k, const NumericalConfig& cfg = {});

/// in_>= <F> at y through the graded dual of the homogenized system.
/// Throws IncompleteStaircaseError when cfg.max_degree is reached first.
Staircase gcorners(std::span<const Polynomial> generators, const Point& y,
                   const NumericalConfig& cfg = {});

/// Monomials x^a outside the ideal with x_i x^a inside for every i, of
/// degree <= bound.
std::vector<Exponent> scorners(const Staircase& st, int bound);

/// Number of standard monomials of degree exactly k.
long long count_standard(const Staircase& st, int k);

HilbertData staircase_stats(const Staircase& st);
HilbertData staircase_stats(std::span<const Polynomial> generators, const Point& y,
                            const NumericalConfig& cfg = {});

}  // namespace ecdetect

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecdetect/linalg.hpp"
#include "ecdetect/oracle.hpp"
#include "ecdetect/staircase.hpp"

namespace ecdetect {

/// A subspace of R_d, kept as a reduced echelon basis in the primal order
/// (distinct initial terms, unit leading coefficients).
struct TruncationSpace {
  Ring ring;
  int d = 0;
  /// Order of the dual constraints used.
  int e = 0;
  /// Known to equal J_d (not just the double truncation J_d^e).
  bool certified = false;
  std::vector<Polynomial> basis;

  std::size_t dim() const { return basis.size(); }
  std::vector<Exponent> initial_terms() const;
};

/// Rows q(x^b) for every functional q and monomial x^b in `mons`, each scaled
/// by the size of q times a power of the basepoint radius.
Matrix constraint_rows(const DualBasis& dual, const MonomialBasis& mons);

/// The polynomial with coefficient vector v over `mons`, entries below
/// chop_tol dropped.
Polynomial vector_to_polynomial(const Ring& ring, const Vector& v, const MonomialBasis& mons,
                                double chop_tol);

/// Polynomials of degree <= d annihilated by D_x^e[F] at generic points x of
/// every oracle component; one fresh point per component per round until a
/// round leaves the dimension unchanged.
TruncationSpace double_truncation(OracleHandle& oracle, int d, int e,
                                  const NumericalConfig& cfg = {});

/// Whether I : g is zero-dimensional at the origin as certified by the g-corners
/// read from g^h . D_0[<F^h>] up to degree cutoff c. False also means "cutoff
/// reached".
bool is_witness_polynomial(std::span<const Polynomial> generators, const Polynomial& g, int c,
                           const NumericalConfig& cfg = {});

/// J_d: double truncations for e = 0, 1, ... until a random element is
/// certified by is_witness_polynomial. Throws InconclusiveError past cfg.max_e.
TruncationSpace ideal_truncation(std::span<const Polynomial> generators, OracleHandle& oracle,
                                 int d, const NumericalConfig& cfg = {});

struct EmbeddedVerdict {
  /// Isolated: no component passes through the point and the local ideal is
  /// zero-dimensional, so the point is a component of its own.
  enum class Certificate { Witness, Coverage, Isolated };

  bool embedded = false;
  Certificate certificate = Certificate::Coverage;
  /// Witness certificate: an element of J \ I (in the caller's coordinates)
  /// and the order e of the dual constraints that certified J_d.
  std::optional<Polynomial> witness;
  int witness_e = -1;
  /// Coverage certificate: s-corners x^a with d^a in in(l . D_0^{d+1}[I]).
  std::vector<Exponent> covered_scorners;
  /// Loop degree at which the verdict was reached.
  int d = 0;
  Staircase staircase;
  std::vector<Exponent> scorners;
  std::vector<Complex> point;
  /// Set when the verdict came from a generic slice of a positive-dimensional
  /// suspect.
  std::optional<std::vector<Complex>> slice_point;
};

/// The origin is assumed to lie on V(F); the oracle lists the components
/// through the origin other than the origin itself. An empty list means the
/// origin is an isolated point of V(F): the verdict is false with an Isolated
/// certificate, and a positive-dimensional staircase is a PreconditionError.
EmbeddedVerdict is_origin_embedded(std::span<const Polynomial> generators, OracleHandle& oracle,
                                   const NumericalConfig& cfg = {});

/// The oracle restricted to the positive-dimensional components through y,
/// shifted so that y is the origin. Throws PreconditionError when there are
/// none.
OracleHandle localized_oracle(std::span<const Polynomial> generators, const Point& y,
                              OracleHandle& oracle, const NumericalConfig& cfg = {});

/// Translates y to the origin, keeps the oracle components through y, and
/// runs is_origin_embedded. Throws PreconditionError when y is a smooth point
/// of a listed component, or when no listed component passes through y while
/// V(F) is positive-dimensional there.
EmbeddedVerdict is_point_embedded(std::span<const Polynomial> generators, const Point& y,
                                  OracleHandle& oracle, const NumericalConfig& cfg = {});

struct SlicedProblem {
  std::vector<Polynomial> generators;
  Point point;
  OracleHandle oracle;
  AffinePlane plane;
};

/// Cuts a k-dimensional suspect (k >= 1) with a random affine plane of
/// codimension k through a generic point of it.
SlicedProblem slice_suspect(std::span<const Polynomial> generators, const ComponentSpec& suspect,
                            OracleHandle& oracle, const NumericalConfig& cfg = {});

}  // namespace ecdetect

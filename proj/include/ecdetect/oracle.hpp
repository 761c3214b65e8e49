#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecdetect/dual_space.hpp"
#include "ecdetect/expression.hpp"
#include "ecdetect/random.hpp"

namespace ecdetect {

/// {x : A x = b}; the codimension is the number of rows.
struct AffinePlane {
  Matrix a;
  Vector b;

  std::size_t codim() const { return static_cast<std::size_t>(a.rows()); }
  double residual(std::span<const Complex> x) const;
  /// `codim` forms with coefficients on the unit circle, passing through p.
  static AffinePlane random_through(std::span<const Complex> p, std::size_t codim, Rng& rng);
  /// Rows of both planes.
  static AffinePlane stack(const AffinePlane& p, const AffinePlane& q);
};

/// A component of V(F) given by a rational parametrization C^dim -> C^N in
/// parameters t1..td (`t` also accepted when dim = 1) or by explicit points.
struct ComponentSpec {
  std::string id;
  /// Number of parameters (0 for point lists).
  int dim = 0;
  std::vector<std::string> parametrization;
  std::vector<std::vector<Complex>> points;
  /// Sampled coordinates are map(t) - offset.
  std::vector<Complex> offset;
  /// Restriction to a plane (set by slicing).
  std::optional<AffinePlane> plane;

  static ComponentSpec from_parametrization(std::string id, int dim,
                                            std::vector<std::string> texts, std::size_t nvars);
  static ComponentSpec from_points(std::string id, std::vector<std::vector<Complex>> points);

  bool parametrized() const { return !map_.empty(); }
  /// Dimension of the set actually sampled: dim minus the plane codimension.
  int geometric_dim() const { return dim - (plane ? static_cast<int>(plane->codim()) : 0); }
  std::size_t nvars() const;
  /// Point map(t) - offset and its Jacobian with respect to t.
  std::vector<Complex> evaluate(std::span<const Complex> t, Matrix* jacobian = nullptr) const;

 private:
  std::vector<ExprPtr> map_;
};

/// Samples generic points on components through a suspect point and
/// evaluates local dual spaces of F there.
class OracleHandle {
 public:
  OracleHandle(std::vector<Polynomial> generators, std::vector<ComponentSpec> components,
               std::uint64_t seed, std::optional<Point> suspect = std::nullopt);

  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<ComponentSpec>& components() const { return components_; }
  const Point& suspect() const { return suspect_; }
  Rng& rng() { return rng_; }
  void reseed(std::uint64_t seed) { rng_.seed(seed); }

  std::size_t index_of(const std::string& id) const;

  /// Residual check of every component against F at random parameters.
  void validate(const NumericalConfig& cfg);

  /// A point of component i (on `constraint` too, when given) farther than
  /// 1e-3 from `avoid`. Throws SamplingError after 50 failed attempts.
  Point sample_point(std::size_t i, const Point& avoid, const AffinePlane* constraint = nullptr);
  Point sample_point(const std::string& id, const Point& avoid,
                     const AffinePlane* constraint = nullptr);
  /// Same without a point to keep away from.
  Point sample_anywhere(std::size_t i, const AffinePlane* constraint = nullptr);

  /// D_x^e of <F>; x must stay 1e-3 away from the suspect point.
  DualBasis dual_at(const Point& x, int e, const NumericalConfig& cfg) const;

  /// Whether component i passes through y, up to `tol` relative residual.
  bool contains(std::size_t i, std::span<const Complex> y, double tol);

  /// All coordinates shifted so that y becomes the origin.
  OracleHandle translated(std::span<const Complex> y) const;
  OracleHandle with(std::vector<Polynomial> generators, std::vector<ComponentSpec> components,
                    Point suspect) const;

 private:
  Point sample(std::size_t i, const Point* avoid, const AffinePlane* constraint);

  std::vector<Polynomial> generators_;
  std::vector<ComponentSpec> components_;
  Point suspect_;
  Rng rng_;
};

/// Gauss-Newton (minimum-norm steps) for A (map(t) - offset) = b starting at
/// t; returns the parameters on success.
std::optional<std::vector<Complex>> solve_on_component(const ComponentSpec& c, const Matrix& a,
                                                       const Vector& b, std::vector<Complex> t,
                                                       int max_iterations, double tol);

}  // namespace ecdetect

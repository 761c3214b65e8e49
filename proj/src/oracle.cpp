#include "ecdetect/oracle.hpp"

#include <cmath>

#include "ecdetect/errors.hpp"

namespace ecdetect {

namespace {

constexpr double kAvoidRadius = 1e-3;
constexpr int kSampleAttempts = 50;

Vector to_vector(std::span<const Complex> x) {
  Vector v(static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) v(static_cast<Eigen::Index>(i)) = x[i];
  return v;
}

bool finite(std::span<const Complex> x) {
  for (const auto& c : x)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

double norm(std::span<const Complex> x) { return to_vector(x).norm(); }

std::vector<Complex> random_parameters(int dim, Rng& rng) {
  std::vector<Complex> t(static_cast<std::size_t>(dim));
  for (auto& v : t) v = random_unit_disc(rng);
  return t;
}

std::vector<std::string> parameter_names(int dim) {
  std::vector<std::string> names;
  for (int i = 1; i <= dim; ++i) names.push_back("t" + std::to_string(i));
  return names;
}

}  // namespace

double AffinePlane::residual(std::span<const Complex> x) const {
  if (a.rows() == 0) return 0.0;
  return (a * to_vector(x) - b).norm();
}

AffinePlane AffinePlane::random_through(std::span<const Complex> p, std::size_t codim, Rng& rng) {
  AffinePlane plane;
  const auto n = static_cast<Eigen::Index>(p.size());
  plane.a.resize(static_cast<Eigen::Index>(codim), n);
  for (Eigen::Index r = 0; r < plane.a.rows(); ++r)
    for (Eigen::Index c = 0; c < n; ++c) plane.a(r, c) = random_unit_circle(rng);
  plane.b = plane.a * to_vector(p);
  return plane;
}

AffinePlane AffinePlane::stack(const AffinePlane& p, const AffinePlane& q) {
  if (p.a.rows() == 0) return q;
  if (q.a.rows() == 0) return p;
  AffinePlane out;
  out.a.resize(p.a.rows() + q.a.rows(), p.a.cols());
  out.a << p.a, q.a;
  out.b.resize(p.b.size() + q.b.size());
  out.b << p.b, q.b;
  return out;
}

// ---------------------------------------------------------------------------

ComponentSpec ComponentSpec::from_parametrization(std::string id, int dim,
                                                  std::vector<std::string> texts,
                                                  std::size_t nvars) {
  if (dim < 1) throw PreconditionError("component " + id + ": parametrization needs dim >= 1");
  if (texts.size() != nvars)
    throw PreconditionError("component " + id + ": parametrization has " +
                            std::to_string(texts.size()) + " coordinates, expected " +
                            std::to_string(nvars));
  ComponentSpec c;
  c.id = std::move(id);
  c.dim = dim;
  c.parametrization = std::move(texts);
  c.offset.assign(nvars, 0.0);
  std::vector<std::string> names = parameter_names(dim);
  const std::vector<std::string> alias{"t"};
  for (const auto& text : c.parametrization) {
    try {
      c.map_.push_back(parse_expression(text, names));
    } catch (const ParseError&) {
      if (dim != 1) throw;
      c.map_.push_back(parse_expression(text, alias));
    }
  }
  return c;
}

ComponentSpec ComponentSpec::from_points(std::string id, std::vector<std::vector<Complex>> points) {
  if (points.empty()) throw PreconditionError("component " + id + ": empty point list");
  ComponentSpec c;
  c.id = std::move(id);
  c.dim = 0;
  const std::size_t n = points.front().size();
  for (const auto& p : points)
    if (p.size() != n) throw PreconditionError("component " + c.id + ": point length mismatch");
  c.points = std::move(points);
  c.offset.assign(n, 0.0);
  return c;
}

std::size_t ComponentSpec::nvars() const { return offset.size(); }

std::vector<Complex> ComponentSpec::evaluate(std::span<const Complex> t, Matrix* jacobian) const {
  const std::size_t n = map_.size();
  std::vector<Complex> x(n);
  if (jacobian) jacobian->resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(t.size()));
  for (std::size_t i = 0; i < n; ++i) {
    Jet j = evaluate_jet(*map_[i], t);
    x[i] = j.value - offset[i];
    if (jacobian)
      for (std::size_t k = 0; k < t.size(); ++k)
        (*jacobian)(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = j.grad[k];
  }
  return x;
}

std::optional<std::vector<Complex>> solve_on_component(const ComponentSpec& c, const Matrix& a,
                                                       const Vector& b, std::vector<Complex> t,
                                                       int max_iterations, double tol) {
  const double scale = 1.0 + b.norm();
  for (int it = 0; it <= max_iterations; ++it) {
    Matrix jx;
    std::vector<Complex> x = c.evaluate(t, &jx);
    if (!finite(x)) return std::nullopt;
    const Vector r = a * to_vector(x) - b;
    if (r.norm() <= tol * scale) return t;
    if (it == max_iterations) break;
    const Matrix jr = a * jx;
    const Vector step = jr.completeOrthogonalDecomposition().solve(r);
    if (!step.allFinite()) return std::nullopt;
    for (std::size_t k = 0; k < t.size(); ++k) t[k] -= step(static_cast<Eigen::Index>(k));
    if (step.norm() < 1e-15 * (1.0 + norm(t))) {
      x = c.evaluate(t);
      if (finite(x) && (a * to_vector(x) - b).norm() <= tol * scale) return t;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

OracleHandle::OracleHandle(std::vector<Polynomial> generators,
                           std::vector<ComponentSpec> components, std::uint64_t seed,
                           std::optional<Point> suspect)
    : generators_(std::move(generators)), components_(std::move(components)), rng_(seed) {
  if (generators_.empty()) throw PreconditionError("no generators");
  const std::size_t n = generators_.front().nvars();
  suspect_ = suspect ? *suspect : Point::origin(n);
  if (suspect_.size() != n) throw PreconditionError("suspect point has the wrong length");
  for (const auto& c : components_)
    if (c.nvars() != n)
      throw PreconditionError("component " + c.id + " lives in the wrong number of variables");
}

std::size_t OracleHandle::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].id == id) return i;
  throw PreconditionError("unknown component " + id);
}

void OracleHandle::validate(const NumericalConfig& cfg) {
  auto check = [&](const ComponentSpec& c, std::span<const Complex> x) {
    for (const auto& f : generators_) {
      const double r = std::abs(f.evaluate(x));
      double scale = 1.0;
      for (const auto& v : x) scale = std::max(scale, std::abs(v));
      if (r >= cfg.residual_tol * (1.0 + f.coefficient_norm()) * std::pow(scale, f.degree()))
        throw PreconditionError("component " + c.id + " does not lie on V(F)");
    }
  };
  for (const auto& c : components_) {
    if (c.plane) continue;
    if (!c.parametrized()) {
      for (const auto& p : c.points) {
        std::vector<Complex> x(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) x[i] = p[i] - c.offset[i];
        check(c, x);
      }
      continue;
    }
    int checked = 0;
    for (int attempt = 0; attempt < 200 && checked < 20; ++attempt) {
      auto x = c.evaluate(random_parameters(c.dim, rng_));
      if (!finite(x) || norm(x) > 1e6) continue;
      check(c, x);
      ++checked;
    }
    if (checked == 0) throw PreconditionError("component " + c.id + ": no finite sample");
  }
}

Point OracleHandle::sample_point(std::size_t i, const Point& avoid, const AffinePlane* constraint) {
  return sample(i, &avoid, constraint);
}

Point OracleHandle::sample_anywhere(std::size_t i, const AffinePlane* constraint) {
  return sample(i, nullptr, constraint);
}

Point OracleHandle::sample(std::size_t i, const Point* avoid, const AffinePlane* constraint) {
  if (i >= components_.size()) throw PreconditionError("component index out of range");
  const ComponentSpec& c = components_[i];
  AffinePlane plane;
  plane.a.resize(0, static_cast<Eigen::Index>(c.nvars()));
  if (c.plane) plane = AffinePlane::stack(plane, *c.plane);
  if (constraint) plane = AffinePlane::stack(plane, *constraint);
  if (static_cast<int>(plane.codim()) > c.dim && c.parametrized())
    throw PreconditionError("constraint codimension exceeds the dimension of component " + c.id);

  const double limit = 1e4 * (1.0 + norm(suspect_.coords));
  if (!c.parametrized()) {
    std::vector<std::vector<Complex>> ok;
    for (const auto& p : c.points) {
      std::vector<Complex> x(p.size());
      for (std::size_t k = 0; k < p.size(); ++k) x[k] = p[k] - c.offset[k];
      if (avoid && distance(Point{x, 0.0}, *avoid) <= kAvoidRadius) continue;
      if (plane.residual(x) > 1e-8 * (1.0 + plane.b.norm())) continue;
      ok.push_back(std::move(x));
    }
    if (ok.empty()) throw SamplingError("component " + c.id + ": no admissible point");
    std::uniform_int_distribution<std::size_t> pick(0, ok.size() - 1);
    return Point{ok[pick(rng_)], 0.0};
  }

  for (int attempt = 0; attempt < kSampleAttempts; ++attempt) {
    std::vector<Complex> t = random_parameters(c.dim, rng_);
    if (plane.codim() > 0) {
      auto solved = solve_on_component(c, plane.a, plane.b, t, 50, 1e-13);
      if (!solved) continue;
      t = *solved;
    }
    std::vector<Complex> x = c.evaluate(t);
    if (!finite(x) || norm(x) > limit) continue;
    if (avoid && distance(Point{x, 0.0}, *avoid) <= kAvoidRadius) continue;
    return Point{std::move(x), 0.0};
  }
  throw SamplingError("component " + c.id + ": sampling failed after " +
                      std::to_string(kSampleAttempts) + " attempts");
}

Point OracleHandle::sample_point(const std::string& id, const Point& avoid,
                                 const AffinePlane* constraint) {
  return sample_point(index_of(id), avoid, constraint);
}

DualBasis OracleHandle::dual_at(const Point& x, int e, const NumericalConfig& cfg) const {
  if (distance(x, suspect_) < kAvoidRadius)
    throw PreconditionError("dual_at: point too close to the suspect point");
  return truncated_dual(generators_, x, e, cfg);
}

bool OracleHandle::contains(std::size_t i, std::span<const Complex> y, double tol) {
  const ComponentSpec& c = components_[i];
  const double scale = 1.0 + norm(y);
  if (c.plane && c.plane->residual(y) > tol * (1.0 + c.plane->b.norm())) return false;
  if (!c.parametrized()) {
    for (const auto& p : c.points) {
      double d = 0.0;
      for (std::size_t k = 0; k < p.size(); ++k) d += std::norm(p[k] - c.offset[k] - y[k]);
      if (std::sqrt(d) <= tol * scale) return true;
    }
    return false;
  }
  const auto n = static_cast<Eigen::Index>(y.size());
  const Matrix id = Matrix::Identity(n, n);
  const Vector target = to_vector(y);
  for (int attempt = 0; attempt < 20; ++attempt) {
    if (solve_on_component(c, id, target, random_parameters(c.dim, rng_), 100, tol)) return true;
  }
  return false;
}

OracleHandle OracleHandle::translated(std::span<const Complex> y) const {
  std::vector<Polynomial> gens;
  for (const auto& f : generators_) gens.push_back(f.translate(y));
  std::vector<ComponentSpec> comps = components_;
  const Vector yv = to_vector(y);
  for (auto& c : comps) {
    for (std::size_t k = 0; k < y.size(); ++k) c.offset[k] += y[k];
    if (c.plane) c.plane->b -= c.plane->a * yv;
  }
  Point s = suspect_;
  for (std::size_t k = 0; k < y.size(); ++k) s.coords[k] -= y[k];
  OracleHandle out(std::move(gens), std::move(comps), 0, s);
  out.rng_ = rng_;
  return out;
}

OracleHandle OracleHandle::with(std::vector<Polynomial> generators,
                                std::vector<ComponentSpec> components, Point suspect) const {
  OracleHandle out(std::move(generators), std::move(components), 0, std::move(suspect));
  out.rng_ = rng_;
  return out;
}

}  // namespace ecdetect

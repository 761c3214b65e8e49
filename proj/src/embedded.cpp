#include "ecdetect/embedded.hpp"

#include <algorithm>
#include <cmath>

#include "ecdetect/colon.hpp"
#include "ecdetect/dual_engine.hpp"
#include "ecdetect/errors.hpp"

namespace ecdetect {

std::vector<Exponent> TruncationSpace::initial_terms() const {
  std::vector<Exponent> out;
  for (const auto& f : basis) out.push_back(initial_term(f));
  return out;
}

Polynomial vector_to_polynomial(const Ring& ring, const Vector& v, const MonomialBasis& mons,
                                double chop_tol) {
  Polynomial f(ring);
  for (Eigen::Index r = 0; r < v.size(); ++r)
    if (std::abs(v(r)) > chop_tol) f.add_term(mons.at(static_cast<std::size_t>(r)), v(r));
  return f;
}

Matrix constraint_rows(const DualBasis& dual, const MonomialBasis& mons) {
  const Ring& ring = dual.ring;
  double radius = 1.0;
  for (const auto& c : dual.basepoint) radius = std::max(radius, std::abs(c));
  Matrix rows(static_cast<Eigen::Index>(dual.dim()), static_cast<Eigen::Index>(mons.size()));
  for (std::size_t r = 0; r < dual.dim(); ++r) {
    const DualFunctional& q = dual.functionals[r];
    double qn = 0.0;
    for (const auto& [a, c] : q.terms()) qn += std::norm(c);
    for (std::size_t b = 0; b < mons.size(); ++b)
      rows(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(b)) =
          apply(q, Polynomial::monomial(ring, mons.at(b)));
    // Scale by the size of q so that rows vanishing up to round-off stay small.
    const double scale = std::sqrt(qn) * std::pow(radius, mons.max_degree());
    rows.row(static_cast<Eigen::Index>(r)) /= std::max(scale, 1e-300);
  }
  return rows;
}

namespace {

Ring homogenized_for(std::span<const Polynomial> generators) {
  return homogenized_ring(generators.front().ring());
}

GradedDualEngine homogenized_engine(std::span<const Polynomial> generators, const Ring& hring,
                                    const NumericalConfig& cfg) {
  std::vector<Polynomial> fh;
  for (const auto& f : generators)
    if (!f.is_zero()) fh.push_back(homogenize(f, hring));
  return GradedDualEngine(hring, std::move(fh), cfg);
}

bool witness_check(GradedDualEngine& engine, const Polynomial& g, int c,
                   const NumericalConfig& cfg) {
  if (g.is_zero()) return true;
  const Ring& hring = engine.ring();
  const std::size_t n = hring->nvars() - 1;
  HomogeneousColon colon(engine, homogenize(g, hring), cfg);
  std::vector<Exponent> corners;
  std::vector<bool> pure(n, false);
  for (int d = 0; d <= c; ++d) {
    for (const auto& m : colon.initial_ideal_part(d)) {
      if (std::any_of(corners.begin(), corners.end(),
                      [&](const Exponent& k) { return divides(k, m); }))
        continue;
      corners.push_back(m);
      const Exponent x = dehomogenize(m, *hring);
      std::size_t support = 0, last = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (x[i] > 0) ++support, last = i;
      if (support == 0) return true;
      if (support == 1) pure[last] = true;
    }
    if (std::all_of(pure.begin(), pure.end(), [](bool b) { return b; })) return true;
  }
  return false;
}

TruncationSpace truncation_impl(OracleHandle& oracle, int d, GradedDualEngine& engine,
                                const NumericalConfig& cfg) {
  for (int e = 0; e <= cfg.max_e; ++e) {
    TruncationSpace k = double_truncation(oracle, d, e, cfg);
    if (k.dim() == 0) {
      k.certified = true;
      return k;
    }
    Polynomial g(k.ring);
    for (const auto& b : k.basis) g += b * random_gaussian(oracle.rng());
    g *= 1.0 / g.coefficient_norm();
    if (witness_check(engine, g, e, cfg)) {
      k.certified = true;
      return k;
    }
  }
  throw InconclusiveError("ideal truncation of degree " + std::to_string(d) +
                          " not certified up to e = " + std::to_string(cfg.max_e));
}

Matrix jacobian_at(std::span<const Polynomial> generators, std::span<const Complex> y) {
  const std::size_t n = y.size();
  Matrix j(static_cast<Eigen::Index>(generators.size()), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < generators.size(); ++r) {
    const Polynomial& f = generators[r];
    const double scale = 1.0 + f.coefficient_norm();
    for (std::size_t i = 0; i < n; ++i)
      j(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(i)) =
          f.derivative(unit_exponent(n, i)).evaluate(y) / scale;
  }
  return j;
}

}  // namespace

TruncationSpace double_truncation(OracleHandle& oracle, int d, int e, const NumericalConfig& cfg) {
  if (d < 0 || e < 0) throw PreconditionError("negative truncation degree");
  if (oracle.components().empty()) throw PreconditionError("oracle has no components");
  const Ring& ring = oracle.generators().front().ring();
  const MonomialBasis mons(ring->nvars(), 0, d, PrimalOrder::for_ring(*ring));
  const auto m = static_cast<Eigen::Index>(mons.size());
  Matrix k = Matrix::Identity(m, m);
  const auto max_rounds = static_cast<int>(mons.size()) + 2;
  for (int round = 0; round < max_rounds && k.cols() > 0; ++round) {
    const Eigen::Index before = k.cols();
    for (std::size_t i = 0; i < oracle.components().size() && k.cols() > 0; ++i) {
      const Point x = oracle.sample_point(i, oracle.suspect());
      const DualBasis dual = oracle.dual_at(x, e, cfg);
      const Matrix a = constraint_rows(dual, mons) * k;
      KernelResult ker = numerical_kernel(a, k.cols(), cfg.delta, 1.0);
      k = k * ker.basis;
    }
    if (k.cols() == before) break;
  }
  TruncationSpace out;
  out.ring = ring;
  out.d = d;
  out.e = e;
  Echelon ech = reduced_echelon(k, primal_row_order(mons), cfg.pivot_tol);
  for (const auto& v : ech.vectors)
    out.basis.push_back(vector_to_polynomial(ring, v, mons, cfg.chop_tol));
  return out;
}

bool is_witness_polynomial(std::span<const Polynomial> generators, const Polynomial& g, int c,
                           const NumericalConfig& cfg) {
  if (generators.empty()) throw PreconditionError("no generators");
  const Ring hring = homogenized_for(generators);
  GradedDualEngine engine = homogenized_engine(generators, hring, cfg);
  return witness_check(engine, g, c, cfg);
}

TruncationSpace ideal_truncation(std::span<const Polynomial> generators, OracleHandle& oracle,
                                 int d, const NumericalConfig& cfg) {
  if (generators.empty()) throw PreconditionError("no generators");
  const Ring hring = homogenized_for(generators);
  GradedDualEngine engine = homogenized_engine(generators, hring, cfg);
  return truncation_impl(oracle, d, engine, cfg);
}

EmbeddedVerdict is_origin_embedded(std::span<const Polynomial> generators, OracleHandle& oracle,
                                   const NumericalConfig& cfg) {
  if (generators.empty()) throw PreconditionError("no generators");
  const Ring& ring = generators.front().ring();
  const std::size_t n = ring->nvars();
  const Point origin = Point::origin(n);

  EmbeddedVerdict v;
  v.point.assign(n, 0.0);
  v.staircase = gcorners(generators, origin, cfg);
  v.scorners = scorners(v.staircase, 1 << 20);
  // With no component through the origin it can only be an isolated point.
  const bool isolated = oracle.components().empty();
  if (isolated) {
    if (v.staircase.dimension() > 0)
      throw PreconditionError("V(F) is positive-dimensional at the suspect point but no listed "
                              "component passes through it");
    v.embedded = false;
    v.certificate = EmbeddedVerdict::Certificate::Isolated;
    return v;
  }

  Polynomial ell(ring);
  for (std::size_t i = 0; i < n; ++i)
    ell += Polynomial::variable(ring, i) * random_unit_circle(oracle.rng());

  std::vector<Polynomial> local(generators.begin(), generators.end());
  DualEngine dual(ring, local, cfg);
  const Ring hring = homogenized_for(generators);
  GradedDualEngine engine = homogenized_engine(generators, hring, cfg);

  for (int d = 0; d <= cfg.max_d; ++d) {
    v.d = d;
    try {
      TruncationSpace j = truncation_impl(oracle, d, engine, cfg);
      // An initial term outside in(I) certifies J_d not in I at once. Failing
      // that, the basis elements are tested for membership one by one: the
      // initial terms of J_d can all lie in in(I) while J_d does not lie in I.
      std::optional<Polynomial> witness;
      for (const auto& f : j.basis) {
        if (v.staircase.is_standard(initial_term(f))) {
          witness = f;
          break;
        }
      }
      for (std::size_t b = 0; b < j.basis.size() && !witness; ++b) {
        try {
          if (!ideal_membership(generators, j.basis[b], cfg)) witness = j.basis[b];
        } catch (const InconclusiveError&) {
        }
      }
      if (witness) {
        v.embedded = true;
        v.certificate = EmbeddedVerdict::Certificate::Witness;
        v.witness = std::move(witness);
        v.witness_e = j.e;
        return v;
      }
    } catch (const InconclusiveError&) {
      // No certificate from this side at degree d; the s-corner test may still decide.
    }

    const MonomialBasis& from = dual.monomials(d + 1);
    const MonomialBasis to(n, 0, d, PrimalOrder::for_ring(*ring));
    const Matrix s = orthonormal_range(multiplication_matrix(ell, from, to) * dual.dense(d + 1),
                                       cfg.delta, 1.0);
    const Echelon ech = reduced_echelon(s, dual_row_order(to), cfg.pivot_tol);
    std::vector<Exponent> covered;
    for (const auto& a : v.scorners) {
      auto idx = to.index(a);
      if (idx && std::find(ech.pivots.begin(), ech.pivots.end(),
                           static_cast<Eigen::Index>(*idx)) != ech.pivots.end())
        covered.push_back(a);
    }
    if (covered.size() == v.scorners.size()) {
      v.embedded = false;
      v.certificate = EmbeddedVerdict::Certificate::Coverage;
      v.covered_scorners = std::move(covered);
      return v;
    }
  }
  throw InconclusiveError("embedded test undecided up to d = " + std::to_string(cfg.max_d));
}

namespace {

OracleHandle through_point(std::span<const Polynomial> generators, const Point& y,
                           OracleHandle& oracle, const NumericalConfig& cfg) {
  const double tol = std::max(cfg.residual_tol, 10.0 * y.error_bound);
  std::vector<ComponentSpec> through;
  for (std::size_t i = 0; i < oracle.components().size(); ++i) {
    const ComponentSpec& c = oracle.components()[i];
    if (c.geometric_dim() <= 0) continue;
    if (oracle.contains(i, y.coords, tol)) through.push_back(c);
  }
  std::vector<Polynomial> gens(generators.begin(), generators.end());
  return oracle.with(std::move(gens), std::move(through), y).translated(y.coords);
}

}  // namespace

OracleHandle localized_oracle(std::span<const Polynomial> generators, const Point& y,
                              OracleHandle& oracle, const NumericalConfig& cfg) {
  OracleHandle local = through_point(generators, y, oracle, cfg);
  if (local.components().empty())
    throw PreconditionError("no listed component passes through the suspect point");
  return local;
}

EmbeddedVerdict is_point_embedded(std::span<const Polynomial> generators, const Point& y,
                                  OracleHandle& oracle, const NumericalConfig& cfg) {
  if (generators.empty()) throw PreconditionError("no generators");
  check_on_variety(generators, y.coords, cfg);
  const std::size_t n = y.size();
  OracleHandle local = through_point(generators, y, oracle, cfg);

  const Matrix jac = jacobian_at(generators, y.coords);
  const KernelResult ker = numerical_kernel(jac, static_cast<Eigen::Index>(n), cfg.delta, 1.0);
  const auto rank = static_cast<int>(ker.rank);
  for (const auto& c : local.components())
    if (c.geometric_dim() == static_cast<int>(n) - rank)
      throw PreconditionError("suspect point is a smooth point of component " + c.id);

  const std::vector<Polynomial> shifted = translate_all(generators, y.coords);
  EmbeddedVerdict v = is_origin_embedded(shifted, local, cfg);
  oracle.rng() = local.rng();
  v.point = y.coords;
  if (v.witness) {
    std::vector<Complex> back(n);
    for (std::size_t i = 0; i < n; ++i) back[i] = -y.coords[i];
    v.witness = v.witness->translate(back);
  }
  return v;
}

SlicedProblem slice_suspect(std::span<const Polynomial> generators, const ComponentSpec& suspect,
                            OracleHandle& oracle, const NumericalConfig& /*cfg*/) {
  const int k = suspect.geometric_dim();
  if (k < 1) throw PreconditionError("suspect has dimension 0: use is_point_embedded directly");
  if (!suspect.parametrized())
    throw PreconditionError("a positive-dimensional suspect needs a parametrization");
  if (generators.empty()) throw PreconditionError("no generators");
  const Ring& ring = generators.front().ring();
  const std::size_t n = ring->nvars();
  std::vector<Polynomial> gens(generators.begin(), generators.end());

  OracleHandle probe = oracle.with(gens, {suspect}, Point::origin(n));
  const Point p = probe.sample_anywhere(0);
  oracle.rng() = probe.rng();
  const AffinePlane plane = AffinePlane::random_through(p.coords, static_cast<std::size_t>(k),
                                                        oracle.rng());

  std::vector<Polynomial> sliced = gens;
  for (Eigen::Index r = 0; r < plane.a.rows(); ++r) {
    Polynomial l = Polynomial::constant(ring, -plane.b(r));
    for (std::size_t i = 0; i < n; ++i)
      l += Polynomial::variable(ring, i) * plane.a(r, static_cast<Eigen::Index>(i));
    sliced.push_back(std::move(l));
  }

  std::vector<ComponentSpec> comps;
  for (const auto& c : oracle.components()) {
    if (c.id == suspect.id) continue;
    const int dim = c.geometric_dim();
    if (dim > k) {
      ComponentSpec cut = c;
      cut.plane = c.plane ? AffinePlane::stack(*c.plane, plane) : plane;
      comps.push_back(std::move(cut));
    } else if (dim == k && c.parametrized()) {
      const AffinePlane full = c.plane ? AffinePlane::stack(*c.plane, plane) : plane;
      std::vector<std::vector<Complex>> points;
      for (int attempt = 0; attempt < 20; ++attempt) {
        std::vector<Complex> t(static_cast<std::size_t>(c.dim));
        for (auto& v : t) v = random_unit_disc(oracle.rng());
        auto solved = solve_on_component(c, full.a, full.b, t, 50, 1e-12);
        if (!solved) continue;
        std::vector<Complex> x = c.evaluate(*solved);
        const bool seen = std::any_of(points.begin(), points.end(), [&](const auto& q) {
          return distance(Point{q, 0.0}, Point{x, 0.0}) < 1e-6;
        });
        if (!seen) points.push_back(std::move(x));
      }
      if (!points.empty()) comps.push_back(ComponentSpec::from_points(c.id, std::move(points)));
    }
  }
  OracleHandle cut = oracle.with(sliced, std::move(comps), p);
  return SlicedProblem{std::move(sliced), p, std::move(cut), plane};
}

}  // namespace ecdetect

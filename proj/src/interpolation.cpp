#include "ecdetect/interpolation.hpp"

#include "ecdetect/dual_engine.hpp"
#include "ecdetect/errors.hpp"

namespace ecdetect {

namespace {

// The whole of D_x[F], which must be finite dimensional at x.
DualBasis full_local_dual(const Ring& ring, const std::vector<Polynomial>& generators,
                          const Point& x, const NumericalConfig& cfg) {
  DualEngine engine(ring, translate_all(generators, x.coords), cfg);
  for (int k = 1; k <= cfg.max_degree; ++k)
    if (engine.dim(k) == engine.dim(k - 1)) return engine.basis(k - 1, x.coords);
  throw InconclusiveError("local dual space at a sample point does not close by degree " +
                          std::to_string(cfg.max_degree));
}

std::vector<Polynomial> with_plane(std::vector<Polynomial> generators, const AffinePlane& l) {
  const Ring ring = generators.front().ring();
  for (Eigen::Index r = 0; r < l.a.rows(); ++r) {
    Polynomial form = Polynomial::constant(ring, -l.b(r));
    for (Eigen::Index j = 0; j < l.a.cols(); ++j)
      form += Polynomial::variable(ring, static_cast<std::size_t>(j)) * l.a(r, j);
    generators.push_back(std::move(form));
  }
  return generators;
}

}  // namespace

TruncationSpace interpolate_isolated(OracleHandle& oracle, const std::string& component, int e,
                                     const NumericalConfig& cfg) {
  if (e < 0) throw PreconditionError("negative interpolation degree");
  if (oracle.generators().empty()) throw PreconditionError("no generators");
  const std::size_t i = oracle.index_of(component);
  const int k = oracle.components()[i].geometric_dim();
  const Ring& ring = oracle.generators().front().ring();
  const MonomialBasis mons(ring->nvars(), 0, e, PrimalOrder::for_ring(*ring));
  const auto m = static_cast<Eigen::Index>(mons.size());

  Matrix kernel = Matrix::Identity(m, m);
  bool stable = false;
  for (int s = 0; s < cfg.max_samples && !stable; ++s) {
    const Point x = oracle.sample_anywhere(i);
    std::vector<Polynomial> gens = oracle.generators();
    if (k > 0)
      gens = with_plane(std::move(gens),
                        AffinePlane::random_through(x.coords, static_cast<std::size_t>(k),
                                                    oracle.rng()));
    const DualBasis dual = full_local_dual(ring, gens, x, cfg);
    const Matrix a = constraint_rows(dual, mons) * kernel;
    KernelResult ker = numerical_kernel(a, kernel.cols(), cfg.delta, 1.0);
    const bool grew = ker.basis.cols() < kernel.cols();
    kernel = kernel * ker.basis;
    stable = kernel.cols() == 0 || (s > 0 && !grew);
  }
  if (!stable)
    throw InconclusiveError("interpolation rank did not stabilize within " +
                            std::to_string(cfg.max_samples) + " samples");

  TruncationSpace out;
  out.ring = ring;
  out.d = e;
  out.e = e;
  out.certified = true;
  Echelon ech = reduced_echelon(kernel, primal_row_order(mons), cfg.pivot_tol);
  for (const auto& v : ech.vectors)
    out.basis.push_back(vector_to_polynomial(ring, v, mons, cfg.chop_tol));
  return out;
}

std::vector<std::size_t> dual_dims_of_truncated_ideal(const TruncationSpace& f, const Point& y,
                                                      int k, const NumericalConfig& cfg) {
  if (k < 0) throw PreconditionError("negative order");
  if (!f.ring) throw PreconditionError("truncation space without a ring");
  if (y.size() != f.ring->nvars()) throw PreconditionError("point dimension mismatch");
  std::vector<std::size_t> dims;
  if (f.basis.empty()) {
    std::size_t total = 0;
    for (int j = 0; j <= k; ++j) dims.push_back(total += count_monomials(f.ring->nvars(), j));
    return dims;
  }
  DualEngine engine(f.ring, translate_all(f.basis, y.coords), cfg);
  for (int j = 0; j <= k; ++j) dims.push_back(engine.dim(j));
  return dims;
}

}  // namespace ecdetect

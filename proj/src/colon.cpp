#include "ecdetect/colon.hpp"

#include <algorithm>

#include "ecdetect/errors.hpp"

namespace ecdetect {

Matrix multiplication_matrix(const Polynomial& g, const MonomialBasis& from,
                             const MonomialBasis& to) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(to.size()),
                          static_cast<Eigen::Index>(from.size()));
  for (std::size_t a = 0; a < to.size(); ++a) {
    for (const auto& [gamma, c] : g.terms()) {
      Exponent sum = to.at(a);
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += gamma[i];
      if (auto idx = from.index(sum))
        m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(*idx)) = c;
    }
  }
  return m;
}

DualBasis colon_dual(const DualBasis& basis, const Polynomial& g, const NumericalConfig& cfg) {
  DualBasis out;
  out.ring = basis.ring;
  out.basepoint = basis.basepoint;
  out.order = basis.order;
  out.reduced = true;
  out.ill_conditioned = basis.ill_conditioned;
  if (g.is_zero() || basis.functionals.empty()) return out;
  std::vector<DualFunctional> images;
  for (const auto& q : basis.functionals) {
    DualFunctional r = multiply(g, q);
    if (!r.is_zero()) images.push_back(std::move(r));
  }
  if (images.empty()) return out;
  MonomialBasis mons(basis.ring->nvars(), 0, basis.order, PrimalOrder::for_ring(*basis.ring));
  const double scale = g.coefficient_norm();
  Matrix m = to_matrix(images, mons) / scale;
  Matrix range = orthonormal_range(m, cfg.delta, 1.0);
  Echelon ech = reduced_echelon(range, dual_row_order(mons), cfg.pivot_tol);
  for (const auto& v : ech.vectors) {
    DualFunctional q(basis.ring, basis.basepoint);
    for (Eigen::Index r = 0; r < v.size(); ++r)
      if (std::abs(v(r)) > cfg.chop_tol) q.add_term(mons.at(static_cast<std::size_t>(r)), v(r));
    out.functionals.push_back(std::move(q));
  }
  return out;
}

HomogeneousColon::HomogeneousColon(GradedDualEngine& engine, const Polynomial& gh,
                                   const NumericalConfig& cfg)
    : engine_(engine), gh_(gh), e_(gh.degree()), cfg_(cfg) {
  if (gh.is_zero()) throw PreconditionError("colon by the zero polynomial");
  if (!gh.is_homogeneous()) throw PreconditionError("colon polynomial must be homogeneous");
  if (!(*gh.ring() == *engine.ring())) throw PreconditionError("colon polynomial ring mismatch");
  gh_ *= 1.0 / gh.coefficient_norm();
}

void HomogeneousColon::extend_to(int d) {
  while (static_cast<int>(pieces_.size()) <= d) {
    const int k = static_cast<int>(pieces_.size());
    engine_.extend_to(k + e_);  // keeps the references below stable
    const MonomialBasis& to = engine_.piece_monomials(k);
    const MonomialBasis& from = engine_.piece_monomials(k + e_);
    const Matrix& src = engine_.piece(k + e_);
    const Matrix mult = multiplication_matrix(gh_, from, to);
    pieces_.push_back(orthonormal_range(mult * src, cfg_.delta, 1.0));
    Echelon ech = reduced_echelon(pieces_.back(), dual_row_order(to), cfg_.pivot_tol);
    std::vector<Exponent> terms;
    for (auto p : ech.pivots) terms.push_back(to.at(static_cast<std::size_t>(p)));
    initial_.push_back(std::move(terms));
  }
}

const Matrix& HomogeneousColon::piece(int d) {
  extend_to(d);
  return pieces_[static_cast<std::size_t>(d)];
}

const std::vector<Exponent>& HomogeneousColon::initial_terms(int d) {
  extend_to(d);
  return initial_[static_cast<std::size_t>(d)];
}

std::vector<Exponent> HomogeneousColon::initial_ideal_part(int d) {
  const auto& standard = initial_terms(d);
  std::vector<Exponent> out;
  for (const auto& m : engine_.piece_monomials(d).monomials())
    if (std::find(standard.begin(), standard.end(), m) == standard.end()) out.push_back(m);
  return out;
}

bool ideal_membership(std::span<const Polynomial> generators, const Polynomial& g,
                      const NumericalConfig& cfg) {
  if (generators.empty()) throw PreconditionError("no generators");
  return ideal_membership(generators, g, Point::origin(generators.front().nvars()), cfg);
}

bool ideal_membership(std::span<const Polynomial> generators, const Polynomial& g, const Point& y,
                      const NumericalConfig& cfg) {
  if (generators.empty()) throw PreconditionError("no generators");
  const Ring& ring = generators.front().ring();
  if (!(*g.ring() == *ring)) throw PreconditionError("polynomial ring mismatch");
  check_on_variety(generators, y.coords, cfg);
  if (g.is_zero()) return true;

  std::vector<Polynomial> f = translate_all(generators, y.coords);
  const Polynomial gt = g.translate(y.coords);
  std::vector<Polynomial> fg = f;
  fg.push_back(gt);
  DualEngine dual_i(ring, f, cfg);
  DualEngine dual_ig(ring, fg, cfg);

  const Ring hring = homogenized_ring(ring);
  std::vector<Polynomial> fh;
  for (const auto& p : f)
    if (!p.is_zero()) fh.push_back(homogenize(p, hring));
  GradedDualEngine graded(hring, fh, cfg);
  HomogeneousColon colon(graded, homogenize(gt, hring), cfg);

  const std::size_t h = hring->h_index();
  for (int d = 0; d <= cfg.max_degree; ++d) {
    if (dual_i.dim(d) != dual_ig.dim(d)) return false;
    Exponent hd(hring->nvars(), 0);
    hd[h] = d;
    const auto& standard = colon.initial_terms(d);
    if (std::find(standard.begin(), standard.end(), hd) == standard.end()) return true;
  }
  throw InconclusiveError("membership undecided up to degree " + std::to_string(cfg.max_degree));
}

}  // namespace ecdetect

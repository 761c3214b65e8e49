#include "ecdetect/dual_engine.hpp"

#include <cmath>

#include "ecdetect/errors.hpp"

namespace ecdetect {

std::vector<Polynomial> translate_all(std::span<const Polynomial> generators,
                                      std::span<const Complex> y) {
  std::vector<Polynomial> out;
  out.reserve(generators.size());
  for (const auto& f : generators) out.push_back(f.translate(y));
  return out;
}

namespace {

// Whether some generator is a unit at the origin, i.e. the dual space is {0}.
bool has_unit(const std::vector<Polynomial>& gens, const NumericalConfig& cfg) {
  for (const auto& f : gens) {
    if (f.is_zero()) continue;
    const Complex c0 = f.coefficient(Exponent(f.nvars(), 0));
    if (std::abs(c0) >= cfg.residual_tol * (1.0 + f.coefficient_norm())) return true;
  }
  return false;
}

void drop_zeros(std::vector<Polynomial>& gens, std::vector<double>& norms) {
  std::vector<Polynomial> kept;
  for (auto& f : gens)
    if (!f.is_zero()) kept.push_back(std::move(f));
  gens = std::move(kept);
  norms.clear();
  for (const auto& f : gens) norms.push_back(f.coefficient_norm());
}

// Rows C^* S_j for every variable j: q -> component of x_j . q outside the
// previous space. `prev_mons` indexes the coordinates of `complement`.
void fill_closure_rows(Matrix& a, const Matrix& complement, const MonomialBasis& prev_mons,
                       const MonomialBasis& mons) {
  const Eigen::Index c = complement.cols();
  if (c == 0) return;
  const std::size_t n = mons.nvars();
  for (std::size_t g = 0; g < mons.size(); ++g) {
    Exponent e = mons.at(g);
    for (std::size_t j = 0; j < n; ++j) {
      if (e[j] == 0) continue;
      --e[j];
      auto idx = prev_mons.index(e);
      ++e[j];
      if (!idx) continue;
      a.block(static_cast<Eigen::Index>(j) * c, static_cast<Eigen::Index>(g), c, 1) =
          complement.row(static_cast<Eigen::Index>(*idx)).adjoint();
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------

DualEngine::DualEngine(Ring ring, std::vector<Polynomial> generators, const NumericalConfig& cfg)
    : ring_(std::move(ring)), generators_(std::move(generators)), cfg_(cfg) {
  for (const auto& f : generators_)
    if (!(*f.ring() == *ring_)) throw PreconditionError("generator ring mismatch");
  const bool unit = has_unit(generators_, cfg_);
  drop_zeros(generators_, norms_);
  const PrimalOrder ord = PrimalOrder::for_ring(*ring_);
  monomials_.emplace_back(ring_->nvars(), 0, 0, ord);
  bases_.push_back(unit ? Matrix(1, 0) : Matrix::Identity(1, 1));
}

void DualEngine::extend_to(int k) {
  const PrimalOrder ord = PrimalOrder::for_ring(*ring_);
  const std::size_t n = ring_->nvars();
  while (computed_order() < k) {
    const int i = computed_order() + 1;
    const Matrix& prev = bases_.back();
    const MonomialBasis& prev_mons = monomials_.back();
    MonomialBasis mons(n, 0, i, ord);
    const auto m = static_cast<Eigen::Index>(mons.size());
    if (prev.cols() == 0) {
      bases_.push_back(Matrix(m, 0));
      monomials_.push_back(std::move(mons));
      continue;
    }
    Matrix complement = orthogonal_complement(prev);
    const Eigen::Index c = complement.cols();
    const auto nf = static_cast<Eigen::Index>(generators_.size());
    Matrix a = Matrix::Zero(static_cast<Eigen::Index>(n) * c + nf, m);
    fill_closure_rows(a, complement, prev_mons, mons);
    for (Eigen::Index t = 0; t < nf; ++t) {
      const auto& f = generators_[static_cast<std::size_t>(t)];
      for (const auto& [e, coef] : f.terms()) {
        if (total_degree(e) > i) continue;
        a(static_cast<Eigen::Index>(n) * c + t, static_cast<Eigen::Index>(*mons.index(e))) =
            coef / norms_[static_cast<std::size_t>(t)];
      }
    }
    KernelResult ker = numerical_kernel(a, m, cfg_.delta, 1.0);
    ill_conditioned_ = ill_conditioned_ || ker.ill_conditioned;
    bases_.push_back(std::move(ker.basis));
    monomials_.push_back(std::move(mons));
  }
}

std::size_t DualEngine::dim(int k) {
  extend_to(k);
  return static_cast<std::size_t>(bases_[static_cast<std::size_t>(k)].cols());
}

const Matrix& DualEngine::dense(int k) {
  extend_to(k);
  return bases_[static_cast<std::size_t>(k)];
}

const MonomialBasis& DualEngine::monomials(int k) {
  extend_to(k);
  return monomials_[static_cast<std::size_t>(k)];
}

DualBasis DualEngine::basis(int k, std::span<const Complex> basepoint) {
  extend_to(k);
  const Matrix& dense = bases_[static_cast<std::size_t>(k)];
  const MonomialBasis& mons = monomials_[static_cast<std::size_t>(k)];
  DualBasis out;
  out.ring = ring_;
  out.basepoint.assign(basepoint.begin(), basepoint.end());
  out.order = k;
  out.reduced = true;
  out.ill_conditioned = ill_conditioned_;
  auto rows = dual_row_order(mons);
  Echelon ech = reduced_echelon(dense, rows, cfg_.pivot_tol);
  for (const auto& v : ech.vectors) {
    DualFunctional q(ring_, out.basepoint);
    for (Eigen::Index r = 0; r < v.size(); ++r)
      if (std::abs(v(r)) > cfg_.chop_tol) q.add_term(mons.at(static_cast<std::size_t>(r)), v(r));
    out.functionals.push_back(std::move(q));
  }
  return out;
}

// ---------------------------------------------------------------------------

GradedDualEngine::GradedDualEngine(Ring ring, std::vector<Polynomial> generators,
                                   const NumericalConfig& cfg)
    : ring_(std::move(ring)),
      ord_(PrimalOrder::for_ring(*ring_)),
      generators_(std::move(generators)),
      cfg_(cfg) {
  for (const auto& f : generators_) {
    if (!(*f.ring() == *ring_)) throw PreconditionError("generator ring mismatch");
    if (!f.is_homogeneous()) throw PreconditionError("graded completion needs homogeneous generators");
  }
  const bool unit = has_unit(generators_, cfg_);
  drop_zeros(generators_, norms_);
  monomials_.emplace_back(ring_->nvars(), 0, 0, ord_);
  pieces_.push_back(unit ? Matrix(1, 0) : Matrix::Identity(1, 1));
  initial_terms_.emplace_back();
  have_initial_.push_back(false);
}

void GradedDualEngine::extend_to(int k) {
  const std::size_t n = ring_->nvars();
  while (computed_degree() < k) {
    const int i = computed_degree() + 1;
    const Matrix& prev = pieces_.back();
    const MonomialBasis& prev_mons = monomials_.back();
    MonomialBasis mons(n, i, i, ord_);
    const auto m = static_cast<Eigen::Index>(mons.size());
    initial_terms_.emplace_back();
    have_initial_.push_back(false);
    if (prev.cols() == 0) {
      pieces_.push_back(Matrix(m, 0));
      monomials_.push_back(std::move(mons));
      continue;
    }
    Matrix complement = orthogonal_complement(prev);
    const Eigen::Index c = complement.cols();
    std::vector<std::size_t> active;
    for (std::size_t t = 0; t < generators_.size(); ++t)
      if (generators_[t].degree() == i) active.push_back(t);
    const auto nf = static_cast<Eigen::Index>(active.size());
    Matrix a = Matrix::Zero(static_cast<Eigen::Index>(n) * c + nf, m);
    fill_closure_rows(a, complement, prev_mons, mons);
    for (Eigen::Index r = 0; r < nf; ++r) {
      const std::size_t t = active[static_cast<std::size_t>(r)];
      for (const auto& [e, coef] : generators_[t].terms())
        a(static_cast<Eigen::Index>(n) * c + r, static_cast<Eigen::Index>(*mons.index(e))) =
            coef / norms_[t];
    }
    KernelResult ker = numerical_kernel(a, m, cfg_.delta, 1.0);
    ill_conditioned_ = ill_conditioned_ || ker.ill_conditioned;
    pieces_.push_back(std::move(ker.basis));
    monomials_.push_back(std::move(mons));
  }
}

std::size_t GradedDualEngine::piece_dim(int i) {
  extend_to(i);
  return static_cast<std::size_t>(pieces_[static_cast<std::size_t>(i)].cols());
}

std::size_t GradedDualEngine::dim(int k) {
  std::size_t s = 0;
  for (int i = 0; i <= k; ++i) s += piece_dim(i);
  return s;
}

const Matrix& GradedDualEngine::piece(int i) {
  extend_to(i);
  return pieces_[static_cast<std::size_t>(i)];
}

const MonomialBasis& GradedDualEngine::piece_monomials(int i) {
  extend_to(i);
  return monomials_[static_cast<std::size_t>(i)];
}

const std::vector<Exponent>& GradedDualEngine::piece_initial_terms(int i) {
  extend_to(i);
  const auto idx = static_cast<std::size_t>(i);
  if (!have_initial_[idx]) {
    const MonomialBasis& mons = monomials_[idx];
    Echelon ech = reduced_echelon(pieces_[idx], dual_row_order(mons), cfg_.pivot_tol);
    for (auto p : ech.pivots) initial_terms_[idx].push_back(mons.at(static_cast<std::size_t>(p)));
    have_initial_[idx] = true;
  }
  return initial_terms_[idx];
}

DualBasis GradedDualEngine::basis(int k) {
  extend_to(k);
  DualBasis out;
  out.ring = ring_;
  out.basepoint.assign(ring_->nvars(), 0.0);
  out.order = k;
  out.reduced = true;
  out.ill_conditioned = ill_conditioned_;
  for (int i = k; i >= 0; --i) {
    const auto idx = static_cast<std::size_t>(i);
    const MonomialBasis& mons = monomials_[idx];
    Echelon ech = reduced_echelon(pieces_[idx], dual_row_order(mons), cfg_.pivot_tol);
    for (const auto& v : ech.vectors) {
      DualFunctional q(ring_, out.basepoint);
      for (Eigen::Index r = 0; r < v.size(); ++r)
        if (std::abs(v(r)) > cfg_.chop_tol) q.add_term(mons.at(static_cast<std::size_t>(r)), v(r));
      out.functionals.push_back(std::move(q));
    }
  }
  return out;
}

}  // namespace ecdetect

#include "ecdetect/dual_space.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ecdetect/dual_engine.hpp"
#include "ecdetect/errors.hpp"

namespace ecdetect {

double distance(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw PreconditionError("point dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a.coords[i] - b.coords[i]);
  return std::sqrt(s);
}

// ---------------------------------------------------------------------------
// DualFunctional

DualFunctional::DualFunctional(Ring ring, std::vector<Complex> basepoint)
    : ring_(std::move(ring)),
      basepoint_(std::move(basepoint)),
      terms_(DualGreater{PrimalOrder::for_ring(*ring_)}) {
  if (basepoint_.size() != ring_->nvars()) throw PreconditionError("basepoint dimension mismatch");
}

void DualFunctional::add_term(const Exponent& e, Complex c) {
  if (e.size() != ring_->nvars()) throw PreconditionError("exponent length mismatch");
  if (c == Complex(0.0)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex(0.0)) terms_.erase(it);
  }
}

Complex DualFunctional::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

int DualFunctional::order() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

Exponent DualFunctional::initial_term() const {
  if (terms_.empty()) throw PreconditionError("initial term of the zero functional");
  return terms_.begin()->first;
}

DualFunctional& DualFunctional::operator+=(const DualFunctional& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

DualFunctional& DualFunctional::operator*=(Complex c) {
  if (c == Complex(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

std::string DualFunctional::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    bool negative = c.imag() == 0.0 && c.real() < 0.0;
    Complex coef = negative ? -c : c;
    if (s.empty())
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    if (coef != Complex(1.0)) s += format_complex(coef) + "*";
    s += "d[" + format_monomial(e, *ring_) + "]";
  }
  return s;
}

std::vector<Exponent> DualBasis::initial_terms() const {
  std::vector<Exponent> out;
  for (const auto& q : functionals)
    if (!q.is_zero()) out.push_back(q.initial_term());
  return out;
}

// ---------------------------------------------------------------------------
// Pairing and module action

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace

Complex apply(const DualFunctional& q, const Polynomial& f) {
  if (!(*q.ring() == *f.ring())) throw PreconditionError("functional and polynomial rings differ");
  const auto& y = q.basepoint();
  Complex total = 0.0;
  for (const auto& [alpha, c] : q.terms()) {
    Complex v = 0.0;
    for (const auto& [gamma, fc] : f.terms()) {
      if (!divides(alpha, gamma)) continue;
      Complex t = fc;
      for (std::size_t i = 0; i < gamma.size(); ++i) {
        t *= binomial(gamma[i], alpha[i]);
        for (int k = alpha[i]; k < gamma[i]; ++k) t *= y[i];
      }
      v += t;
    }
    total += c * v;
  }
  return total;
}

namespace {

// (x - y)^beta . q : d^alpha -> d^{alpha - beta}
DualFunctional shift(const DualFunctional& q, const Exponent& beta) {
  DualFunctional r(q.ring(), q.basepoint());
  for (const auto& [alpha, c] : q.terms()) {
    if (!divides(beta, alpha)) continue;
    Exponent d(alpha.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = alpha[i] - beta[i];
    r.add_term(d, c);
  }
  return r;
}

}  // namespace

DualFunctional differentiate(const DualFunctional& q, std::size_t i) {
  if (i >= q.ring()->nvars()) throw PreconditionError("variable index out of range");
  DualFunctional r = shift(q, unit_exponent(q.ring()->nvars(), i));
  const Complex yi = q.basepoint()[i];
  if (yi != Complex(0.0)) {
    DualFunctional scaled = q;
    scaled *= yi;
    r += scaled;
  }
  return r;
}

DualFunctional multiply(const Polynomial& g, const DualFunctional& q) {
  if (!(*q.ring() == *g.ring())) throw PreconditionError("functional and polynomial rings differ");
  Polynomial local = g.translate(q.basepoint());
  DualFunctional r(q.ring(), q.basepoint());
  for (const auto& [beta, c] : local.terms()) {
    DualFunctional t = shift(q, beta);
    t *= c;
    r += t;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Truncated dual spaces

void check_on_variety(std::span<const Polynomial> generators, std::span<const Complex> y,
                      const NumericalConfig& cfg) {
  for (const auto& f : generators) {
    if (f.nvars() != y.size()) throw PreconditionError("point dimension mismatch");
    const double r = std::abs(f.evaluate(y));
    if (r >= cfg.residual_tol * (1.0 + f.coefficient_norm()))
      throw NotOnVarietyError("point is not on the variety: |f(y)| = " + std::to_string(r) +
                                  " for f = " + f.to_string(),
                              r);
  }
}

Matrix to_matrix(const std::vector<DualFunctional>& functionals, const MonomialBasis& monomials) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(monomials.size()),
                          static_cast<Eigen::Index>(functionals.size()));
  for (std::size_t j = 0; j < functionals.size(); ++j) {
    for (const auto& [e, c] : functionals[j].terms()) {
      auto idx = monomials.index(e);
      if (!idx) throw PreconditionError("functional term outside the monomial basis");
      m(static_cast<Eigen::Index>(*idx), static_cast<Eigen::Index>(j)) = c;
    }
  }
  return m;
}

std::vector<Eigen::Index> primal_row_order(const MonomialBasis& monomials) {
  std::vector<Eigen::Index> rows(monomials.size());
  std::iota(rows.begin(), rows.end(), Eigen::Index{0});
  return rows;
}

std::vector<Eigen::Index> dual_row_order(const MonomialBasis& monomials) {
  std::vector<Eigen::Index> rows = primal_row_order(monomials);
  std::reverse(rows.begin(), rows.end());
  return rows;
}

DualBasis truncated_dual(std::span<const Polynomial> generators, const Point& y, int k,
                         const NumericalConfig& cfg) {
  if (k < 0) throw PreconditionError("negative truncation order");
  if (generators.empty()) throw PreconditionError("no generators");
  check_on_variety(generators, y.coords, cfg);
  DualEngine engine(generators.front().ring(), translate_all(generators, y.coords), cfg);
  return engine.basis(k, y.coords);
}

DualBasis reduce_basis(const DualBasis& basis, const NumericalConfig& cfg) {
  DualBasis out = basis;
  out.reduced = true;
  out.functionals.clear();
  if (basis.functionals.empty()) return out;
  int order = 0;
  for (const auto& q : basis.functionals) order = std::max(order, q.order());
  MonomialBasis mons(basis.ring->nvars(), 0, order, PrimalOrder::for_ring(*basis.ring));
  Matrix m = to_matrix(basis.functionals, mons);
  Matrix range = orthonormal_range(m, cfg.delta);
  if (range.cols() < m.cols()) throw PreconditionError("dual basis elements are linearly dependent");
  auto rows = dual_row_order(mons);
  Echelon ech = reduced_echelon(range, rows, cfg.pivot_tol);
  for (const auto& v : ech.vectors) {
    DualFunctional q(basis.ring, basis.basepoint);
    for (Eigen::Index r = 0; r < v.size(); ++r)
      if (std::abs(v(r)) > cfg.chop_tol) q.add_term(mons.at(static_cast<std::size_t>(r)), v(r));
    out.functionals.push_back(std::move(q));
  }
  return out;
}

}  // namespace ecdetect

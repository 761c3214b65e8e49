#include "ecdetect/linalg.hpp"

#include <lapacke.h>

#include <algorithm>

#include "ecdetect/errors.hpp"

namespace ecdetect {

std::size_t count_monomials(std::size_t nvars, int degree) {
  if (degree < 0) return 0;
  if (nvars == 0) return degree == 0 ? 1 : 0;
  // C(degree + nvars - 1, nvars - 1)
  std::size_t r = 1;
  for (std::size_t j = 1; j < nvars; ++j) r = r * (static_cast<std::size_t>(degree) + j) / j;
  return r;
}

namespace {

// Eigen 3.4's BDCSVD loses singular vectors on some complex inputs, so the
// decomposition goes through LAPACK's zgesdd.
struct Svd {
  Eigen::VectorXd s;
  Matrix u;  // thin
  Matrix v;  // full
};

Svd lapack_svd(Matrix a, bool want_u, bool want_v) {
  const auto m = static_cast<lapack_int>(a.rows());
  const auto n = static_cast<lapack_int>(a.cols());
  const lapack_int k = std::min(m, n);
  Svd out;
  out.s.resize(k);
  char job = 'N';
  Matrix u, vt;
  if (want_v) {
    job = 'A';
    u.resize(m, m);
    vt.resize(n, n);
  } else if (want_u) {
    job = 'S';
    u.resize(m, k);
    vt.resize(k, n);
  }
  const lapack_int info = LAPACKE_zgesdd(
      LAPACK_COL_MAJOR, job, m, n, reinterpret_cast<lapack_complex_double*>(a.data()),
      std::max<lapack_int>(1, m), out.s.data(),
      reinterpret_cast<lapack_complex_double*>(u.data()), std::max<lapack_int>(1, m),
      reinterpret_cast<lapack_complex_double*>(vt.data()),
      std::max<lapack_int>(1, static_cast<lapack_int>(vt.rows())));
  if (info != 0) throw Error("singular value decomposition failed to converge");
  if (want_u) out.u = u.leftCols(k);
  if (want_v) out.v = vt.adjoint();
  return out;
}

void enumerate(std::size_t nvars, std::size_t var, int left, Exponent& cur,
               std::vector<Exponent>& out) {
  if (var + 1 == nvars) {
    cur[var] = left;
    out.push_back(cur);
    return;
  }
  for (int a = left; a >= 0; --a) {
    cur[var] = a;
    enumerate(nvars, var + 1, left - a, cur, out);
  }
}
}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree, const PrimalOrder& ord) {
  std::vector<Exponent> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponent cur(nvars, 0);
  enumerate(nvars, 0, degree, cur, out);
  std::sort(out.begin(), out.end(),
            [&](const Exponent& a, const Exponent& b) { return ord.greater(a, b); });
  return out;
}

MonomialBasis::MonomialBasis(std::size_t nvars, int min_degree, int max_degree,
                             const PrimalOrder& ord)
    : nvars_(nvars), min_degree_(min_degree), max_degree_(max_degree) {
  for (int d = std::max(min_degree, 0); d <= max_degree; ++d) {
    for (auto& e : monomials_of_degree(nvars, d, ord)) {
      index_.emplace(e, monomials_.size());
      monomials_.push_back(std::move(e));
    }
    degree_end_.push_back(monomials_.size());
  }
}

std::optional<std::size_t> MonomialBasis::index(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t MonomialBasis::prefix_size(int d) const {
  if (d < min_degree_) return 0;
  if (d >= max_degree_) return monomials_.size();
  return degree_end_[static_cast<std::size_t>(d - std::max(min_degree_, 0))];
}

KernelResult numerical_kernel(const Matrix& a, Eigen::Index ncols, double delta,
                              double scale_floor) {
  KernelResult r;
  if (a.rows() == 0 || ncols == 0) {
    r.basis = Matrix::Identity(ncols, ncols);
    return r;
  }
  // Tall matrices: the singular values and right singular vectors of A equal
  // those of R from A = QR.
  Matrix work;
  if (a.rows() > 2 * a.cols()) {
    Eigen::HouseholderQR<Matrix> qr(a);
    work = qr.matrixQR().topRows(a.cols()).triangularView<Eigen::Upper>();
  } else {
    work = a;
  }
  const Svd svd = lapack_svd(std::move(work), false, true);
  const auto& s = svd.s;
  const double smax = s.size() > 0 ? s(0) : 0.0;
  Eigen::Index rank = 0;
  if (smax > 0.0) {
    const double thr = delta * std::max(smax, scale_floor);
    while (rank < s.size() && s(rank) > thr) ++rank;
    if (rank > 0 && s(rank - 1) < 10.0 * thr) r.ill_conditioned = true;
    if (rank < s.size() && s(rank) > thr / 10.0) r.ill_conditioned = true;
  }
  r.rank = rank;
  r.basis = svd.v.rightCols(ncols - rank);
  return r;
}

Matrix orthonormal_range(const Matrix& columns, double delta, double scale_floor) {
  if (columns.cols() == 0 || columns.rows() == 0) return Matrix(columns.rows(), 0);
  const Svd svd = lapack_svd(columns, true, false);
  const auto& s = svd.s;
  if (s.size() == 0 || s(0) == 0.0) return Matrix(columns.rows(), 0);
  Eigen::Index rank = 0;
  const double thr = delta * std::max(s(0), scale_floor);
  while (rank < s.size() && s(rank) > thr) ++rank;
  return svd.u.leftCols(rank);
}

Matrix orthogonal_complement(const Matrix& orthonormal) {
  const Eigen::Index n = orthonormal.rows();
  const Eigen::Index r = orthonormal.cols();
  if (r == 0) return Matrix::Identity(n, n);
  Eigen::HouseholderQR<Matrix> qr(orthonormal);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  return q.rightCols(n - r);
}

Echelon reduced_echelon(const Matrix& basis, std::span<const Eigen::Index> row_order,
                        double pivot_tol) {
  Echelon out;
  if (basis.cols() == 0) return out;
  Eigen::HouseholderQR<Matrix> qr(basis);
  Matrix rem = qr.householderQ() * Matrix::Identity(basis.rows(), basis.cols());

  for (Eigen::Index row : row_order) {
    if (rem.cols() == 0) break;
    Eigen::RowVectorXcd r = rem.row(row);
    const double nrm = r.norm();
    if (nrm <= pivot_tol) continue;
    Vector w = r.adjoint() / nrm;
    Vector v = rem * w;
    v /= v(row);
    out.pivots.push_back(row);
    out.vectors.push_back(std::move(v));
    // Restrict the remaining subspace to vectors vanishing at this pivot.
    Matrix wm = w;
    Eigen::HouseholderQR<Matrix> hq(wm);
    Matrix h = hq.householderQ() * Matrix::Identity(w.size(), w.size());
    rem = rem * h.rightCols(w.size() - 1);
  }

  // Rows ahead of a pivot were below pivot_tol when it was chosen: echelon zeros.
  std::size_t next = 0;
  std::vector<Eigen::Index> ahead;
  for (Eigen::Index row : row_order) {
    if (next == out.pivots.size()) break;
    if (row == out.pivots[next]) {
      for (Eigen::Index a : ahead) out.vectors[next](a) = 0.0;
      ++next;
    }
    ahead.push_back(row);
  }

  for (std::size_t i = 0; i < out.vectors.size(); ++i) {
    Vector& v = out.vectors[i];
    for (std::size_t k = 0; k < i; ++k) v(out.pivots[k]) = 0.0;
    for (std::size_t k = i + 1; k < out.vectors.size(); ++k) {
      const Complex c = v(out.pivots[k]);
      if (c != Complex(0.0)) v -= c * out.vectors[k];
      v(out.pivots[k]) = 0.0;
    }
    v(out.pivots[i]) = 1.0;
  }
  return out;
}

}  // namespace ecdetect

#include "ecdetect/deflation.hpp"

#include <algorithm>
#include <cmath>

#include "ecdetect/errors.hpp"

namespace ecdetect {

namespace {

std::vector<Exponent> graded_lex(std::size_t n, int max_degree) {
  std::vector<Exponent> out;
  for (int k = 0; k <= max_degree; ++k) {
    auto level = monomials_of_degree(n, k);
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::string a_name(const Exponent& beta, const RingContext& base) {
  std::string name = "a";
  for (int b : beta) name += "_" + std::to_string(b);
  while (base.index_of(name)) name = "_" + name;
  return name;
}

}  // namespace

DeflationSystem deflate(std::span<const Polynomial> generators, int d) {
  if (d < 1) throw PreconditionError("deflation order must be at least 1");
  if (generators.empty()) throw PreconditionError("no generators");
  const Ring& base = generators.front().ring();
  const std::size_t n = base->nvars();

  DeflationSystem sys;
  sys.nx = n;
  sys.order = d;
  sys.a_exponents = graded_lex(n, d);
  std::vector<std::string> names = base->names();
  for (const auto& beta : sys.a_exponents) names.push_back(a_name(beta, *base));
  sys.ring = make_ring(std::move(names));

  std::vector<std::size_t> var_map(n);
  for (std::size_t i = 0; i < n; ++i) var_map[i] = i;
  for (const auto& f : generators) sys.generators.push_back(f.embed(sys.ring, var_map));
  for (const auto& alpha : graded_lex(n, d - 1)) {
    const Polynomial xa = Polynomial::monomial(base, alpha);
    for (const auto& f : generators) {
      const Polynomial p = xa * f;
      Polynomial q(sys.ring);
      for (std::size_t j = 0; j < sys.na(); ++j) {
        const Polynomial dp = p.derivative(sys.a_exponents[j]);
        if (dp.is_zero()) continue;
        q += dp.embed(sys.ring, var_map) * Polynomial::variable(sys.ring, n + j);
      }
      sys.generators.push_back(std::move(q));
    }
  }
  return sys;
}

std::size_t fiber_dual_dim(std::span<const Polynomial> generators, const Point& x, int d,
                           const NumericalConfig& cfg) {
  check_on_variety(generators, x.coords, cfg);
  const DeflationSystem sys = deflate(generators, d);
  const std::size_t n = sys.nx;
  const auto na = static_cast<Eigen::Index>(sys.na());
  const auto extra = sys.generators.size() - generators.size();
  Matrix a = Matrix::Zero(static_cast<Eigen::Index>(extra), na);
  double radius = 1.0;
  for (const auto& c : x.coords) radius = std::max(radius, std::abs(c));
  for (std::size_t r = 0; r < extra; ++r) {
    const Polynomial& g = sys.generators[generators.size() + r];
    for (const auto& [e, c] : g.terms()) {
      Complex v = c;
      for (std::size_t i = 0; i < n; ++i)
        for (int p = 0; p < e[i]; ++p) v *= x.coords[i];
      const auto col = std::find(e.begin() + static_cast<std::ptrdiff_t>(n), e.end(), 1) - e.begin();
      a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col - static_cast<std::ptrdiff_t>(n))) += v;
    }
    // Scale by the size of the row's polynomial rather than the row itself,
    // so that rows which vanish up to round-off stay negligible.
    const double scale = g.coefficient_norm() * std::pow(radius, g.degree());
    if (scale > 0) a.row(static_cast<Eigen::Index>(r)) /= scale;
  }
  const KernelResult ker = numerical_kernel(a, na, cfg.delta, 1.0);
  return static_cast<std::size_t>(ker.basis.cols());
}

}  // namespace ecdetect

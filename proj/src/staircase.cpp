#include "ecdetect/staircase.hpp"

#include <algorithm>

#include "ecdetect/dual_engine.hpp"
#include "ecdetect/errors.hpp"

namespace ecdetect {

bool Staircase::in_ideal(const Exponent& m) const {
  return std::any_of(gcorners.begin(), gcorners.end(),
                     [&](const Exponent& g) { return divides(g, m); });
}

int Staircase::dimension() const {
  int best = 0;
  const std::size_t n = nvars;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    bool free = true;
    for (const auto& g : gcorners) {
      bool supported = true;
      for (std::size_t i = 0; i < n; ++i)
        if (g[i] > 0 && !(mask & (std::size_t{1} << i))) supported = false;
      if (supported) {
        free = false;
        break;
      }
    }
    if (free) best = std::max(best, static_cast<int>(__builtin_popcountll(mask)));
  }
  return best;
}

Staircase monomial_staircase(std::size_t nvars, std::vector<Exponent> monomials) {
  Staircase st;
  st.nvars = nvars;
  PrimalOrder ord;
  std::sort(monomials.begin(), monomials.end(),
            [&](const Exponent& a, const Exponent& b) { return ord.greater(a, b); });
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  for (const auto& m : monomials) {
    if (m.size() != nvars) throw PreconditionError("exponent length mismatch");
    if (!st.in_ideal(m)) st.gcorners.push_back(m);
  }
  return st;
}

long long hilbert_function(std::span<const Polynomial> generators, const Point& y, int k,
                           const NumericalConfig& cfg) {
  if (k < 0) return 0;
  auto values = hilbert_values(generators, y, k, cfg);
  return values.back();
}

std::vector<long long> hilbert_values(std::span<const Polynomial> generators, const Point& y,
                                      int k, const NumericalConfig& cfg) {
  if (generators.empty()) throw PreconditionError("no generators");
  check_on_variety(generators, y.coords, cfg);
  DualEngine engine(generators.front().ring(), translate_all(generators, y.coords), cfg);
  std::vector<long long> out;
  long long prev = 0;
  for (int i = 0; i <= k; ++i) {
    const auto d = static_cast<long long>(engine.dim(i));
    out.push_back(d - prev);
    prev = d;
  }
  return out;
}

Staircase gcorners(std::span<const Polynomial> generators, const Point& y,
                   const NumericalConfig& cfg) {
  if (generators.empty()) throw PreconditionError("no generators");
  check_on_variety(generators, y.coords, cfg);
  const Ring& base = generators.front().ring();
  const Ring hring = homogenized_ring(base);
  const std::vector<Polynomial> local = translate_all(generators, y.coords);
  std::vector<Polynomial> hom;
  int maxdeg = 0;
  for (const auto& f : local) {
    if (f.is_zero()) continue;
    hom.push_back(homogenize(f, hring));
    maxdeg = std::max(maxdeg, f.degree());
  }
  GradedDualEngine engine(hring, hom, cfg);
  DualEngine dual(base, local, cfg);

  // Corners of in(<F^h>) and, separately, the minimal generators of their
  // dehomogenized images. Only the latter decide when to stop: corners coming
  // from components away from y keep appearing in R[h] but dehomogenize to
  // multiples of corners already known.
  std::vector<long long> hf;
  auto hilbert = [&](int j) {
    while (static_cast<int>(hf.size()) <= j) {
      const int i = static_cast<int>(hf.size());
      hf.push_back(static_cast<long long>(dual.dim(i)) -
                   (i > 0 ? static_cast<long long>(dual.dim(i - 1)) : 0));
    }
    return hf[static_cast<std::size_t>(j)];
  };
  auto at_least_hilbert = [&](const Staircase& m, int from, int to) {
    for (int j = from; j <= to; ++j)
      if (count_standard(m, j) < hilbert(j)) return false;
    return true;
  };

  std::vector<Exponent> hcorners;
  Staircase st;
  st.nvars = base->nvars();
  int last_new = 0;
  bool complete = false;
  int k = 0;
  for (; k <= cfg.max_degree; ++k) {
    const auto& initial = engine.piece_initial_terms(k);
    const auto& mons = engine.piece_monomials(k);
    bool found = false;
    for (const auto& m : mons.monomials()) {
      if (std::find(initial.begin(), initial.end(), m) != initial.end()) continue;
      if (std::any_of(hcorners.begin(), hcorners.end(),
                      [&](const Exponent& g) { return divides(g, m); }))
        continue;
      hcorners.push_back(m);
      const Exponent x = dehomogenize(m, *hring);
      if (st.in_ideal(x)) continue;
      Staircase trial = st;
      std::erase_if(trial.gcorners, [&](const Exponent& g) { return divides(x, g); });
      trial.gcorners.push_back(x);
      // in(I) contains the staircase, so no degree may have fewer standard
      // monomials than H_I; a candidate breaking this is a misread pivot.
      if (!at_least_hilbert(trial, total_degree(x), std::min(k, total_degree(x) + 2))) continue;
      st = std::move(trial);
      found = true;
    }
    if (found) last_new = k;
    if (engine.piece_dim(k) == 0) {
      complete = true;
      break;
    }
    if (k >= maxdeg + cfg.corner_confirm && k - last_new > cfg.corner_confirm) {
      // Cross-check the staircase against the local Hilbert function in the
      // degrees where corners were found.
      bool consistent = true;
      for (int j = 0; j <= last_new + cfg.corner_confirm && consistent; ++j)
        consistent = count_standard(st, j) == hilbert(j);
      if (consistent) {
        complete = true;
        break;
      }
    }
  }

  st = monomial_staircase(base->nvars(), std::move(st.gcorners));
  st.degree_reached = std::min(k, cfg.max_degree);
  if (!complete)
    throw IncompleteStaircaseError(
        "staircase incomplete at degree " + std::to_string(cfg.max_degree), st.gcorners);
  return st;
}

std::vector<Exponent> scorners(const Staircase& st, int bound) {
  const std::size_t n = st.nvars;
  std::vector<int> box(n, -1);
  for (const auto& g : st.gcorners)
    for (std::size_t i = 0; i < n; ++i) box[i] = std::max(box[i], g[i] - 1);
  std::vector<Exponent> out;
  if (n == 0 || std::any_of(box.begin(), box.end(), [](int b) { return b < 0; })) return out;
  Exponent m(n, 0);
  for (;;) {
    if (total_degree(m) <= bound && st.is_standard(m)) {
      bool socle = true;
      for (std::size_t i = 0; i < n && socle; ++i) {
        ++m[i];
        socle = st.in_ideal(m);
        --m[i];
      }
      if (socle) out.push_back(m);
    }
    std::size_t i = 0;
    while (i < n && m[i] == box[i]) m[i++] = 0;
    if (i == n) break;
    ++m[i];
  }
  PrimalOrder ord;
  std::sort(out.begin(), out.end(),
            [&](const Exponent& a, const Exponent& b) { return ord.greater(a, b); });
  return out;
}

long long count_standard(const Staircase& st, int k) {
  long long c = 0;
  for (const auto& m : monomials_of_degree(st.nvars, k))
    if (st.is_standard(m)) ++c;
  return c;
}

namespace {

// Generalized binomial C(m, j) for integer m (possibly negative).
long long binom(long long m, int j) {
  long long r = 1;
  for (int i = 0; i < j; ++i) r = r * (m - i) / (i + 1);
  return r;
}

}  // namespace

long long HilbertData::hilbert_polynomial(int k) const {
  long long s = 0;
  for (std::size_t j = 0; j < hp_diffs.size(); ++j)
    s += hp_diffs[j] * binom(static_cast<long long>(k) - hp_base, static_cast<int>(j));
  return s;
}

HilbertData staircase_stats(const Staircase& st) {
  HilbertData hd;
  hd.dimension = st.dimension();
  const auto n = static_cast<int>(st.nvars);
  if (hd.dimension == 0) {
    auto socle = scorners(st, 1 << 20);
    int top = -1;
    for (const auto& s : socle) top = std::max(top, total_degree(s));
    hd.regularity = top + 1;
    for (int k = 0; k <= top + 1; ++k) {
      hd.values.push_back(count_standard(st, k));
      if (k <= top) hd.multiplicity += hd.values.back();
    }
    return hd;
  }
  // HF = HP once k >= deg lcm(corners) - n + 1; fit on the top d values.
  Exponent lcm(st.nvars, 0);
  for (const auto& g : st.gcorners)
    for (std::size_t i = 0; i < st.nvars; ++i) lcm[i] = std::max(lcm[i], g[i]);
  const int stable_from = std::max(0, total_degree(lcm) - n + 1);
  const int d = hd.dimension;
  const int top = stable_from + d + 1;
  for (int k = 0; k <= top; ++k) hd.values.push_back(count_standard(st, k));
  hd.hp_base = top - d + 1;
  std::vector<long long> diffs(hd.values.begin() + hd.hp_base, hd.values.end());
  for (int j = 0; j < d; ++j) {
    hd.hp_diffs.push_back(diffs.front());
    for (std::size_t t = 0; t + 1 < diffs.size(); ++t) diffs[t] = diffs[t + 1] - diffs[t];
    diffs.pop_back();
  }
  hd.multiplicity = hd.hp_diffs.back();
  int rho = 0;
  for (int k = top; k >= 0; --k) {
    if (hd.values[static_cast<std::size_t>(k)] != hd.hilbert_polynomial(k)) {
      rho = k + 1;
      break;
    }
  }
  hd.regularity = rho;
  hd.values.resize(static_cast<std::size_t>(std::max(rho, 1) + 1));
  return hd;
}

HilbertData staircase_stats(std::span<const Polynomial> generators, const Point& y,
                            const NumericalConfig& cfg) {
  return staircase_stats(gcorners(generators, y, cfg));
}

}  // namespace ecdetect

#pragma once

// Exact reference for local dual spaces: Macaulay matrices over Q with
// Gaussian elimination in boost::multiprecision::cpp_rational. Shares no code
// with the library so that its answers are independent.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace exact {

using Q = boost::multiprecision::cpp_rational;
using Exp = std::vector<int>;

struct Poly {
  std::size_t n = 0;
  std::map<Exp, Q> terms;

  void add(const Exp& e, const Q& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
};

inline int degree(const Exp& e) {
  int d = 0;
  for (int a : e) d += a;
  return d;
}

// Sums of terms `c*x^a*y^b` with rational c ("3/2*x*y^2 - z"); no parentheses.
inline Poly parse(const std::string& text, const std::vector<std::string>& vars) {
  Poly p;
  p.n = vars.size();
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto integer = [&] {
    skip();
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) throw std::runtime_error("oracle parse: expected digits in " + text);
    Q v(text.substr(i, j - i));
    i = j;
    return v;
  };
  skip();
  bool first = true;
  while (i < text.size()) {
    Q sign = 1;
    skip();
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
    } else if (!first) {
      throw std::runtime_error("oracle parse: expected sign in " + text);
    }
    first = false;
    Q coef = 1;
    Exp e(p.n, 0);
    bool more = true;
    while (more) {
      skip();
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        Q v = integer();
        skip();
        if (i < text.size() && text[i] == '/') {
          ++i;
          v /= integer();
        }
        coef *= v;
      } else {
        std::size_t j = i;
        while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
          ++j;
        const std::string name = text.substr(i, j - i);
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) throw std::runtime_error("oracle parse: unknown variable " + name);
        i = j;
        int power = 1;
        skip();
        if (i < text.size() && text[i] == '^') {
          ++i;
          power = static_cast<int>(integer());
        }
        e[static_cast<std::size_t>(it - vars.begin())] += power;
      }
      skip();
      more = i < text.size() && text[i] == '*';
      if (more) ++i;
    }
    p.add(e, sign * coef);
    skip();
  }
  return p;
}

inline Q binomial(int n, int k) {
  Q r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// f(x + y).
inline Poly translate(const Poly& f, const std::vector<Q>& y) {
  Poly cur = f;
  for (std::size_t v = 0; v < f.n; ++v) {
    Poly next;
    next.n = f.n;
    for (const auto& [e, c] : cur.terms) {
      for (int j = 0; j <= e[v]; ++j) {
        Exp g = e;
        g[v] = j;
        Q pw = 1;
        for (int t = 0; t < e[v] - j; ++t) pw *= y[v];
        next.add(g, c * binomial(e[v], j) * pw);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

// Local order: lower degree first; within a degree a comes before b when the
// first non-zero entry of a - b is negative.
inline bool local_greater(const Exp& a, const Exp& b) {
  const int da = degree(a), db = degree(b);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

inline std::vector<Exp> monomials_upto(std::size_t n, int k) {
  std::vector<Exp> out;
  Exp e(n, 0);
  auto rec = [&](auto&& self, std::size_t v, int left) -> void {
    if (v + 1 == n) {
      e[v] = left;
      out.push_back(e);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[v] = a;
      self(self, v + 1, left - a);
    }
  };
  for (int d = 0; d <= k; ++d) rec(rec, 0, d);
  std::sort(out.begin(), out.end(), local_greater);
  return out;
}

// Row-reduced Macaulay matrix of x^a f truncated to degree <= k, columns in
// local order. pivots[r] is the column of the leading entry of row r.
struct Echelon {
  std::vector<Exp> columns;
  std::vector<std::vector<Q>> rows;
  std::vector<std::size_t> pivots;
};

inline Echelon macaulay(const std::vector<Poly>& gens, int k) {
  Echelon m;
  if (gens.empty()) return m;
  const std::size_t n = gens.front().n;
  m.columns = monomials_upto(n, k);
  std::map<Exp, std::size_t> index;
  for (std::size_t c = 0; c < m.columns.size(); ++c) index[m.columns[c]] = c;
  std::vector<std::vector<Q>> rows;
  for (const auto& f : gens) {
    for (const auto& a : m.columns) {
      std::vector<Q> row(m.columns.size());
      bool any = false;
      for (const auto& [e, c] : f.terms) {
        Exp s = e;
        for (std::size_t v = 0; v < n; ++v) s[v] += a[v];
        if (degree(s) > k) continue;
        row[index.at(s)] = c;
        any = true;
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.columns.size() && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Q inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c] == 0) continue;
      const Q f = rows[o][c];
      for (std::size_t j = c; j < m.columns.size(); ++j) rows[o][j] -= f * rows[r][j];
    }
    m.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  m.rows = std::move(rows);
  return m;
}

inline std::vector<Poly> at_point(const std::vector<Poly>& gens, const std::vector<Q>& y) {
  std::vector<Poly> out;
  for (const auto& f : gens) out.push_back(translate(f, y));
  return out;
}

/// dim D_y^j[F] for j = 0..k.
inline std::vector<long long> dual_dims(const std::vector<Poly>& gens, const std::vector<Q>& y,
                                        int k) {
  const auto local = at_point(gens, y);
  std::vector<long long> out;
  for (int j = 0; j <= k; ++j) {
    const Echelon m = macaulay(local, j);
    const auto total = static_cast<long long>(monomials_upto(y.size(), j).size());
    out.push_back(total - static_cast<long long>(m.pivots.size()));
  }
  return out;
}

/// Monomials of degree <= k in the local initial ideal of F at y.
inline std::vector<Exp> initial_monomials(const std::vector<Poly>& gens, const std::vector<Q>& y,
                                          int k) {
  const Echelon m = macaulay(at_point(gens, y), k);
  std::vector<Exp> out;
  for (std::size_t c : m.pivots) out.push_back(m.columns[c]);
  return out;
}

inline bool divides(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Minimal generators of the initial ideal among monomials of degree <= k.
inline std::vector<Exp> corners(const std::vector<Poly>& gens, const std::vector<Q>& y, int k) {
  auto in = initial_monomials(gens, y, k);
  std::vector<Exp> out;
  for (const auto& m : in) {
    bool minimal = true;
    for (const auto& o : in)
      if (o != m && divides(o, m)) minimal = false;
    if (minimal) out.push_back(m);
  }
  return out;
}

/// Standard monomials of degree <= k all of whose variable multiples lie in
/// the initial ideal. Needs k to exceed the socle degree by one.
inline std::vector<Exp> socle_monomials(const std::vector<Poly>& gens, const std::vector<Q>& y,
                                        int k) {
  const auto in = initial_monomials(gens, y, k + 1);
  auto inside = [&](const Exp& e) { return std::find(in.begin(), in.end(), e) != in.end(); };
  std::vector<Exp> out;
  for (const auto& m : monomials_upto(y.size(), k)) {
    if (inside(m)) continue;
    bool socle = true;
    for (std::size_t v = 0; v < m.size() && socle; ++v) {
      Exp s = m;
      ++s[v];
      socle = inside(s);
    }
    if (socle) out.push_back(m);
  }
  return out;
}

/// Whether trunc_k(g) lies in the span of the truncated Macaulay rows. For an
/// ideal containing every monomial of degree k + 1 locally, this decides
/// local membership.
inline bool truncated_member(const std::vector<Poly>& gens, const Poly& g, const std::vector<Q>& y,
                             int k) {
  const Echelon m = macaulay(at_point(gens, y), k);
  std::map<Exp, std::size_t> index;
  for (std::size_t c = 0; c < m.columns.size(); ++c) index[m.columns[c]] = c;
  std::vector<Q> v(m.columns.size());
  for (const auto& [e, c] : translate(g, y).terms)
    if (degree(e) <= k) v[index.at(e)] = c;
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    const Q f = v[m.pivots[r]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * m.rows[r][j];
  }
  return std::all_of(v.begin(), v.end(), [](const Q& x) { return x == 0; });
}

}  // namespace exact

#include "ecdetect/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <set>

#include "ecdetect/errors.hpp"
#include "ecdetect/expression.hpp"

namespace ecdetect {

int total_degree(const Exponent& a) { return std::accumulate(a.begin(), a.end(), 0); }

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent unit_exponent(std::size_t n, std::size_t i) {
  Exponent e(n, 0);
  e[i] = 1;
  return e;
}

// ---------------------------------------------------------------------------
// Rings

RingContext::RingContext(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw PreconditionError("empty variable name");
    if (n == "i") throw PreconditionError("'i' is reserved for the imaginary unit");
    if (!seen.insert(n).second) throw PreconditionError("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool RingContext::operator==(const RingContext& other) const {
  return names_ == other.names_ && homogenized() == other.homogenized();
}

Ring make_ring(std::vector<std::string> names) {
  return std::make_shared<const RingContext>(std::move(names));
}

Ring homogenized_ring(const Ring& ring) {
  if (ring->homogenized()) throw PreconditionError("already homogenized");
  std::vector<std::string> names = ring->names();
  std::string h = "h";
  while (ring->index_of(h)) h += "_";
  names.push_back(h);
  auto r = std::make_shared<RingContext>(std::move(names));
  r->base_ = ring;
  return r;
}

// ---------------------------------------------------------------------------
// Orders

PrimalOrder PrimalOrder::for_ring(const RingContext& ring) {
  return ring.homogenized() ? PrimalOrder(ring.h_index()) : PrimalOrder();
}

namespace {

// Degree first (smaller is larger), then the first differing exponent (smaller
// is larger); `skip` is ignored entirely.
std::strong_ordering compare_local(const Exponent& a, const Exponent& b,
                                   std::optional<std::size_t> skip) {
  int da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (skip && *skip == i) continue;
    da += a[i];
    db += b[i];
  }
  if (da != db) return db <=> da;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (skip && *skip == i) continue;
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering PrimalOrder::compare(const Exponent& a, const Exponent& b) const {
  if (a.size() != b.size()) throw PreconditionError("exponent length mismatch");
  if (!h_) return compare_local(a, b, std::nullopt);
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return db <=> da;
  return compare_local(a, b, h_);
}

std::strong_ordering compare_primal(const Exponent& a, const Exponent& b, const PrimalOrder& ord) {
  return ord.compare(a, b);
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(Ring ring)
    : ring_(std::move(ring)), terms_(PrimalGreater{PrimalOrder::for_ring(*ring_)}) {}

Polynomial Polynomial::constant(Ring ring, Complex c) {
  Polynomial p(ring);
  p.add_term(Exponent(ring->nvars(), 0), c);
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t i) {
  if (i >= ring->nvars()) throw PreconditionError("variable index out of range");
  Polynomial p(ring);
  p.add_term(unit_exponent(ring->nvars(), i), 1.0);
  return p;
}

Polynomial Polynomial::monomial(Ring ring, Exponent exp, Complex c) {
  if (exp.size() != ring->nvars()) throw PreconditionError("exponent length mismatch");
  Polynomial p(ring);
  p.add_term(exp, c);
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

int Polynomial::low_degree() const {
  if (terms_.empty()) return -1;
  int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_) d = std::min(d, total_degree(e));
  return d;
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || degree() == low_degree();
}

Complex Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

double Polynomial::coefficient_norm() const {
  double s = 0.0;
  for (const auto& [e, c] : terms_) s += std::norm(c);
  return std::sqrt(s);
}

void Polynomial::add_term(const Exponent& e, Complex c) {
  if (e.size() != ring_->nvars()) throw PreconditionError("exponent length mismatch");
  for (int v : e)
    if (v < 0) throw PreconditionError("negative exponent");
  if (c == Complex(0.0)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex(0.0)) terms_.erase(it);
  }
}

namespace {
void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!(*a.ring() == *b.ring())) throw PreconditionError("polynomials belong to different rings");
}
}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  Polynomial r(a.ring_);
  Exponent e(a.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(Complex c) {
  if (c == Complex(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(ring_, 1.0);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

Complex Polynomial::evaluate(std::span<const Complex> point) const {
  if (point.size() != nvars()) throw PreconditionError("point dimension mismatch");
  Complex s = 0.0;
  for (const auto& [e, c] : terms_) {
    Complex m = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) m *= point[i];
    s += m;
  }
  return s;
}

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// Adds c * prod_i (x_i + s_i)^{g_i} into `out`, expanding variable by variable.
void expand_shifted(const Exponent& g, Complex c, std::span<const Complex> s, std::size_t var,
                    Exponent& cur, Polynomial& out) {
  if (var == g.size()) {
    out.add_term(cur, c);
    return;
  }
  if (s[var] == Complex(0.0)) {
    cur[var] = g[var];
    expand_shifted(g, c, s, var + 1, cur, out);
    return;
  }
  Complex spow = 1.0;
  for (int a = g[var]; a >= 0; --a) {
    cur[var] = a;
    expand_shifted(g, c * binomial(g[var], a) * spow, s, var + 1, cur, out);
    spow *= s[var];
  }
}

}  // namespace

Polynomial Polynomial::translate(std::span<const Complex> shift) const {
  if (shift.size() != nvars()) throw PreconditionError("shift dimension mismatch");
  Polynomial r(ring_);
  Exponent cur(nvars());
  for (const auto& [e, c] : terms_) expand_shifted(e, c, shift, 0, cur, r);
  return r;
}

Polynomial Polynomial::derivative(const Exponent& beta) const {
  if (beta.size() != nvars()) throw PreconditionError("exponent length mismatch");
  Polynomial r(ring_);
  for (const auto& [e, c] : terms_) {
    if (!divides(beta, e)) continue;
    Exponent d(e.size());
    double f = 1.0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      d[i] = e[i] - beta[i];
      f *= binomial(e[i], beta[i]);
    }
    r.add_term(d, c * f);
  }
  return r;
}

Polynomial Polynomial::truncate(int max_degree) const {
  Polynomial r(ring_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) <= max_degree) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::embed(Ring target, std::span<const std::size_t> var_map) const {
  if (var_map.size() != nvars()) throw PreconditionError("variable map size mismatch");
  Polynomial r(std::move(target));
  for (const auto& [e, c] : terms_) {
    Exponent d(r.nvars(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) d.at(var_map[i]) += e[i];
    r.add_term(d, c);
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return *ring_ == *o.ring_ && terms_.size() == o.terms_.size() &&
         std::equal(terms_.begin(), terms_.end(), o.terms_.begin());
}

// ---------------------------------------------------------------------------
// Formatting

namespace {
std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}
}  // namespace

std::string format_complex(Complex c) {
  if (c.imag() == 0.0) return format_double(c.real());
  if (c.real() == 0.0) return format_double(c.imag()) + "*i";
  std::string im = format_double(c.imag());
  return "(" + format_double(c.real()) + (c.imag() < 0 ? "" : "+") + im + "*i)";
}

std::string format_monomial(const Exponent& e, const RingContext& ring) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.names()[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    bool is_one = total_degree(e) == 0;
    Complex coef = c;
    bool negative = coef.imag() == 0.0 && coef.real() < 0.0;
    if (negative) coef = -coef;
    if (s.empty())
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    if (is_one) {
      s += format_complex(coef);
    } else {
      if (coef != Complex(1.0)) s += format_complex(coef) + "*";
      s += format_monomial(e, *ring_);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Homogenization

Polynomial homogenize(const Polynomial& f) {
  if (f.ring()->homogenized()) throw PreconditionError("already homogenized");
  return homogenize(f, homogenized_ring(f.ring()));
}

Polynomial homogenize(const Polynomial& f, const Ring& target) {
  if (f.ring()->homogenized()) throw PreconditionError("already homogenized");
  if (!target->homogenized() || !(*target->base() == *f.ring()))
    throw PreconditionError("target ring is not the homogenization of the source ring");
  Polynomial r(target);
  int d = f.degree();
  for (const auto& [e, c] : f.terms()) {
    Exponent h(e);
    h.push_back(d - total_degree(e));
    r.add_term(h, c);
  }
  return r;
}

Exponent dehomogenize(const Exponent& e, const RingContext& ring) {
  if (!ring.homogenized()) return e;
  Exponent d(e);
  d.erase(d.begin() + static_cast<std::ptrdiff_t>(ring.h_index()));
  return d;
}

Polynomial dehomogenize(const Polynomial& f) {
  if (!f.ring()->homogenized()) return f;
  Polynomial r(f.ring()->base());
  for (const auto& [e, c] : f.terms()) r.add_term(dehomogenize(e, *f.ring()), c);
  return r;
}

Exponent initial_term(const Polynomial& f, const PrimalOrder& ord) {
  if (f.is_zero()) throw PreconditionError("initial term of the zero polynomial");
  const Exponent* best = nullptr;
  for (const auto& [e, c] : f.terms())
    if (!best || ord.greater(e, *best)) best = &e;
  return *best;
}

Exponent initial_term(const Polynomial& f) {
  return initial_term(f, PrimalOrder::for_ring(*f.ring()));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

Polynomial to_polynomial(const ExprNode& e, const Ring& ring) {
  switch (e.kind) {
    case ExprNode::Kind::Constant:
      return Polynomial::constant(ring, e.value);
    case ExprNode::Kind::Variable:
      return Polynomial::variable(ring, e.variable);
    case ExprNode::Kind::Add:
      return to_polynomial(*e.lhs, ring) + to_polynomial(*e.rhs, ring);
    case ExprNode::Kind::Sub:
      return to_polynomial(*e.lhs, ring) - to_polynomial(*e.rhs, ring);
    case ExprNode::Kind::Mul:
      return to_polynomial(*e.lhs, ring) * to_polynomial(*e.rhs, ring);
    case ExprNode::Kind::Div: {
      Polynomial den = to_polynomial(*e.rhs, ring);
      if (den.degree() > 0) throw ParseError("division by a non-constant", e.column);
      Complex c = den.coefficient(Exponent(ring->nvars(), 0));
      if (c == Complex(0.0)) throw ParseError("division by zero", e.column);
      return to_polynomial(*e.lhs, ring) * (1.0 / c);
    }
    case ExprNode::Kind::Neg:
      return -to_polynomial(*e.lhs, ring);
    case ExprNode::Kind::Pow:
      if (e.exponent < 0) throw ParseError("negative exponent in polynomial", e.column);
      return to_polynomial(*e.lhs, ring).pow(static_cast<unsigned>(e.exponent));
  }
  return Polynomial(ring);
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
  ExprPtr e = parse_expression(text, ring->names());
  return to_polynomial(*e, ring);
}

}  // namespace ecdetect

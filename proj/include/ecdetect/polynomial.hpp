#pragma once

#include <compare>
#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ecdetect {

using Complex = std::complex<double>;

/// Exponent vector alpha of a monomial x^alpha. Length equals the number of
/// ring variables; all entries non-negative.
using Exponent = std::vector<int>;

int total_degree(const Exponent& a);
/// True when x^a divides x^b.
bool divides(const Exponent& a, const Exponent& b);
/// Unit exponent e_i in n variables.
Exponent unit_exponent(std::size_t n, std::size_t i);

/// Variable names of a polynomial ring. A homogenized ring carries one extra
/// trailing variable (the homogenizing variable) and remembers its base ring.
class RingContext {
 public:
  explicit RingContext(std::vector<std::string> names);

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool homogenized() const { return base_ != nullptr; }
  /// Index of the homogenizing variable; only valid when homogenized().
  std::size_t h_index() const { return names_.size() - 1; }
  const std::shared_ptr<const RingContext>& base() const { return base_; }

  bool operator==(const RingContext& other) const;

 private:
  friend std::shared_ptr<const RingContext> homogenized_ring(
      const std::shared_ptr<const RingContext>& ring);

  std::vector<std::string> names_;
  std::shared_ptr<const RingContext> base_;
};

using Ring = std::shared_ptr<const RingContext>;

Ring make_ring(std::vector<std::string> names);
/// R -> R[h]; the new variable is named "h" unless that name is taken.
Ring homogenized_ring(const Ring& ring);

/// Graded local order: 1 is the largest monomial, lower total degree is
/// larger, and within a degree a > b when the first non-zero entry of a - b
/// is negative. In x, y, z the degree-2 monomials run
/// z^2 > yz > y^2 > xz > xy > x^2.
///
/// On a homogenized ring R[h] equal-degree monomials are compared through
/// their dehomogenized images, which makes h^k the largest monomial of
/// degree k.
class PrimalOrder {
 public:
  PrimalOrder() = default;
  explicit PrimalOrder(std::optional<std::size_t> homogenizing_index)
      : h_(homogenizing_index) {}
  static PrimalOrder for_ring(const RingContext& ring);

  std::strong_ordering compare(const Exponent& a, const Exponent& b) const;
  bool greater(const Exponent& a, const Exponent& b) const { return compare(a, b) > 0; }

  std::optional<std::size_t> homogenizing_index() const { return h_; }

 private:
  std::optional<std::size_t> h_;
};

std::strong_ordering compare_primal(const Exponent& a, const Exponent& b,
                                    const PrimalOrder& ord = {});

struct PrimalGreater {
  PrimalOrder ord;
  bool operator()(const Exponent& a, const Exponent& b) const { return ord.greater(a, b); }
};

/// Sparse multivariate polynomial with complex double coefficients. Terms are
/// iterated from the largest to the smallest monomial in the primal order.
/// Only exact zeros are dropped from storage.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Complex, PrimalGreater>;

  explicit Polynomial(Ring ring);

  static Polynomial constant(Ring ring, Complex c);
  static Polynomial variable(Ring ring, std::size_t i);
  static Polynomial monomial(Ring ring, Exponent exp, Complex c = 1.0);

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t nvars() const { return ring_->nvars(); }

  bool is_zero() const { return terms_.empty(); }
  /// Highest total degree; -1 for the zero polynomial.
  int degree() const;
  /// Lowest total degree; -1 for the zero polynomial.
  int low_degree() const;
  bool is_homogeneous() const;
  Complex coefficient(const Exponent& e) const;
  /// Euclidean norm of the coefficient vector.
  double coefficient_norm() const;

  void add_term(const Exponent& e, Complex c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(Complex c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, Complex c) { return a *= c; }
  friend Polynomial operator*(Complex c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  Polynomial pow(unsigned k) const;

  Complex evaluate(std::span<const Complex> point) const;
  /// f(x + shift).
  Polynomial translate(std::span<const Complex> shift) const;
  /// Normalized derivative (1/beta!) d^|beta| f / dx^beta.
  Polynomial derivative(const Exponent& beta) const;
  /// Terms of total degree <= max_degree.
  Polynomial truncate(int max_degree) const;
  /// Same coefficients in a ring with more variables; variable i of this
  /// polynomial becomes variable var_map[i] of `target`.
  Polynomial embed(Ring target, std::span<const std::size_t> var_map) const;

  /// Text that parse_polynomial reads back to the same polynomial.
  std::string to_string() const;

  bool operator==(const Polynomial& o) const;

 private:
  Ring ring_;
  TermMap terms_;
};

/// f -> f^h in R[h]. Throws PreconditionError("already homogenized") when
/// f lives in a homogenized ring.
Polynomial homogenize(const Polynomial& f);
/// Homogenize into a specific homogenized ring (must have f's ring as base).
Polynomial homogenize(const Polynomial& f, const Ring& target);
/// h -> 1. Identity on polynomials of non-homogenized rings.
Polynomial dehomogenize(const Polynomial& f);
Exponent dehomogenize(const Exponent& e, const RingContext& ring);

/// Largest monomial with non-zero coefficient. Throws on the zero polynomial.
Exponent initial_term(const Polynomial& f, const PrimalOrder& ord);
Exponent initial_term(const Polynomial& f);

/// Parses text such as "x^2 + (1+2*i)*y - 3 x y". `i` is the imaginary unit,
/// `*` is optional, `/` is allowed only by constants.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

std::string format_complex(Complex c);
std::string format_monomial(const Exponent& e, const RingContext& ring);

}  // namespace ecdetect

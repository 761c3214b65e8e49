#pragma once

#include <complex>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ecdetect {

using Complex = std::complex<double>;

/// Parsed arithmetic expression over complex numbers and named variables.
/// Shared by the polynomial reader and the rational parametrizations of
/// component fixtures.
struct ExprNode {
  enum class Kind { Constant, Variable, Add, Sub, Mul, Div, Neg, Pow };

  Kind kind = Kind::Constant;
  Complex value{};
  std::size_t variable = 0;
  int exponent = 0;
  std::shared_ptr<const ExprNode> lhs;
  std::shared_ptr<const ExprNode> rhs;
  std::size_t column = 0;
};

using ExprPtr = std::shared_ptr<const ExprNode>;

/// Grammar: sums of products of powers; `*` may be omitted between factors,
/// `^` takes an integer literal, `i` is the imaginary unit.
ExprPtr parse_expression(std::string_view text, std::span<const std::string> variables);

/// Value together with its gradient with respect to all variables.
struct Jet {
  Complex value;
  std::vector<Complex> grad;
};

Jet evaluate_jet(const ExprNode& e, std::span<const Complex> at);
Complex evaluate(const ExprNode& e, std::span<const Complex> at);

}  // namespace ecdetect

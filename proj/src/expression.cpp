#include "ecdetect/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "ecdetect/errors.hpp"

namespace ecdetect {
namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> vars) : text_(text), vars_(vars) {}

  ExprPtr parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    ExprPtr e = sum();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_ + 1); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static ExprPtr node(ExprNode::Kind k, ExprPtr l, ExprPtr r, std::size_t col) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    n->column = col;
    return n;
  }

  ExprPtr sum() {
    ExprPtr acc = product();
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') return acc;
      std::size_t col = pos_ + 1;
      ++pos_;
      ExprPtr rhs = product();
      acc = node(c == '+' ? ExprNode::Kind::Add : ExprNode::Kind::Sub, acc, rhs, col);
    }
  }

  bool starts_factor(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(' || c == '.';
  }

  ExprPtr product() {
    ExprPtr acc = unary();
    for (;;) {
      char c = peek();
      std::size_t col = pos_ + 1;
      if (c == '*' || c == '/') {
        ++pos_;
        ExprPtr rhs = unary();
        acc = node(c == '*' ? ExprNode::Kind::Mul : ExprNode::Kind::Div, acc, rhs, col);
      } else if (starts_factor(c)) {
        ExprPtr rhs = power();
        acc = node(ExprNode::Kind::Mul, acc, rhs, col);
      } else {
        return acc;
      }
    }
  }

  ExprPtr unary() {
    char c = peek();
    if (c == '-' || c == '+') {
      std::size_t col = pos_ + 1;
      ++pos_;
      ExprPtr inner = unary();
      return c == '-' ? node(ExprNode::Kind::Neg, inner, nullptr, col) : inner;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (peek() != '^') return base;
    std::size_t col = pos_ + 1;
    ++pos_;
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    int k = 0;
    auto [p, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, k);
    if (ec != std::errc()) fail("exponent out of range");
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Pow;
    n->lhs = base;
    n->exponent = neg ? -k : k;
    n->column = col;
    return n;
  }

  ExprPtr primary() {
    char c = peek();
    std::size_t col = pos_ + 1;
    if (c == '(') {
      ++pos_;
      ExprPtr inner = sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number(col);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) {
          auto n = std::make_shared<ExprNode>();
          n->kind = ExprNode::Kind::Variable;
          n->variable = i;
          n->column = col;
          return n;
        }
      }
      if (name == "i") {
        auto n = std::make_shared<ExprNode>();
        n->value = Complex(0.0, 1.0);
        n->column = col;
        return n;
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(name) + "'");
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  ExprPtr number(std::size_t col) {
    std::size_t start = pos_;
    auto digit = [&](std::size_t p) {
      return p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]));
    };
    while (digit(pos_)) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (digit(pos_)) ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (digit(p)) {
        pos_ = p;
        while (digit(pos_)) ++pos_;
      }
    }
    double v = 0.0;
    auto [p, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc() || p != text_.data() + pos_) {
      pos_ = start;
      fail("malformed number");
    }
    auto n = std::make_shared<ExprNode>();
    n->value = v;
    n->column = col;
    return n;
  }

  std::string_view text_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

Jet constant_jet(Complex v, std::size_t n) { return Jet{v, std::vector<Complex>(n)}; }

Jet mul(const Jet& a, const Jet& b) {
  Jet r{a.value * b.value, std::vector<Complex>(a.grad.size())};
  for (std::size_t i = 0; i < r.grad.size(); ++i) r.grad[i] = a.grad[i] * b.value + a.value * b.grad[i];
  return r;
}

Jet reciprocal(const Jet& a) {
  if (a.value == Complex(0.0)) throw Error("division by zero in expression");
  Complex inv = 1.0 / a.value;
  Jet r{inv, std::vector<Complex>(a.grad.size())};
  for (std::size_t i = 0; i < r.grad.size(); ++i) r.grad[i] = -a.grad[i] * inv * inv;
  return r;
}

}  // namespace

ExprPtr parse_expression(std::string_view text, std::span<const std::string> variables) {
  return Parser(text, variables).parse();
}

Jet evaluate_jet(const ExprNode& e, std::span<const Complex> at) {
  const std::size_t n = at.size();
  switch (e.kind) {
    case ExprNode::Kind::Constant:
      return constant_jet(e.value, n);
    case ExprNode::Kind::Variable: {
      Jet r = constant_jet(at[e.variable], n);
      r.grad[e.variable] = 1.0;
      return r;
    }
    case ExprNode::Kind::Add:
    case ExprNode::Kind::Sub: {
      Jet a = evaluate_jet(*e.lhs, at);
      Jet b = evaluate_jet(*e.rhs, at);
      double s = e.kind == ExprNode::Kind::Add ? 1.0 : -1.0;
      a.value += s * b.value;
      for (std::size_t i = 0; i < n; ++i) a.grad[i] += s * b.grad[i];
      return a;
    }
    case ExprNode::Kind::Mul:
      return mul(evaluate_jet(*e.lhs, at), evaluate_jet(*e.rhs, at));
    case ExprNode::Kind::Div:
      return mul(evaluate_jet(*e.lhs, at), reciprocal(evaluate_jet(*e.rhs, at)));
    case ExprNode::Kind::Neg: {
      Jet a = evaluate_jet(*e.lhs, at);
      a.value = -a.value;
      for (auto& g : a.grad) g = -g;
      return a;
    }
    case ExprNode::Kind::Pow: {
      Jet base = evaluate_jet(*e.lhs, at);
      int k = e.exponent;
      if (k < 0) {
        base = reciprocal(base);
        k = -k;
      }
      Jet r = constant_jet(1.0, n);
      for (int j = 0; j < k; ++j) r = mul(r, base);
      return r;
    }
  }
  return constant_jet(0.0, n);
}

Complex evaluate(const ExprNode& e, std::span<const Complex> at) {
  return evaluate_jet(e, at).value;
}

}  // namespace ecdetect

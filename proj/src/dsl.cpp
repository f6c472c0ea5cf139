#include "fbraid/dsl.hpp"

#include <array>
#include <cctype>

namespace fbraid::dsl {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("syntax error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

bool is_known_atom(std::string_view name) {
  static constexpr std::array<std::string_view, 12> kAtoms = {
      "s1", "s2", "s3", "s4", "s5", "s6", "R", "rho", "a1", "a1r", "a2", "id"};
  for (std::string_view atom : kAtoms)
    if (atom == name) return true;
  return false;
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    throw ParseError(message, at);
  }

  long parse_int() {
    std::size_t start = pos;
    bool negative = false;
    if (!at_end() && peek() == '-') {
      negative = true;
      ++pos;
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected an integer exponent", pos);
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000'000L) fail("exponent too large", start);
      ++pos;
    }
    return negative ? -value : value;
  }

  std::string parse_ident() {
    std::size_t start = pos;
    if (at_end() || !std::isalpha(static_cast<unsigned char>(peek())))
      fail("expected an atom or '('", pos);
    std::string out;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) {
      out += peek();
      ++pos;
    }
    if (!is_known_atom(out)) fail("unknown atom '" + out + "'", start);
    return out;
  }

  Expr with_optional_power(Expr base) {
    if (!at_end() && peek() == '^') {
      ++pos;
      long exp = parse_int();
      Expr power;
      power.kind = Expr::Kind::kPower;
      power.exponent = exp;
      power.factors.push_back(std::move(base));
      return power;
    }
    return base;
  }

  Expr parse_term() {
    if (peek() == '(') {
      ++pos;
      Expr inner = parse_expr();
      skip_ws();
      if (at_end() || peek() != ')') fail("expected ')'", pos);
      ++pos;
      return with_optional_power(std::move(inner));
    }
    Expr atom;
    atom.kind = Expr::Kind::kAtom;
    atom.atom = parse_ident();
    return with_optional_power(std::move(atom));
  }

  Expr parse_expr() {
    skip_ws();
    std::vector<Expr> factors;
    while (!at_end() && peek() != ')') {
      factors.push_back(parse_term());
      skip_ws();
    }
    if (factors.empty()) fail("expected an expression", pos);
    if (factors.size() == 1) return std::move(factors.front());
    Expr product;
    product.kind = Expr::Kind::kProduct;
    product.factors = std::move(factors);
    return product;
  }
};

}  // namespace

Expr parse(std::string_view text) {
  Parser parser{text};
  Expr expr = parser.parse_expr();
  parser.skip_ws();
  if (!parser.at_end()) parser.fail("unexpected trailing input", parser.pos);
  return expr;
}

std::string print(const Expr& expr) {
  switch (expr.kind) {
    case Expr::Kind::kAtom:
      return expr.atom;
    case Expr::Kind::kPower: {
      const Expr& base = expr.factors.front();
      std::string base_str = base.kind == Expr::Kind::kAtom ? base.atom : "(" + print(base) + ")";
      return base_str + "^" + std::to_string(expr.exponent);
    }
    case Expr::Kind::kProduct: {
      std::string out;
      for (std::size_t i = 0; i < expr.factors.size(); ++i) {
        if (i) out += ' ';
        const Expr& factor = expr.factors[i];
        out += factor.kind == Expr::Kind::kProduct ? "(" + print(factor) + ")" : print(factor);
      }
      return out;
    }
  }
  throw std::logic_error("unreachable expression kind");
}

ModelElement eval(const Expr& expr, const Model& model) {
  switch (expr.kind) {
    case Expr::Kind::kAtom:
      return model.named(expr.atom);
    case Expr::Kind::kPower: {
      if (expr.exponent < -1'000'000L || expr.exponent > 1'000'000L)
        throw std::invalid_argument("exponent out of supported range");
      return model.pow(eval(expr.factors.front(), model), static_cast<int>(expr.exponent));
    }
    case Expr::Kind::kProduct: {
      ModelElement acc = model.identity();
      for (const Expr& factor : expr.factors) acc = model.mul(acc, eval(factor, model));
      return acc;
    }
  }
  throw std::logic_error("unreachable expression kind");
}

}  // namespace fbraid::dsl

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fbraid/model.hpp"

// Word grammar for model elements:
//
//   expr := term+
//   term := atom | atom '^' int | '(' expr ')' | '(' expr ')' '^' int
//   atom := 's'[1-6] | 'R' | 'rho' | 'a1' | 'a2' | 'id'
//   int  := '-'? [0-9]+
//
// Whitespace separates terms; juxtaposition is the product, read left to
// right. One unit of R is a single branch step (2*pi/30), so R^5 is the
// one-sixth turn of every disk interior. 'a1r' is accepted as an alias for
// 'rho' (the same ring transport, named from the simulator's side).
namespace fbraid::dsl {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct Expr {
  enum class Kind { kAtom, kPower, kProduct };
  Kind kind = Kind::kAtom;
  std::string atom;           // kAtom
  std::vector<Expr> factors;  // kProduct: factors; kPower: single base
  long exponent = 1;          // kPower
};

Expr parse(std::string_view text);
std::string print(const Expr& expr);
ModelElement eval(const Expr& expr, const Model& model);
bool is_known_atom(std::string_view name);

}  // namespace fbraid::dsl

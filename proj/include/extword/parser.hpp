#pragma once

#include <memory>
#include <string>
#include <vector>

#include "extword/exponent.hpp"

namespace extword {

// Expression language for the CLI:
//   letters          a b ~a          (inverse via the ~ prefix)
//   juxtaposition    a b ~a          (product, left-associative)
//   powers           (E)^n           (binds tighter than the product)
//   builtins         raypair(u;v)  wm(m[;seed])  xd(x;d)  xinf(x)
//                    hnn(U;V;W)  cdr(x)  atom(R;L[;c=[...]])
struct Expr {
  enum class Kind { Letter, Var, Product, Power, Builtin, IntArg, ExponentArg };
  Kind kind = Kind::Product;
  std::string name;                         // Letter/Var symbol or builtin name
  std::vector<std::shared_ptr<Expr>> args;  // product factors or builtin args
  Int number;                               // Power exponent / IntArg value
  std::string literal;                      // ExponentArg text "[a0,...]"
};
using ExprPtr = std::shared_ptr<Expr>;

// Throws invalid_input_error with a line/column diagnostic.
ExprPtr parse_expr(const std::string& text);
std::string print_expr(const Expr& e);

}  // namespace extword

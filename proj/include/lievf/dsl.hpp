#pragma once

// Textual form of coefficient functions, vector fields and lifted operators.
//
//   expr    = term { ("+" | "-") term }
//   term    = unary { ("*" | "/") unary }
//   unary   = ("+" | "-") unary | power
//   power   = atom [ "^" integer ]
//   atom    = integer | "x" | "y" | "z" | "p" | "q" | "r" | "exp" "(" expr ")" | "(" expr ")"
//
// p, q, r stand for d/dx, d/dy, d/dz. Every additive term carrying one of them is part of the
// field; the remaining terms form the zero-order part of a lifted operator.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "lievf/coeffring.hpp"
#include "lievf/errors.hpp"
#include "lievf/vfield.hpp"

namespace lievf {

struct SyntaxError : Error {
  std::size_t offset;
  std::string expected;
  SyntaxError(std::size_t off, std::string exp)
      : Error("syntax error at offset " + std::to_string(off) + ": expected " + exp), offset(off), expected(std::move(exp)) {}
};

struct SemanticError : Error {
  std::size_t offset;
  SemanticError(std::size_t off, const std::string& what)
      : Error("semantic error at offset " + std::to_string(off) + ": " + what), offset(off) {}
};

using ParsedValue = std::variant<CoeffFn, VectorField, LiftedOperator>;

/// Parses `text`. Fields get dimension max(min_dim, highest variable or symbol index + 1).
ParsedValue parse(std::string_view text, int min_dim = 1);

VectorField parse_field(std::string_view text, int dim);
LiftedOperator parse_operator(std::string_view text, int dim);
CoeffFn parse_function(std::string_view text);

std::string print(const CoeffFn& f);
std::string print(const VectorField& v);
std::string print(const LiftedOperator& op);
std::string print(const ParsedValue& v);

}  // namespace lievf

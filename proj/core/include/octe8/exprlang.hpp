#pragma once

#include <string>
#include <vector>

#include "octe8/e8.hpp"

namespace octe8 {

/// Parse error with the byte offset of the offending token and the set of
/// tokens that would have been accepted there.
class ParseError : public error {
 public:
  ParseError(std::size_t offset, const std::string& expected,
             const std::string& got)
      : error("syntax error at offset " + std::to_string(offset) +
              ": expected " + expected + ", got " + got),
        offset(offset),
        expected(expected),
        got(got) {}
  std::size_t offset;
  std::string expected;
  std::string got;
};

/// Abstract syntax for the element expression language:
///   expr  := term (('+'|'-') term)*
///   term  := rational '*'? atom | atom
///   atom  := basisname | '[' expr ',' expr ']' | '(' expr ')'
///   basisname := ('X'|'Y'|'Z') '[' unit '*' unit ']'
///              | ('D'|'S'|'G'|'A') '[' unit ']'
///   unit  := name | name ('+'|'-') name
/// Unit names are position-coded: uppercase selects the left tensor factor,
/// lowercase the right one.
struct ExprNode {
  enum class Kind { Sum, Scaled, Basis, Bracket };
  Kind kind = Kind::Sum;
  std::vector<std::pair<int, int>> summands;  // Sum: (sign, node index)
  Rat coeff;                                  // Scaled
  int child = -1;                             // Scaled
  std::vector<std::pair<int, Rat>> basis;     // Basis: basis index, weight
  int lhs = -1, rhs = -1;                     // Bracket
};

struct ElementExpr {
  std::vector<ExprNode> nodes;
  int root = -1;

  /// Number of immediate children of the root (for tests).
  int root_arity() const;
};

ElementExpr parse_element(std::string_view text);
E8Vector eval_element(const ElementExpr& expr, const E8Algebra& alg);

/// Canonical rendering: coefficient-sorted sum over basis names; re-parsing
/// the output yields an identical vector.
std::string print_element(const E8Vector& v, const E8Algebra& alg);

}  // namespace octe8

#pragma once

// Rational expressions over a declared alphabet and field, and their
// evaluation to presentations.
//
//   expr   := term (('+'|'-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := factor ('^' integer)?
//   factor := literal | variable | '(' expr ')' | name '(' args ')'
//
// Literals are integers or fractions "a/b".  Calls: inv(e), had(a,b),
// sh(a,b), comp(a,b), d(e,X), rev(e), geo(λ1,…,λk).

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncrs/series.hpp"

namespace ncrs {

class SyntaxError : public std::invalid_argument {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : std::invalid_argument("syntax error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct Expression {
  enum class Kind { Const, Var, Add, Sub, Neg, Mul, Pow, Inverse, Hadamard, Shuffle, Compose, Derive, Reverse, Geometric };

  Kind kind;
  std::size_t offset = 0;  // position in the source text
  Scalar value;            // Const
  std::size_t letter = 0;  // Var, Derive
  unsigned long exponent = 0;
  Vector lambdas;          // Geometric
  std::vector<std::unique_ptr<Expression>> args;

  /// Abstract syntax, e.g. "Inverse(Sub(Const 1, Mul(Var X, Var Y)))".
  std::string to_string(const Alphabet& a) const;
};

std::unique_ptr<Expression> parse_expression(std::string_view text, const Alphabet& a, const Field& f);

/// Bottom-up evaluation; every node is minimized.  NotInvertible reports the
/// offset of the failing inv.
LinearPresentation eval(const Expression& e, const Alphabet& a, const Field& f);
LinearPresentation eval(std::string_view text, const Alphabet& a, const Field& f);

}  // namespace ncrs

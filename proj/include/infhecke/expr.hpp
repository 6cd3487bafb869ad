#pragma once

#include <memory>
#include <string_view>

#include "infhecke/algebra.hpp"
#include "infhecke/errors.hpp"

namespace infhecke {

/// Surface-syntax AST. Atoms are the generators, D (= Delta) and rational
/// literals; multiplication is noncommutative and left-associative,
/// juxtaposition multiplies, ^ binds tightest with nonnegative integer
/// exponents.
struct Expr {
    enum class Kind { Number, Generator, Delta, Add, Sub, Mul, Pow, Neg };

    Kind kind = Kind::Number;
    std::size_t offset = 0;  // where the node started, for diagnostics
    Rational number;
    Gen gen = Gen::F;
    unsigned exponent = 0;
    std::unique_ptr<Expr> lhs, rhs;
};

class Expression {
  public:
    explicit Expression(std::unique_ptr<Expr> root) : root_(std::move(root)) {}
    const Expr& root() const { return *root_; }

  private:
    std::unique_ptr<Expr> root_;
};

/// Grammar:
///   expr     := ['-'] term (('+'|'-') term)*
///   term     := factor (['*'] factor)*
///   factor   := atom ('^' nat)?
///   atom     := 'e'|'f'|'h'|'x'|'y'|'D' | rational | '(' expr ')'
///   rational := nat ('/' positive-nat)?
/// Whitespace-insensitive; SyntaxError carries the byte offset.
Expression parse(std::string_view text);

/// Fold through the algebra; D evaluates to expandDelta(Delta).
NcPoly evaluate(const Expression& e, const Algebra& algebra);

/// Commutative evaluation in C[Delta]; rejects generator atoms. Used for
/// the --z command-line parameter.
DeltaPoly evaluateDelta(const Expression& e);

}  // namespace infhecke

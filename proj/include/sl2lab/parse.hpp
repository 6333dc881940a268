#pragma once

#include <string>
#include <vector>

#include "sl2lab/expr.hpp"
#include "sl2lab/module.hpp"
#include "sl2lab/poly.hpp"

namespace sl2lab {

/// Expression syntax tree. Mul is n-ary (chains are flattened at parse
/// time); Add/Sub are binary and left-associative. Scalar nodes hold only
/// literal-expressible values: nonnegative rationals or nonnegative
/// rational multiples of i (signs come in through Neg/Sub).
struct ExprAst {
    enum class Kind : uint8_t { Scalar, Gen, Add, Sub, Neg, Mul, Pow };

    Kind kind = Kind::Scalar;
    GaussianRational scalar;               // Kind::Scalar
    Gen gen = Gen::H;                      // Kind::Gen
    std::vector<ExprAst> children;         // operands
    int exponent = 0;                      // Kind::Pow, >= 0

    static ExprAst make_scalar(GaussianRational v);
    static ExprAst make_gen(Gen g);
    static ExprAst add(ExprAst l, ExprAst r);
    static ExprAst sub(ExprAst l, ExprAst r);
    static ExprAst neg(ExprAst e);
    static ExprAst mul(std::vector<ExprAst> factors);
    static ExprAst pow(ExprAst base, int e);

    friend bool operator==(const ExprAst& a, const ExprAst& b);
};

/// Parse an expression in generators x, y, h, A, B, C and scalar literals
/// (integers, fractions p/q, i, and fused products like 3/2*i). Standard
/// precedence: ^ > unary - > * > +,-. Throws ParseError with line/column.
ExprAst parse_expr(const std::string& src);

/// Minimal-parentheses text form; parse_expr(print_expr(a)) == a for every
/// parser-produced tree.
std::string print_expr(const ExprAst& a);

/// Distribute products over sums, flatten scalars (they commute), expand
/// powers, resolve A to h; preserves the order of noncommuting factors.
ExprSum lower_to_sum(const ExprAst& a);

/// Expression that must evaluate to a pure scalar (no generators).
GaussianRational parse_scalar(const std::string& src);

/// Expression in h (and A) only, read as an element of Q(i)[h].
Poly parse_poly(const std::string& src);

/// "f ; g" with each side in polynomial syntax; a missing "; g" means g = 0.
ModuleElement parse_module_element(const GaussianRational& lambda, const std::string& src);

}  // namespace sl2lab

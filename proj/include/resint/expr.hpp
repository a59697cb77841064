#ifndef RESINT_EXPR_HPP
#define RESINT_EXPR_HPP

#include <complex>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "resint/errors.hpp"

namespace resint {

using Complex = std::complex<double>;

inline bool is_finite(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Expression tree over a single complex variable z.
//
// Grammar (ASCII, case-sensitive, `i` is the imaginary unit):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' integer)?
//   atom   := number | 'i' | 'z' | 'pi' | 'e'
//           | func '(' expr ')' | '(' expr ')' | '-' atom
//   func   := 'exp' | 'sin' | 'cos' | 'log'
// Numbers are plain decimal literals (no exponent notation).
class Expr {
public:
    enum class Kind {
        Const, Z, Add, Sub, Mul, Div, Neg, Exp, Sin, Cos, Log, PowInt
    };

    static constexpr int kMaxPow = 64;    // |exponent| limit for PowInt
    static constexpr int kMaxDepth = 128; // tree depth limit

    Expr() : kind_(Kind::Const), value_(0.0) {}

    static Expr constant(Complex c);
    static Expr variable();
    static Expr unary(Kind k, Expr operand);
    static Expr binary(Kind k, Expr lhs, Expr rhs);
    static Expr pow_int(Expr base, int exponent);

    Kind kind() const { return kind_; }
    const Complex& value() const { return value_; }   // Const only
    int exponent() const { return exponent_; }        // PowInt only
    const Expr& child(std::size_t i) const { return kids_[i]; }
    std::size_t arity() const { return kids_.size(); }
    int depth() const;

    // Canonical prefix form, e.g. "(/ z (+ (^ z 2) 1))"; used by tests
    // to pin down the parse tree.
    std::string dump() const;

    // A copyable closure suitable for the contour/quadrature routines.
    std::function<Complex(Complex)> evaluator() const;

private:
    Kind kind_;
    Complex value_{};
    int exponent_ = 0;
    std::vector<Expr> kids_;
};

// Parse `text` per the grammar above. Throws ParseError with a byte offset
// on malformed input, and when the depth/exponent limits are exceeded.
Expr parse_expr(std::string_view text);

// Evaluate with principal-branch log. Throws EvalError on division by
// zero, log of zero, or non-finite intermediate results.
Complex eval_expr(const Expr& e, Complex z);

} // namespace resint

#endif

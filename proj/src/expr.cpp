#include "resint/expr.hpp"

#include <cctype>
#include <cmath>
#include <utility>

namespace resint {

Expr Expr::constant(Complex c) {
    Expr e;
    e.kind_ = Kind::Const;
    e.value_ = c;
    return e;
}

Expr Expr::variable() {
    Expr e;
    e.kind_ = Kind::Z;
    return e;
}

Expr Expr::unary(Kind k, Expr operand) {
    Expr e;
    e.kind_ = k;
    e.kids_.push_back(std::move(operand));
    return e;
}

Expr Expr::binary(Kind k, Expr lhs, Expr rhs) {
    Expr e;
    e.kind_ = k;
    e.kids_.push_back(std::move(lhs));
    e.kids_.push_back(std::move(rhs));
    return e;
}

Expr Expr::pow_int(Expr base, int exponent) {
    Expr e;
    e.kind_ = Kind::PowInt;
    e.exponent_ = exponent;
    e.kids_.push_back(std::move(base));
    return e;
}

int Expr::depth() const {
    int d = 0;
    for (const Expr& k : kids_)
        d = std::max(d, k.depth());
    return d + 1;
}

std::string Expr::dump() const {
    auto num = [](double v) {
        // trim trailing zeros for readability
        std::string s = std::to_string(v);
        if (s.find('.') != std::string::npos) {
            while (s.back() == '0') s.pop_back();
            if (s.back() == '.') s.pop_back();
        }
        return s;
    };
    switch (kind_) {
    case Kind::Const:
        if (value_.imag() == 0.0) return num(value_.real());
        if (value_.real() == 0.0 && value_.imag() == 1.0) return "i";
        return "(complex " + num(value_.real()) + " " + num(value_.imag()) + ")";
    case Kind::Z: return "z";
    case Kind::Add: return "(+ " + kids_[0].dump() + " " + kids_[1].dump() + ")";
    case Kind::Sub: return "(- " + kids_[0].dump() + " " + kids_[1].dump() + ")";
    case Kind::Mul: return "(* " + kids_[0].dump() + " " + kids_[1].dump() + ")";
    case Kind::Div: return "(/ " + kids_[0].dump() + " " + kids_[1].dump() + ")";
    case Kind::Neg: return "(neg " + kids_[0].dump() + ")";
    case Kind::Exp: return "(exp " + kids_[0].dump() + ")";
    case Kind::Sin: return "(sin " + kids_[0].dump() + ")";
    case Kind::Cos: return "(cos " + kids_[0].dump() + ")";
    case Kind::Log: return "(log " + kids_[0].dump() + ")";
    case Kind::PowInt:
        return "(^ " + kids_[0].dump() + " " + std::to_string(exponent_) + ")";
    }
    return "?";
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr run() {
        Expr e = parse_expr_rule(0);
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what, pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void check_depth(int depth) {
        if (depth > Expr::kMaxDepth)
            fail("expression depth limit exceeded");
    }

    Expr parse_expr_rule(int depth) {
        check_depth(depth);
        Expr lhs = parse_term(depth + 1);
        for (;;) {
            if (consume('+'))
                lhs = Expr::binary(Expr::Kind::Add, std::move(lhs), parse_term(depth + 1));
            else if (consume('-'))
                lhs = Expr::binary(Expr::Kind::Sub, std::move(lhs), parse_term(depth + 1));
            else
                return lhs;
        }
    }

    Expr parse_term(int depth) {
        check_depth(depth);
        Expr lhs = parse_factor(depth + 1);
        for (;;) {
            if (consume('*'))
                lhs = Expr::binary(Expr::Kind::Mul, std::move(lhs), parse_factor(depth + 1));
            else if (consume('/'))
                lhs = Expr::binary(Expr::Kind::Div, std::move(lhs), parse_factor(depth + 1));
            else
                return lhs;
        }
    }

    Expr parse_factor(int depth) {
        check_depth(depth);
        Expr base = parse_atom(depth + 1);
        if (consume('^')) {
            int n = parse_int_literal();
            return Expr::pow_int(std::move(base), n);
        }
        return base;
    }

    int parse_int_literal() {
        skip_ws();
        bool neg = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer exponent");
        long v = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > Expr::kMaxPow)
                fail("integer exponent limit exceeded");
            ++pos_;
        }
        return static_cast<int>(neg ? -v : v);
    }

    Expr parse_atom(int depth) {
        check_depth(depth);
        char c = peek();
        if (c == '\0')
            fail("expected expression");
        if (c == '-') {
            ++pos_;
            return Expr::unary(Expr::Kind::Neg, parse_atom(depth + 1));
        }
        if (c == '(') {
            ++pos_;
            Expr inner = parse_expr_rule(depth + 1);
            if (!consume(')'))
                fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)))
            return parse_name(depth);
        fail("unexpected character");
    }

    Expr parse_number() {
        skip_ws();
        std::size_t start = pos_;
        bool saw_digit = false;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
            saw_digit = true;
        }
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                saw_digit = true;
            }
        }
        if (!saw_digit) {
            pos_ = start;
            fail("malformed number");
        }
        double v = std::stod(std::string(text_.substr(start, pos_ - start)));
        return Expr::constant(Complex(v, 0.0));
    }

    Expr parse_name(int depth) {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        if (name == "i") return Expr::constant(Complex(0.0, 1.0));
        if (name == "z") return Expr::variable();
        if (name == "pi") return Expr::constant(Complex(M_PI, 0.0));
        if (name == "e") return Expr::constant(Complex(M_E, 0.0));

        Expr::Kind k;
        if (name == "exp") k = Expr::Kind::Exp;
        else if (name == "sin") k = Expr::Kind::Sin;
        else if (name == "cos") k = Expr::Kind::Cos;
        else if (name == "log") k = Expr::Kind::Log;
        else {
            pos_ = start;
            fail("unknown name '" + std::string(name) + "'");
        }
        if (!consume('('))
            fail("expected '(' after function name");
        Expr arg = parse_expr_rule(depth + 1);
        if (!consume(')'))
            fail("expected ')'");
        return Expr::unary(k, std::move(arg));
    }
};

Complex pow_int_value(Complex base, int n) {
    if (n == 0) return Complex(1.0, 0.0);
    bool inv = n < 0;
    unsigned k = static_cast<unsigned>(inv ? -static_cast<long>(n) : n);
    Complex acc(1.0, 0.0);
    Complex b = base;
    while (k) {
        if (k & 1u) acc *= b;
        b *= b;
        k >>= 1u;
    }
    if (inv) {
        if (acc == Complex(0.0, 0.0))
            throw EvalError("division by zero in z^negative");
        acc = Complex(1.0, 0.0) / acc;
    }
    return acc;
}

} // namespace

Expr parse_expr(std::string_view text) {
    return Parser(text).run();
}

Complex eval_expr(const Expr& e, Complex z) {
    if (!is_finite(z))
        throw EvalError("evaluation point is not finite");
    Complex r;
    switch (e.kind()) {
    case Expr::Kind::Const: r = e.value(); break;
    case Expr::Kind::Z:     r = z; break;
    case Expr::Kind::Add:   r = eval_expr(e.child(0), z) + eval_expr(e.child(1), z); break;
    case Expr::Kind::Sub:   r = eval_expr(e.child(0), z) - eval_expr(e.child(1), z); break;
    case Expr::Kind::Mul:   r = eval_expr(e.child(0), z) * eval_expr(e.child(1), z); break;
    case Expr::Kind::Div: {
        Complex den = eval_expr(e.child(1), z);
        if (den == Complex(0.0, 0.0))
            throw EvalError("division by zero");
        r = eval_expr(e.child(0), z) / den;
        break;
    }
    case Expr::Kind::Neg: r = -eval_expr(e.child(0), z); break;
    case Expr::Kind::Exp: r = std::exp(eval_expr(e.child(0), z)); break;
    case Expr::Kind::Sin: r = std::sin(eval_expr(e.child(0), z)); break;
    case Expr::Kind::Cos: r = std::cos(eval_expr(e.child(0), z)); break;
    case Expr::Kind::Log: {
        Complex arg = eval_expr(e.child(0), z);
        if (arg == Complex(0.0, 0.0))
            throw EvalError("log of zero");
        r = std::log(arg); // principal branch, cut on the negative real axis
        break;
    }
    case Expr::Kind::PowInt:
        r = pow_int_value(eval_expr(e.child(0), z), e.exponent());
        break;
    }
    if (!is_finite(r))
        throw EvalError("overflow or invalid value during evaluation");
    return r;
}

std::function<Complex(Complex)> Expr::evaluator() const {
    Expr copy = *this;
    return [copy](Complex z) { return eval_expr(copy, z); };
}

} // namespace resint

#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "semiweyl/error.hpp"
#include "semiweyl/poisson.hpp"
#include "semiweyl/weyl.hpp"

namespace semiweyl {

// Expression grammar (CLI front end):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' exponent)?
//   atom   := rational | 'h' | 't' | 'q' | 'x' uint | '(' expr ')' | '-' factor
// Juxtaposition is not multiplication; '*' is noncommutative left-to-right;
// h, t and q all name the one central parameter. Exponents are unsigned
// except directly on the parameter symbol, where h^-k is legal (Laurent
// coefficients have to round-trip).
struct ExprAST {
    enum class Kind { constant, param, var, add, mul, pow, neg };

    Kind kind = Kind::constant;
    Rational value;                  // constant
    int index = 0;                   // var, 1-based
    int exponent = 0;                // pow
    std::vector<ExprAST> children;   // add/mul n-ary, pow/neg single child

    static ExprAST constant(Rational v) {
        ExprAST a;
        a.kind = Kind::constant;
        a.value = std::move(v);
        return a;
    }
    static ExprAST param() {
        ExprAST a;
        a.kind = Kind::param;
        return a;
    }
    static ExprAST var(int index) {
        ExprAST a;
        a.kind = Kind::var;
        a.index = index;
        return a;
    }
};

struct ParseContext {
    int n = 1;                // 2n generators
    bool allow_param = true;  // false in Poisson contexts
};

namespace detail {

class Parser {
public:
    Parser(std::string_view src, const ParseContext& pc) : src_(src), pc_(pc) {}

    ExprAST run() {
        skip_ws();
        if (at_end()) fail(errc::syntax_error, "empty expression", 0);
        ExprAST e = expr();
        skip_ws();
        if (!at_end()) fail(errc::syntax_error, "trailing input", pos_);
        return e;
    }

private:
    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return at_end() ? '\0' : src_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    ExprAST expr() {
        std::vector<ExprAST> terms;
        terms.push_back(term());
        for (;;) {
            skip_ws();
            if (eat('+')) {
                terms.push_back(term());
            } else if (eat('-')) {
                ExprAST neg;
                neg.kind = ExprAST::Kind::neg;
                neg.children.push_back(term());
                terms.push_back(std::move(neg));
            } else {
                break;
            }
        }
        if (terms.size() == 1) return std::move(terms[0]);
        ExprAST add;
        add.kind = ExprAST::Kind::add;
        add.children = std::move(terms);
        return add;
    }

    ExprAST term() {
        std::vector<ExprAST> factors;
        factors.push_back(factor());
        while (eat('*')) factors.push_back(factor());
        if (factors.size() == 1) return std::move(factors[0]);
        ExprAST mul;
        mul.kind = ExprAST::Kind::mul;
        mul.children = std::move(factors);
        return mul;
    }

    ExprAST factor() {
        ExprAST base = atom();
        skip_ws();
        if (!eat('^')) return base;
        skip_ws();
        std::size_t at = pos_;
        bool negative = eat('-');
        long e = read_uint("exponent");
        if (negative && base.kind != ExprAST::Kind::param)
            fail(errc::syntax_error, "negative exponent only allowed on the parameter", at);
        ExprAST pow;
        pow.kind = ExprAST::Kind::pow;
        pow.exponent = static_cast<int>(negative ? -e : e);
        pow.children.push_back(std::move(base));
        return pow;
    }

    ExprAST atom() {
        skip_ws();
        std::size_t at = pos_;
        char c = peek();
        if (c == '-') {
            ++pos_;
            // unary minus binds looser than '^': -h^2 is -(h^2)
            ExprAST neg;
            neg.kind = ExprAST::Kind::neg;
            neg.children.push_back(factor());
            return neg;
        }
        if (c == '(') {
            ++pos_;
            ExprAST inner = expr();
            if (!eat(')')) fail(errc::syntax_error, "expected ')'", pos_);
            return inner;
        }
        if (c == 'h' || c == 't' || c == 'q') {
            ++pos_;
            if (!pc_.allow_param)
                fail(errc::param_in_poisson_context,
                     "the parameter has no meaning in a Poisson context", at);
            return ExprAST::param();
        }
        if (c == 'x') {
            ++pos_;
            long idx = read_uint("generator index");
            if (idx < 1 || idx > 2 * pc_.n)
                fail(errc::unknown_variable,
                     "x" + std::to_string(idx) + " is outside x1..x" +
                         std::to_string(2 * pc_.n),
                     at);
            return ExprAST::var(static_cast<int>(idx));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = read_uint("number");
            if (peek() == '/') {
                ++pos_;
                std::size_t dat = pos_;
                long den = read_uint("denominator");
                if (den == 0) fail(errc::syntax_error, "zero denominator", dat);
                return ExprAST::constant(Rational(num, den));
            }
            return ExprAST::constant(Rational(num));
        }
        fail(errc::syntax_error, std::string("unexpected character '") + c + "'", at);
    }

    long read_uint(const std::string& what) {
        skip_ws();
        std::size_t at = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail(errc::syntax_error, "expected " + what, at);
        long v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_] - '0');
            if (v > 1'000'000'000L) fail(errc::overflow, what + " too large", at);
            ++pos_;
        }
        return v;
    }

    std::string_view src_;
    ParseContext pc_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprAST parse_expr(std::string_view src, const ParseContext& pc) {
    return detail::Parser(src, pc).run();
}

inline WeylElement eval_weyl(const ExprAST& ast, const WeylContext& ctx) {
    switch (ast.kind) {
        case ExprAST::Kind::constant:
            return WeylElement::constant(ctx, ast.value);
        case ExprAST::Kind::param:
            // in a numeric deformation the parameter IS the number q
            return ctx.symbolic() ? WeylElement::constant(ctx, ParamPoly::param())
                                  : WeylElement::constant(ctx, ctx.q());
        case ExprAST::Kind::var:
            return WeylElement::generator(ctx, ast.index);
        case ExprAST::Kind::neg:
            return -eval_weyl(ast.children[0], ctx);
        case ExprAST::Kind::add: {
            WeylElement sum = WeylElement::zero(ctx);
            for (const auto& child : ast.children) sum = sum + eval_weyl(child, ctx);
            return sum;
        }
        case ExprAST::Kind::mul: {
            WeylElement prod = eval_weyl(ast.children[0], ctx);
            for (std::size_t i = 1; i < ast.children.size(); ++i)
                prod = weyl_mul(prod, eval_weyl(ast.children[i], ctx));
            return prod;
        }
        case ExprAST::Kind::pow: {
            if (ast.exponent >= 0) {
                WeylElement base = eval_weyl(ast.children[0], ctx);
                WeylElement prod = WeylElement::one(ctx);
                for (int e = 0; e < ast.exponent; ++e) prod = weyl_mul(prod, base);
                return prod;
            }
            if (ast.children[0].kind != ExprAST::Kind::param)
                fail(errc::negative_exponent, "negative power of a non-scalar");
            return ctx.symbolic()
                       ? WeylElement::constant(ctx, ParamPoly::param(ast.exponent))
                       : WeylElement::constant(ctx, ctx.q().pow(ast.exponent));
        }
    }
    fail(errc::malformed_input, "bad AST node");
}

inline PoissonElement eval_poisson(const ExprAST& ast, int n) {
    switch (ast.kind) {
        case ExprAST::Kind::constant:
            return PoissonElement::constant(n, ast.value);
        case ExprAST::Kind::param:
            fail(errc::param_in_poisson_context, "parameter in a Poisson element");
        case ExprAST::Kind::var:
            return PoissonElement::generator(n, ast.index);
        case ExprAST::Kind::neg:
            return -eval_poisson(ast.children[0], n);
        case ExprAST::Kind::add: {
            PoissonElement sum = PoissonElement::zero(n);
            for (const auto& child : ast.children) sum = sum + eval_poisson(child, n);
            return sum;
        }
        case ExprAST::Kind::mul: {
            PoissonElement prod = eval_poisson(ast.children[0], n);
            for (std::size_t i = 1; i < ast.children.size(); ++i)
                prod = prod * eval_poisson(ast.children[i], n);
            return prod;
        }
        case ExprAST::Kind::pow: {
            if (ast.exponent < 0) fail(errc::negative_exponent, "negative power");
            PoissonElement base = eval_poisson(ast.children[0], n);
            PoissonElement prod = PoissonElement::one(n);
            for (int e = 0; e < ast.exponent; ++e) prod = prod * base;
            return prod;
        }
    }
    fail(errc::malformed_input, "bad AST node");
}

// parse + evaluate in one go; the usual entry points
inline WeylElement parse_weyl(std::string_view src, const WeylContext& ctx) {
    return eval_weyl(parse_expr(src, ParseContext{ctx.n(), true}), ctx);
}

inline PoissonElement parse_poisson(std::string_view src, int n) {
    return eval_poisson(parse_expr(src, ParseContext{n, false}), n);
}

}  // namespace semiweyl

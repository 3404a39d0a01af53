#include "ederiv/parser.hpp"

#include <cctype>
#include <cstdint>

#include "ederiv/errors.hpp"

namespace ederiv {

namespace {

constexpr std::uint64_t kExponentCap = 1u << 20;

enum class Tok { Number, Var, Zeta, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::uint64_t number = 0;  // Number: value; Var: 1-based variable index
    int line = 1, column = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            bump();
        cur_.line = line_;
        cur_.column = col_;
        if (pos_ >= src_.size()) {
            cur_.kind = Tok::End;
            return;
        }
        const char c = src_[pos_];
        switch (c) {
            case '+': cur_.kind = Tok::Plus; bump(); return;
            case '-': cur_.kind = Tok::Minus; bump(); return;
            case '*': cur_.kind = Tok::Star; bump(); return;
            case '^': cur_.kind = Tok::Caret; bump(); return;
            case '/': cur_.kind = Tok::Slash; bump(); return;
            case '(': cur_.kind = Tok::LParen; bump(); return;
            case ')': cur_.kind = Tok::RParen; bump(); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            cur_.kind = Tok::Number;
            cur_.number = read_number();
            return;
        }
        if (c == 'x') {
            bump();
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                throw SyntaxError("variable name must be 'x' followed by an index",
                                  cur_.line, cur_.column);
            cur_.kind = Tok::Var;
            cur_.number = read_number();
            return;
        }
        if (c == 'z') {
            bump();
            cur_.kind = Tok::Zeta;
            return;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", line_, col_);
    }

    std::uint64_t read_number() {
        std::uint64_t v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            const std::uint64_t d = static_cast<std::uint64_t>(src_[pos_] - '0');
            if (v > (UINT64_MAX - d) / 10)
                throw SyntaxError("numeric literal overflow", cur_.line, cur_.column);
            v = v * 10 + d;
            bump();
        }
        return v;
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_;
};

class Parser {
public:
    Parser(const std::string& src, RingPtr ring) : lex_(src), ring_(std::move(ring)) {}

    Polynomial run() {
        Polynomial p = expr();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End)
            throw SyntaxError("trailing input after expression", t.line, t.column);
        return p;
    }

private:
    Polynomial expr() {
        Polynomial acc = term();
        while (true) {
            const Tok k = lex_.peek().kind;
            if (k == Tok::Plus) {
                lex_.take();
                acc = acc + term();
            } else if (k == Tok::Minus) {
                lex_.take();
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        bool negate = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            negate = true;
        }
        bool outer_exponent_ok = true;
        Polynomial base = parse_base(outer_exponent_ok);
        if (lex_.peek().kind == Tok::Caret) {
            const Token caret = lex_.take();
            if (!outer_exponent_ok)
                throw SyntaxError("unexpected second exponent", caret.line, caret.column);
            base = base.power(natural_exponent());
        }
        return negate ? -base : base;
    }

    // base := variable | scalar-literal | '(' expr ')'
    // A z-literal consumes its own (signed) exponent, so outer '^' is then
    // rejected; all other bases take the factor-level natural exponent.
    Polynomial parse_base(bool& outer_exponent_ok) {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Tok::LParen: {
                lex_.take();
                Polynomial inner = expr();
                const Token close = lex_.take();
                if (close.kind != Tok::RParen)
                    throw SyntaxError("expected ')'", close.line, close.column);
                return inner;
            }
            case Tok::Var: {
                lex_.take();
                if (t.number == 0 || t.number > ring_->nvars)
                    throw SyntaxError("unknown variable x" + std::to_string(t.number) +
                                          " (ring has " + std::to_string(ring_->nvars) +
                                          " variables)",
                                      t.line, t.column);
                return Polynomial::variable(ring_, static_cast<std::size_t>(t.number - 1));
            }
            case Tok::Number: {
                const Rational q = rational_literal();
                if (lex_.peek().kind == Tok::Zeta) {
                    lex_.take();
                    outer_exponent_ok = false;
                    return Polynomial::constant(
                        ring_, Scalar::from_rational(ring_->field, q) * zeta_power());
                }
                return Polynomial::constant(ring_, Scalar::from_rational(ring_->field, q));
            }
            case Tok::Zeta: {
                lex_.take();
                outer_exponent_ok = false;
                return Polynomial::constant(ring_, zeta_power());
            }
            default:
                throw SyntaxError("expected a variable, number, 'z' or '('", t.line,
                                  t.column);
        }
    }

    Rational rational_literal() {
        const Token num = lex_.take();
        if (lex_.peek().kind == Tok::Slash) {
            lex_.take();
            const Token den = lex_.take();
            if (den.kind != Tok::Number)
                throw SyntaxError("expected denominator after '/'", den.line, den.column);
            if (den.number == 0)
                throw SyntaxError("zero denominator", den.line, den.column);
            return make_rational(Integer(num.number), Integer(den.number));
        }
        return Rational(Integer(num.number));
    }

    // Optional signed exponent of a just-consumed 'z'.
    Scalar zeta_power() {
        long j = 1;
        if (lex_.peek().kind == Tok::Caret) {
            lex_.take();
            bool neg = false;
            if (lex_.peek().kind == Tok::Minus) {
                lex_.take();
                neg = true;
            }
            const Token e = lex_.take();
            if (e.kind != Tok::Number)
                throw SyntaxError("expected integer exponent after '^'", e.line, e.column);
            if (e.number > kExponentCap)
                throw SyntaxError("exponent overflow", e.line, e.column);
            j = static_cast<long>(e.number);
            if (neg) j = -j;
        }
        return Scalar::root_of_unity(ring_->field, j);
    }

    std::uint32_t natural_exponent() {
        const Token e = lex_.take();
        if (e.kind != Tok::Number)
            throw SyntaxError("expected natural exponent after '^'", e.line, e.column);
        if (e.number > kExponentCap)
            throw SyntaxError("exponent overflow", e.line, e.column);
        return static_cast<std::uint32_t>(e.number);
    }

    Lexer lex_;
    RingPtr ring_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& src, const RingPtr& ring) {
    return Parser(src, ring).run();
}

Scalar parse_scalar(const std::string& src, const FieldPtr& field) {
    const RingPtr ring = PolyRing::create(field, 1);
    const Polynomial p = parse_polynomial(src, ring);
    if (p.degree() > 0) throw InputError("expected a constant expression: " + src);
    return p.constant_term();
}

}  // namespace ederiv

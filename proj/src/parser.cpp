#include "z3q/parser.hpp"

#include <cctype>
#include <vector>

#include "z3q/calculus.hpp"
#include "z3q/costructure.hpp"
#include "z3q/io.hpp"
#include "z3q/presentations.hpp"

namespace z3q {

namespace {

struct Token {
    enum Kind { Name, Int, Plus, Minus, Star, Caret, Slash, LParen, RParen, End } kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char ch = src[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            while (i < src.size() && std::isalnum(static_cast<unsigned char>(src[i]))) ++i;
            out.push_back({Token::Name, src.substr(start, i - start), start});
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            out.push_back({Token::Int, src.substr(start, i - start), start});
        } else {
            Token::Kind k;
            switch (ch) {
                case '+': k = Token::Plus; break;
                case '-': k = Token::Minus; break;
                case '*': k = Token::Star; break;
                case '^': k = Token::Caret; break;
                case '/': k = Token::Slash; break;
                case '(': k = Token::LParen; break;
                case ')': k = Token::RParen; break;
                default:
                    throw ParseError(std::string("unexpected character '") + ch + "'", start);
            }
            out.push_back({k, src.substr(start, 1), start});
            ++i;
        }
    }
    out.push_back({Token::End, "", src.size()});
    return out;
}

bool is_function(const std::string& n) {
    return n == "d" || n == "Delta" || n == "DeltaL" || n == "S" || n == "eps" || n == "nf";
}

class Parser {
public:
    Parser(const std::string& src, const Presentation& algebra)
        : tokens_(lex(src)), alg_(&algebra) {}

    Value run() {
        if (peek().kind == Token::End) throw ParseError("empty expression", 0);
        Value v = parse_expr();
        if (peek().kind != Token::End)
            throw ParseError("unexpected trailing '" + peek().text + "'", peek().pos);
        return v;
    }

private:
    std::vector<Token> tokens_;
    std::size_t at_ = 0;
    const Presentation* alg_;

    const Token& peek() const { return tokens_[at_]; }
    Token next() { return tokens_[at_++]; }
    bool starts_factor(const Token& t) const {
        return t.kind == Token::Name || t.kind == Token::Int || t.kind == Token::LParen;
    }

    /* ---- value arithmetic with scalar promotion ---- */

    Value lift_like(const Scalar& s, const Value& shape) {
        if (std::holds_alternative<Element>(shape)) {
            const Element& e = std::get<Element>(shape);
            return s * Element::unit(e.pres() ? *e.pres() : *alg_);
        }
        if (std::holds_alternative<TensorElement>(shape)) {
            const TensorElement& t = std::get<TensorElement>(shape);
            return s * TensorElement::unit(*t.left_pres(), *t.right_pres());
        }
        return s;
    }

    Value add(Value a, Value b, bool minus, std::size_t pos) {
        if (std::holds_alternative<Scalar>(a) && !std::holds_alternative<Scalar>(b))
            a = lift_like(std::get<Scalar>(a), b);
        if (std::holds_alternative<Scalar>(b) && !std::holds_alternative<Scalar>(a))
            b = lift_like(std::get<Scalar>(b), a);
        if (a.index() != b.index())
            throw ParseError("cannot add an algebra element and a tensor", pos);
        if (std::holds_alternative<Scalar>(a)) {
            Scalar r = std::get<Scalar>(a);
            minus ? r -= std::get<Scalar>(b) : r += std::get<Scalar>(b);
            return r;
        }
        if (std::holds_alternative<Element>(a)) {
            const Element& y = std::get<Element>(b);
            return minus ? std::get<Element>(a) - y : std::get<Element>(a) + y;
        }
        const TensorElement& y = std::get<TensorElement>(b);
        return minus ? std::get<TensorElement>(a) - y : std::get<TensorElement>(a) + y;
    }

    Value mul(Value a, Value b, std::size_t pos) {
        if (std::holds_alternative<Scalar>(a)) {
            const Scalar& s = std::get<Scalar>(a);
            if (std::holds_alternative<Scalar>(b)) return s * std::get<Scalar>(b);
            if (std::holds_alternative<Element>(b)) return s * std::get<Element>(b);
            return s * std::get<TensorElement>(b);
        }
        if (std::holds_alternative<Scalar>(b)) return mul(b, a, pos);
        if (a.index() != b.index())
            throw ParseError("cannot multiply an algebra element and a tensor", pos);
        if (std::holds_alternative<Element>(a))
            return std::get<Element>(a) * std::get<Element>(b);
        return std::get<TensorElement>(a) * std::get<TensorElement>(b);
    }

    Value power(Value base, long n, std::size_t pos) {
        if (n < 0) return negative_power(base, -n, pos);
        if (std::holds_alternative<Scalar>(base)) {
            Scalar r = Scalar::one();
            while (n-- > 0) r *= std::get<Scalar>(base);
            return r;
        }
        if (std::holds_alternative<Element>(base)) {
            const Element& e = std::get<Element>(base);
            Element r = Element::unit(e.pres() ? *e.pres() : *alg_);
            while (n-- > 0) r = r * e;
            return r;
        }
        const TensorElement& t = std::get<TensorElement>(base);
        TensorElement r = TensorElement::unit(*t.left_pres(), *t.right_pres());
        while (n-- > 0) r = r * t;
        return r;
    }

    Value negative_power(const Value& base, long n, std::size_t pos) {
        if (std::holds_alternative<Scalar>(base)) {
            Scalar inv = std::get<Scalar>(base).inv();
            Scalar r = Scalar::one();
            while (n-- > 0) r *= inv;
            return r;
        }
        if (std::holds_alternative<Element>(base)) {
            const Element& e = std::get<Element>(base);
            // only the coordinate letters invert: x <-> x^-1
            if (e.terms().size() == 1 && e.terms().begin()->second == Scalar::one()) {
                const Word& w = e.terms().begin()->first;
                if (w.size() == 1 && (w[0] == gen::x || w[0] == gen::xi)) {
                    char inv = w[0] == gen::x ? gen::xi : gen::x;
                    return Element::from_word(*e.pres(), Word(static_cast<std::size_t>(n), inv));
                }
            }
        }
        throw ParseError("negative powers exist only for x, x^-1, q, j and scalar monomials",
                         pos);
    }

    /* ---- grammar ---- */

    Value parse_expr() {
        Value v = parse_term();
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            Token op = next();
            Value rhs = parse_term();
            v = add(std::move(v), std::move(rhs), op.kind == Token::Minus, op.pos);
        }
        return v;
    }

    Value parse_term() {
        Value v = parse_factor();
        for (;;) {
            if (peek().kind == Token::Star) {
                Token op = next();
                v = mul(std::move(v), parse_factor(), op.pos);
            } else if (starts_factor(peek())) {
                std::size_t pos = peek().pos;
                v = mul(std::move(v), parse_factor(), pos);
            } else {
                break;
            }
        }
        return v;
    }

    Value parse_factor() {
        Value v = parse_atom();
        if (peek().kind == Token::Caret) {
            next();
            bool neg = false;
            if (peek().kind == Token::Minus) {
                neg = true;
                next();
            }
            if (peek().kind != Token::Int)
                throw ParseError("expected an integer exponent", peek().pos);
            Token t = next();
            long n;
            try {
                n = std::stol(t.text);
            } catch (const std::exception&) {
                throw ParseError("exponent out of range", t.pos);
            }
            v = power(std::move(v), neg ? -n : n, t.pos);
        }
        return v;
    }

    Value parse_atom() {
        Token t = next();
        switch (t.kind) {
            case Token::Int: return parse_rational(t);
            case Token::Name: return parse_name(t);
            case Token::LParen: {
                Value v = parse_expr();
                expect_rparen(t.pos);
                return v;
            }
            case Token::Minus:
                throw ParseError("there is no unary minus; write 0 - ...", t.pos);
            default:
                throw ParseError("unexpected '" + t.text + "'", t.pos);
        }
    }

    void expect_rparen(std::size_t open_pos) {
        if (peek().kind != Token::RParen)
            throw ParseError("unclosed '(' ", open_pos);
        next();
    }

    Value parse_rational(const Token& t) {
        Rational num(t.text);
        if (peek().kind == Token::Slash) {
            next();
            if (peek().kind != Token::Int)
                throw ParseError("expected an integer denominator", peek().pos);
            Token d = next();
            Rational den(d.text);
            if (den == 0) throw ParseError("division by zero", d.pos);
            return Scalar(Rational(num / den));
        }
        return Scalar(num);
    }

    Value parse_name(const Token& t) {
        if (is_function(t.text) && peek().kind == Token::LParen) {
            std::size_t open = peek().pos;
            next();
            Value arg = parse_expr();
            expect_rparen(open);
            return apply_function(t.text, std::move(arg), t.pos);
        }
        if (is_function(t.text) && generator_from_symbol(t.text) < 0)
            throw ParseError("the function '" + t.text + "' needs parentheses", t.pos);
        if (t.text == "q") return Scalar::q(1);
        if (t.text == "j") return Scalar::j(1);
        if (t.text == "w" || t.text == "u") {
            if (alg_->name() != "omega")
                throw Error("the invariant form '" + t.text +
                            "' lives in the omega algebra (got '" + alg_->name() + "')");
            return t.text == "w" ? cartan_w() : cartan_u();
        }
        int g = generator_from_symbol(t.text);
        if (g < 0) throw ParseError("unknown name '" + t.text + "'", t.pos);
        if (!alg_->has(static_cast<char>(g)))
            throw Error("generator '" + t.text + "' is not available in the '" +
                        alg_->name() + "' algebra");
        return Element::gen(*alg_, static_cast<char>(g));
    }

    Element element_arg(Value v, const Presentation& p, const std::string& fn) {
        if (std::holds_alternative<Scalar>(v))
            return std::get<Scalar>(v) * Element::unit(p);
        if (std::holds_alternative<Element>(v)) return std::get<Element>(v);
        throw Error(fn + " does not act on tensors");
    }

    Value apply_function(const std::string& fn, Value arg, std::size_t pos) {
        (void)pos;
        if (fn == "nf") return value_normal_form(arg);
        if (fn == "d") {
            if (alg_->name() != "omega")
                throw Error("d needs the omega algebra (run with --algebra omega)");
            return differentiate(element_arg(std::move(arg), omega(), "d"));
        }
        if (fn == "Delta") {
            if (alg_->name() != "plane")
                throw Error("Delta is defined on the plane algebra");
            return coproduct().apply(element_arg(std::move(arg), plane(), "Delta"));
        }
        if (fn == "DeltaL") {
            if (alg_->name() != "omega")
                throw Error("DeltaL is defined on the omega algebra");
            return delta_L().apply(element_arg(std::move(arg), omega(), "DeltaL"));
        }
        if (fn == "S") {
            if (alg_->name() != "plane")
                throw Error("S is defined on the plane algebra");
            return antipode(element_arg(std::move(arg), plane(), "S"));
        }
        if (fn == "eps") {
            if (alg_->name() != "plane" && alg_->name() != "omega")
                throw Error("eps is defined on the plane and omega algebras");
            return counit(element_arg(std::move(arg), *alg_, "eps"));
        }
        throw Error("unknown function '" + fn + "'");
    }
};

}  // namespace

Value evaluate(const std::string& src, const Presentation& algebra) {
    return Parser(src, algebra).run();
}

Value value_normal_form(const Value& v, Strategy strategy, std::size_t budget) {
    if (std::holds_alternative<Element>(v))
        return normal_form(std::get<Element>(v), strategy, budget);
    if (std::holds_alternative<TensorElement>(v))
        return tensor_normal_form(std::get<TensorElement>(v), strategy, budget);
    return v;
}

std::string to_string(const Value& v) {
    if (std::holds_alternative<Scalar>(v)) return to_string(std::get<Scalar>(v));
    if (std::holds_alternative<Element>(v)) return to_string(std::get<Element>(v));
    return to_string(std::get<TensorElement>(v));
}

}  // namespace z3q

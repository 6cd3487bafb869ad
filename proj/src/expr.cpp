#include "infhecke/expr.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace infhecke {

namespace {

struct Token {
    enum class Kind { Number, Gen, Delta, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind = Kind::End;
    std::size_t offset = 0;
    std::string digits{};  // Number only
    Gen gen = Gen::F;      // Gen only
};

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t at = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                digits += text[i++];
            out.push_back(Token{Token::Kind::Number, at, std::move(digits)});
            continue;
        }
        ++i;
        switch (c) {
            case 'f': out.push_back(Token{Token::Kind::Gen, at, "", Gen::F}); break;
            case 'h': out.push_back(Token{Token::Kind::Gen, at, "", Gen::H}); break;
            case 'e': out.push_back(Token{Token::Kind::Gen, at, "", Gen::E}); break;
            case 'y': out.push_back(Token{Token::Kind::Gen, at, "", Gen::Y}); break;
            case 'x': out.push_back(Token{Token::Kind::Gen, at, "", Gen::X}); break;
            case 'D': out.push_back(Token{Token::Kind::Delta, at}); break;
            case '+': out.push_back(Token{Token::Kind::Plus, at}); break;
            case '-': out.push_back(Token{Token::Kind::Minus, at}); break;
            case '*': out.push_back(Token{Token::Kind::Star, at}); break;
            case '^': out.push_back(Token{Token::Kind::Caret, at}); break;
            case '/': out.push_back(Token{Token::Kind::Slash, at}); break;
            case '(': out.push_back(Token{Token::Kind::LParen, at}); break;
            case ')': out.push_back(Token{Token::Kind::RParen, at}); break;
            default: throw SyntaxError(std::string("unexpected character '") + c + "'", at);
        }
    }
    out.push_back(Token{Token::Kind::End, text.size()});
    return out;
}

constexpr unsigned kMaxExponent = 4095;  // monomial exponents must pack into 12 bits

class Parser {
  public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    std::unique_ptr<Expr> run() {
        auto e = parseExpr();
        expect(Token::Kind::End, "trailing input");
        return e;
    }

  private:
    const Token& cur() const { return toks_[pos_]; }
    void advance() { ++pos_; }
    bool accept(Token::Kind k) {
        if (cur().kind != k) return false;
        advance();
        return true;
    }
    void expect(Token::Kind k, const char* what) {
        if (cur().kind != k) throw SyntaxError(std::string("expected ") + what, cur().offset);
    }

    static std::unique_ptr<Expr> node(Expr::Kind k, std::size_t at) {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        e->offset = at;
        return e;
    }

    unsigned parseNat(const char* what) {
        expect(Token::Kind::Number, what);
        const Token& t = cur();
        if (t.digits.size() > 4) throw SyntaxError("exponent overflow", t.offset);
        unsigned long v = std::stoul(t.digits);
        if (v > kMaxExponent) throw SyntaxError("exponent overflow", t.offset);
        advance();
        return unsigned(v);
    }

    std::unique_ptr<Expr> parseExpr() {
        std::size_t at = cur().offset;
        std::unique_ptr<Expr> acc;
        if (accept(Token::Kind::Minus)) {
            auto n = node(Expr::Kind::Neg, at);
            n->lhs = parseTerm();
            acc = std::move(n);
        } else {
            acc = parseTerm();
        }
        for (;;) {
            std::size_t opAt = cur().offset;
            if (accept(Token::Kind::Plus)) {
                auto n = node(Expr::Kind::Add, opAt);
                n->lhs = std::move(acc);
                n->rhs = parseTerm();
                acc = std::move(n);
            } else if (accept(Token::Kind::Minus)) {
                auto n = node(Expr::Kind::Sub, opAt);
                n->lhs = std::move(acc);
                n->rhs = parseTerm();
                acc = std::move(n);
            } else {
                return acc;
            }
        }
    }

    static bool startsFactor(Token::Kind k) {
        return k == Token::Kind::Number || k == Token::Kind::Gen ||
               k == Token::Kind::Delta || k == Token::Kind::LParen;
    }

    std::unique_ptr<Expr> parseTerm() {
        auto acc = parseFactor();
        for (;;) {
            std::size_t opAt = cur().offset;
            if (accept(Token::Kind::Star) || startsFactor(cur().kind)) {
                auto n = node(Expr::Kind::Mul, opAt);
                n->lhs = std::move(acc);
                n->rhs = parseFactor();
                acc = std::move(n);
            } else {
                return acc;
            }
        }
    }

    std::unique_ptr<Expr> parseFactor() {
        auto base = parseAtom();
        if (accept(Token::Kind::Caret)) {
            auto n = node(Expr::Kind::Pow, base->offset);
            n->exponent = parseNat("exponent");
            n->lhs = std::move(base);
            return n;
        }
        return base;
    }

    std::unique_ptr<Expr> parseAtom() {
        const Token t = cur();
        switch (t.kind) {
            case Token::Kind::Number: {
                advance();
                Rational num(t.digits);
                if (accept(Token::Kind::Slash)) {
                    expect(Token::Kind::Number, "denominator");
                    const Token d = cur();
                    advance();
                    Rational den(d.digits);
                    if (den == 0) throw SyntaxError("zero denominator", d.offset);
                    num /= den;
                }
                num.canonicalize();
                auto n = node(Expr::Kind::Number, t.offset);
                n->number = std::move(num);
                return n;
            }
            case Token::Kind::Gen: {
                advance();
                auto n = node(Expr::Kind::Generator, t.offset);
                n->gen = t.gen;
                return n;
            }
            case Token::Kind::Delta: {
                advance();
                return node(Expr::Kind::Delta, t.offset);
            }
            case Token::Kind::LParen: {
                advance();
                auto inner = parseExpr();
                expect(Token::Kind::RParen, "')'");
                advance();
                return inner;
            }
            default:
                throw SyntaxError("expected an atom", t.offset);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

Expression parse(std::string_view text) { return Expression(Parser(text).run()); }

NcPoly evaluate(const Expr& e, const Algebra& algebra) {
    switch (e.kind) {
        case Expr::Kind::Number: return NcPoly::constant(e.number);
        case Expr::Kind::Generator: return NcPoly::gen(e.gen);
        case Expr::Kind::Delta: return expandDelta(DeltaPoly::delta());
        case Expr::Kind::Add: return evaluate(*e.lhs, algebra) + evaluate(*e.rhs, algebra);
        case Expr::Kind::Sub: return evaluate(*e.lhs, algebra) - evaluate(*e.rhs, algebra);
        case Expr::Kind::Mul:
            return algebra.multiply(evaluate(*e.lhs, algebra), evaluate(*e.rhs, algebra));
        case Expr::Kind::Pow: return algebra.pow(evaluate(*e.lhs, algebra), e.exponent);
        case Expr::Kind::Neg: return -evaluate(*e.lhs, algebra);
    }
    return NcPoly::zero();
}

NcPoly evaluate(const Expression& e, const Algebra& algebra) {
    return evaluate(e.root(), algebra);
}

namespace {

DeltaPoly evaluateDeltaNode(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Number: return DeltaPoly(e.number);
        case Expr::Kind::Generator:
            throw SyntaxError(std::string("generator '") + genName(e.gen) +
                                  "' is not allowed in a Delta-polynomial",
                              e.offset);
        case Expr::Kind::Delta: return DeltaPoly::delta();
        case Expr::Kind::Add: return evaluateDeltaNode(*e.lhs) + evaluateDeltaNode(*e.rhs);
        case Expr::Kind::Sub: return evaluateDeltaNode(*e.lhs) - evaluateDeltaNode(*e.rhs);
        case Expr::Kind::Mul: return evaluateDeltaNode(*e.lhs) * evaluateDeltaNode(*e.rhs);
        case Expr::Kind::Pow: return evaluateDeltaNode(*e.lhs).pow(e.exponent);
        case Expr::Kind::Neg: return -evaluateDeltaNode(*e.lhs);
    }
    return DeltaPoly::zero();
}

}  // namespace

DeltaPoly evaluateDelta(const Expression& e) { return evaluateDeltaNode(e.root()); }

}  // namespace infhecke

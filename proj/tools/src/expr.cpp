#include "qjl_cli/expr.hpp"

#include <cctype>

#include "qjl/errors.hpp"

namespace qjl::cli {

namespace {

struct Token {
    enum class Kind { Ident, Number, Plus, Minus, Star, Caret, LParen, RParen, End };
    Kind kind = Kind::End;
    std::string text;
    Span span;
};

std::string describe(const Token &t)
{
    return t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
}

std::string where(const Span &s)
{
    return "line " + std::to_string(s.line) + ", column " + std::to_string(s.column);
}

std::vector<Token> lex(const std::string &src)
{
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        char ch = src[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
            continue;
        }
        Token t;
        t.span = {line, col, 1};
        std::size_t j = i;
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
                ++j;
            }
            t.kind = Token::Kind::Ident;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                ++j;
            }
            if (j < src.size() && src[j] == '/') {
                std::size_t k = j + 1;
                while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
                    ++k;
                }
                if (k == j + 1) {
                    throw ParseError("denominator expected after '/' at " + where({line, col + static_cast<int>(j - i) + 1, 1}));
                }
                j = k;
            }
            t.kind = Token::Kind::Number;
        } else {
            j = i + 1;
            switch (ch) {
            case '+': t.kind = Token::Kind::Plus; break;
            case '-': t.kind = Token::Kind::Minus; break;
            case '*': t.kind = Token::Kind::Star; break;
            case '^': t.kind = Token::Kind::Caret; break;
            case '(': t.kind = Token::Kind::LParen; break;
            case ')': t.kind = Token::Kind::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + ch + "' at " + where(t.span));
            }
        }
        t.text = src.substr(i, j - i);
        t.span.length = static_cast<int>(j - i);
        out.push_back(t);
        advance(j - i);
    }
    Token end;
    end.span = {line, col, 0};
    out.push_back(end);
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    std::unique_ptr<Expr> parse()
    {
        auto e = expr();
        if (peek().kind != Token::Kind::End) {
            fail("unexpected " + describe(peek()));
        }
        return e;
    }

private:
    const Token &peek() const { return toks_[pos_]; }
    const Token &take() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string &msg) const
    {
        throw ParseError(msg + " at " + where(peek().span));
    }

    static std::unique_ptr<Expr> node(Expr::Kind k, Span s)
    {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        e->span = s;
        return e;
    }

    std::unique_ptr<Expr> expr()
    {
        std::unique_ptr<Expr> lhs;
        if (peek().kind == Token::Kind::Minus) {
            Span s = take().span;
            lhs = node(Expr::Kind::Neg, s);
            lhs->args.push_back(term());
        } else {
            lhs = term();
        }
        while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
            const Token &op = take();
            auto n = node(op.kind == Token::Kind::Plus ? Expr::Kind::Add : Expr::Kind::Sub, op.span);
            n->args.push_back(std::move(lhs));
            n->args.push_back(term());
            lhs = std::move(n);
        }
        return lhs;
    }

    std::unique_ptr<Expr> term()
    {
        auto lhs = factor();
        while (peek().kind == Token::Kind::Star) {
            const Token &op = take();
            auto n = node(Expr::Kind::Mul, op.span);
            n->args.push_back(std::move(lhs));
            n->args.push_back(factor());
            lhs = std::move(n);
        }
        return lhs;
    }

    std::unique_ptr<Expr> factor()
    {
        auto base = atom();
        if (peek().kind == Token::Kind::Caret) {
            const Token &op = take();
            if (peek().kind != Token::Kind::Number || peek().text.find('/') != std::string::npos) {
                fail("non-negative integer exponent expected, found " + describe(peek()));
            }
            const Token &num = take();
            if (num.text.size() > 4) {
                throw ParseError("exponent too large at " + where(num.span));
            }
            auto n = node(Expr::Kind::Pow, op.span);
            n->exponent = static_cast<unsigned>(std::stoul(num.text));
            n->args.push_back(std::move(base));
            return n;
        }
        return base;
    }

    std::unique_ptr<Expr> atom()
    {
        const Token &t = peek();
        switch (t.kind) {
        case Token::Kind::Ident: {
            take();
            auto n = node(Expr::Kind::Symbol, t.span);
            try {
                n->sym = sym_from_name(t.text);
            } catch (const ParseError &) {
                throw ParseError("unknown symbol '" + t.text + "' at " + where(t.span));
            }
            return n;
        }
        case Token::Kind::Number: {
            take();
            auto n = node(Expr::Kind::Number, t.span);
            n->value = parse_rational(t.text);
            return n;
        }
        case Token::Kind::LParen: {
            take();
            auto e = expr();
            if (peek().kind != Token::Kind::RParen) {
                fail("')' expected, found " + describe(peek()));
            }
            take();
            return e;
        }
        default:
            fail("symbol, number or '(' expected, found " + describe(t));
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace

int Expr::weight() const
{
    switch (kind) {
    case Kind::Symbol: return sym_weight(sym);
    case Kind::Number: return 0;
    case Kind::Neg: return args[0]->weight();
    case Kind::Add:
    case Kind::Sub: {
        int a = args[0]->weight(), b = args[1]->weight();
        if (a != b) {
            throw WeightError("sum of weights " + std::to_string(a) + " and " + std::to_string(b) + " at " +
                              where(span));
        }
        return a;
    }
    case Kind::Mul: return args[0]->weight() + args[1]->weight();
    case Kind::Pow: return args[0]->weight() * static_cast<int>(exponent);
    }
    return 0;
}

GeneratorPoly Expr::to_poly() const
{
    switch (kind) {
    case Kind::Symbol: return GeneratorPoly(sym);
    case Kind::Number: return GeneratorPoly(GQ(value));
    case Kind::Neg: return -args[0]->to_poly();
    case Kind::Add: return args[0]->to_poly() + args[1]->to_poly();
    case Kind::Sub: return args[0]->to_poly() - args[1]->to_poly();
    case Kind::Mul: return args[0]->to_poly() * args[1]->to_poly();
    case Kind::Pow: return args[0]->to_poly().pow(exponent);
    }
    return {};
}

std::string Expr::print() const
{
    switch (kind) {
    case Kind::Symbol: return sym_name(sym);
    case Kind::Number: return to_string(value);
    case Kind::Neg: return "(-" + args[0]->print() + ")";
    case Kind::Add: return "(" + args[0]->print() + " + " + args[1]->print() + ")";
    case Kind::Sub: return "(" + args[0]->print() + " - " + args[1]->print() + ")";
    case Kind::Mul: return "(" + args[0]->print() + "*" + args[1]->print() + ")";
    case Kind::Pow: return "(" + args[0]->print() + ")^" + std::to_string(exponent);
    }
    return {};
}

std::unique_ptr<Expr> parse_expr(const std::string &src)
{
    auto toks = lex(src);
    if (toks.size() == 1) {
        throw ParseError("empty expression");
    }
    return Parser(std::move(toks)).parse();
}

GeneratorPoly parse_poly(const std::string &src)
{
    return parse_expr(src)->to_poly();
}

} // namespace qjl::cli

#include "qp/shell/parser.hpp"

#include "qp/error.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace qp::shell {

namespace {

enum class Tok {
    Ident,
    Int,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

const char* tok_name(Tok t) {
    switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Caret: return "'^'";
    case Tok::Slash: return "'/'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::End: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> toks;
    int line = 1, col = 1;
    size_t n = 0;
    auto push = [&](Tok k, std::string text) {
        toks.push_back({k, std::move(text), line, col});
    };
    while (n < src.size()) {
        char c = src[n];
        if (c == '\n') {
            ++line;
            col = 1;
            ++n;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++n;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = n;
            while (n < src.size() && std::isdigit(static_cast<unsigned char>(src[n]))) ++n;
            push(Tok::Int, src.substr(start, n - start));
            col += static_cast<int>(n - start);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = n;
            while (n < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[n])) || src[n] == '_'))
                ++n;
            push(Tok::Ident, src.substr(start, n - start));
            col += static_cast<int>(n - start);
            continue;
        }
        Tok k;
        switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '^': k = Tok::Caret; break;
        case '/': k = Tok::Slash; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case '[': k = Tok::LBracket; break;
        case ']': k = Tok::RBracket; break;
        case ',': k = Tok::Comma; break;
        default: {
            std::ostringstream os;
            os << "ParseError at " << line << ":" << col << ": unexpected character '" << c << "'";
            throw Error(ErrorKind::ParseError, os.str());
        }
        }
        push(k, std::string(1, c));
        ++col;
        ++n;
    }
    toks.push_back({Tok::End, "", line, col});
    return toks;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    AstPtr run() {
        AstPtr e = expr();
        expect(Tok::End);
        return e;
    }

private:
    const Token& peek(size_t ahead = 0) const {
        size_t n = pos_ + ahead;
        return n < toks_.size() ? toks_[n] : toks_.back();
    }
    Token advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool check(Tok k) const { return peek().kind == k; }
    bool accept(Tok k) {
        if (!check(k)) return false;
        advance();
        return true;
    }
    Token expect(Tok k) {
        if (!check(k)) fail({k});
        return advance();
    }
    [[noreturn]] void fail(std::initializer_list<Tok> expected) const {
        const Token& t = peek();
        std::ostringstream os;
        os << "ParseError at " << t.line << ":" << t.col << ": unexpected " << tok_name(t.kind);
        if (expected.size() > 0) {
            os << ", expected ";
            bool first = true;
            for (Tok k : expected) {
                if (!first) os << " or ";
                os << tok_name(k);
                first = false;
            }
        }
        throw Error(ErrorKind::ParseError, os.str());
    }

    AstPtr expr() {
        AstPtr lhs = term();
        while (check(Tok::Plus) || check(Tok::Minus)) {
            Tok op = advance().kind;
            AstPtr rhs = term();
            lhs = Ast::binary(op == Tok::Plus ? NodeKind::Add : NodeKind::Sub, lhs, rhs);
        }
        return lhs;
    }

    AstPtr term() {
        AstPtr lhs = factor();
        while (accept(Tok::Star)) lhs = Ast::binary(NodeKind::Mul, lhs, factor());
        return lhs;
    }

    AstPtr factor() {
        if (accept(Tok::Minus)) return Ast::neg(factor());
        AstPtr b = base();
        if (accept(Tok::Caret)) return Ast::pow(b, signed_int());
        return b;
    }

    int signed_int() {
        bool neg = accept(Tok::Minus);
        Token t = expect(Tok::Int);
        int v;
        try {
            v = std::stoi(t.text);
        } catch (const std::out_of_range&) {
            std::ostringstream os;
            os << "ParseError at " << t.line << ":" << t.col << ": exponent out of range";
            throw Error(ErrorKind::ParseError, os.str());
        }
        return neg ? -v : v;
    }

    AstPtr base() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Int:
            return Ast::lit(mpq_class(advance().text, 10));
        case Tok::LParen: {
            // "(" int "/" int ")" is a rational literal, anything else an expression
            if (peek(1).kind == Tok::Int && peek(2).kind == Tok::Slash &&
                peek(3).kind == Tok::Int && peek(4).kind == Tok::RParen) {
                advance();
                std::string num = advance().text;
                advance();
                Token dt = advance();
                advance();
                mpq_class r(num + "/" + dt.text, 10);
                if (r.get_den() == 0) {
                    std::ostringstream os;
                    os << "ParseError at " << dt.line << ":" << dt.col << ": zero denominator";
                    throw Error(ErrorKind::ParseError, os.str());
                }
                r.canonicalize();
                return Ast::lit(r);
            }
            advance();
            AstPtr e = expr();
            expect(Tok::RParen);
            return e;
        }
        case Tok::LBracket: {
            advance();
            AstPtr f = expr();
            expect(Tok::Comma);
            AstPtr g = expr();
            expect(Tok::RBracket);
            return Ast::binary(NodeKind::Bracket, f, g);
        }
        case Tok::Ident: {
            std::string name = advance().text;
            if (name == "x") return Ast::leaf(NodeKind::VarX);
            if (name == "p" || name == "y") return Ast::leaf(NodeKind::VarP);
            if (name == "q") return Ast::leaf(NodeKind::QVar);
            if (accept(Tok::LParen)) {
                std::vector<AstPtr> args;
                args.push_back(expr());
                while (accept(Tok::Comma)) args.push_back(expr());
                expect(Tok::RParen);
                return Ast::call(std::move(name), std::move(args));
            }
            return Ast::ident(std::move(name));
        }
        default:
            fail({Tok::Ident, Tok::Int, Tok::LParen, Tok::LBracket});
        }
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

} // namespace

AstPtr parse(const std::string& src) { return Parser(lex(src)).run(); }

} // namespace qp::shell

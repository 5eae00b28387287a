#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace qp::shell {

struct Ast;
using AstPtr = std::shared_ptr<const Ast>;

enum class NodeKind {
    VarX,
    VarP, // 'y' is lexed as an alias for p
    QVar,
    Rational,
    Add,
    Sub,
    Mul,
    Pow,
    Bracket,
    Call,
    Neg,
    Ident, // session variable reference
};

struct Ast {
    NodeKind kind;
    mpq_class rational;        // Rational
    int exponent = 0;          // Pow
    std::string name;          // Call / Ident
    std::vector<AstPtr> args;  // children

    static AstPtr leaf(NodeKind k) { return std::make_shared<Ast>(Ast{k}); }
    static AstPtr lit(mpq_class r) {
        Ast a{NodeKind::Rational};
        a.rational = std::move(r);
        return std::make_shared<Ast>(std::move(a));
    }
    static AstPtr binary(NodeKind k, AstPtr l, AstPtr r) {
        Ast a{k};
        a.args = {std::move(l), std::move(r)};
        return std::make_shared<Ast>(std::move(a));
    }
    static AstPtr pow(AstPtr base, int e) {
        Ast a{NodeKind::Pow};
        a.exponent = e;
        a.args = {std::move(base)};
        return std::make_shared<Ast>(std::move(a));
    }
    static AstPtr neg(AstPtr c) {
        Ast a{NodeKind::Neg};
        a.args = {std::move(c)};
        return std::make_shared<Ast>(std::move(a));
    }
    static AstPtr call(std::string name, std::vector<AstPtr> args) {
        Ast a{NodeKind::Call};
        a.name = std::move(name);
        a.args = std::move(args);
        return std::make_shared<Ast>(std::move(a));
    }
    static AstPtr ident(std::string name) {
        Ast a{NodeKind::Ident};
        a.name = std::move(name);
        return std::make_shared<Ast>(std::move(a));
    }
};

} // namespace qp::shell

#include "qp/shell/parser.hpp"
#include "qp/shell/printer.hpp"
#include "qp/shell/session.hpp"

#include "qp/serialize.hpp"
#include "testutil.hpp"

#include <doctest.h>

using namespace qp;
using namespace qp::shell;
using namespace qptest;

namespace {

QElement ev(const std::string& src) { return Session().eval_element(parse(src)); }

} // namespace

TEST_CASE("parse: structure") {
    AstPtr a = parse("p*x");
    CHECK(a->kind == NodeKind::Mul);
    CHECK(a->args[0]->kind == NodeKind::VarP);
    CHECK(a->args[1]->kind == NodeKind::VarX);

    a = parse("[x, p]");
    CHECK(a->kind == NodeKind::Bracket);

    a = parse("x^2*p - q*p*x^2");
    CHECK(a->kind == NodeKind::Sub);
    CHECK(a->args[0]->kind == NodeKind::Mul);
    CHECK(a->args[0]->args[0]->kind == NodeKind::Pow);
    CHECK(a->args[0]->args[0]->exponent == 2);

    // y is an alias for p at the lexical level
    CHECK(parse("y")->kind == NodeKind::VarP);
    // rational literal
    a = parse("(3/2)*x");
    CHECK(a->args[0]->kind == NodeKind::Rational);
    CHECK(a->args[0]->rational == mpq_class(3, 2));
}

TEST_CASE("parse errors carry position") {
    try {
        parse("x + * p");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
        CHECK(std::string(e.what()).find("1:5") != std::string::npos);
    }
    CHECK_THROWS_AS(parse("x x"), Error);    // juxtaposition is rejected
    CHECK_THROWS_AS(parse("(x"), Error);
    CHECK_THROWS_AS(parse(""), Error);
    CHECK_THROWS_AS(parse("x ^ p"), Error);  // exponents are integer literals
}

TEST_CASE("eval") {
    CHECK(ev("p*x") == QElement::term(QScalar::q(), 1, 1));
    CHECK(ev("x^2*p - q*p*x^2") ==
          QElement::term(QScalar::one() - QScalar::q_power(3), 2, 1));
    CHECK(ev("[x,x]") == QElement::zero());
    CHECK(ev("y*x") == ev("p*x"));
    CHECK(ev("x^-1") == QElement::x(-1));
    CHECK(ev("-(1/2)*q*p") ==
          QElement::term(QScalar(mpq_class(-1, 2)) * QScalar::q(), 0, 1));
}

TEST_CASE("eval: function calls") {
    Session s;
    CHECK(std::get<QElement>(s.eval(parse("dp(p^3)"))) ==
          QElement::term(QScalar::q_int(3), 0, 2));
    CHECK(std::get<QElement>(s.eval(parse("inv(x*p)"))) ==
          QElement::term(QScalar::q(), -1, -1));
    CHECK(std::get<QElement>(s.eval(parse("subst(x*p, 1, 0)"))) ==
          QElement::term(QScalar::q(), 1, 1));
    CHECK(std::get<ClassicalPoly>(s.eval(parse("limit1(x)"))).at({1, 0}) == 1);
    CHECK(std::get<QElement>(s.eval(parse("ddt(x, p)"))) ==
          QElement::term(QScalar::one() - QScalar::q(), 1, 1));
    // H through the session variable
    s.bind("H", QElement::p());
    CHECK(std::get<QElement>(s.eval(parse("grad_x(x)"))) == QElement::one());
    auto rep = std::get<calculus::ComparisonReport>(s.eval(parse("cmp314(x*p)")));
    CHECK(rep.supports_match);
    CHECK_THROWS_AS(s.eval(parse("nosuch(x)")), Error);
    CHECK_THROWS_AS(s.eval(parse("grad_x(x, x)")), Error); // [x,x] = 0
}

TEST_CASE("print") {
    CHECK(print_text(QElement::zero()) == "0");
    CHECK(print_text(QElement::term(QScalar::q(), 1, 1)) == "q * x * p");
    CHECK(print_latex(QElement::term(QScalar::q(), 1, 1)) == "q\\,x\\,p");
    CHECK(print_text(QElement::x()) == "x");
    // canonical form makes the denominator's leading coefficient positive
    QScalar c = QScalar::one() / (QScalar::one() - QScalar::q());
    CHECK(print_text(QElement::term(c, 0, 0)) == "-1 * (-1 + q)^-1");
    CHECK(print_latex(QElement::term(c, 0, 0)) == "\\frac{-1}{-1 + q}");
    // numeric mode evaluates coefficients at q0
    CHECK(print_text(QElement::term(QScalar::q_int(2), 1, 0), mpq_class(1, 2)) ==
          "(5/4) * x");
}

TEST_CASE("text round-trip on random elements") {
    for (int trial = 0; trial < 500; ++trial) {
        QElement e = rand_qelement(5, -4, 4);
        std::string s = print_text(e);
        CAPTURE(s);
        CHECK(ev(s) == e);
    }
    // coefficients with polynomial denominators round-trip too
    QScalar c = (QScalar::one() + QScalar::q()) / (QScalar::one() - QScalar::q_power(3));
    QElement e = QElement::term(c, -2, 3) + QElement::term(QScalar(mpq_class(7, 2)), 1, 0);
    CHECK(ev(print_text(e)) == e);
}

TEST_CASE("json round-trip on random elements") {
    for (int trial = 0; trial < 200; ++trial) {
        QElement e = rand_qelement(5, -4, 4);
        CHECK(qelement_from_json(nlohmann::json::parse(print_json(e))) == e);
    }
    QScalar s = rand_qscalar();
    CHECK(qscalar_from_json(to_json(s)) == s);
}

TEST_CASE("parser totality: fuzz smoke") {
    std::mt19937 gen(42);
    const std::string alphabet = "xpyq0123456789+-*^/()[], .#";
    for (int trial = 0; trial < 2000; ++trial) {
        size_t len = gen() % 64;
        std::string s;
        for (size_t k = 0; k < len; ++k) s += alphabet[gen() % alphabet.size()];
        try {
            parse(s);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::ParseError);
        }
    }
}

TEST_CASE("determinism: identical input gives identical output") {
    auto run = [] {
        Session s;
        s.bind("H", QElement::x());
        return s.render(s.eval(parse("grad_bracket(x*p)")));
    };
    CHECK(run() == run());
}

TEST_CASE("repl lines") {
    Session s;
    CHECK(s.repl_line("f = x^2*p") == "f = x^2 * p");
    CHECK(s.repl_line("f - x^2*p") == "0");
    CHECK(s.repl_line("H = p") == "H = p");
    CHECK(s.repl_line("grad_x(f)") == print_text(mech::cov_x(ev("x^2*p"), Hamiltonian{QElement::p()})));
    CHECK_THROWS_AS(s.repl_line("g ="), Error);
}

TEST_CASE("session config header") {
    SessionConfig cfg;
    CHECK(cfg.header() == "# mixed_term_exponent=2 format=text q=symbolic");
    cfg.numeric_q = mpq_class(1, 2);
    cfg.output_format = Format::Json;
    CHECK(cfg.header() == "# mixed_term_exponent=2 format=json q=1/2");
}

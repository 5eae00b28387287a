#include "qp/shell/session.hpp"

#include "qp/serialize.hpp"
#include "qp/shell/parser.hpp"

#include <cctype>
#include <sstream>

namespace qp::shell {

std::string SessionConfig::header() const {
    std::ostringstream os;
    os << "# mixed_term_exponent=" << mixed_term_exponent << " format="
       << format_name(output_format) << " q=" << (numeric_q ? numeric_q->get_str() : "symbolic");
    return os.str();
}

namespace {

QElement pow_element(const QElement& base, int e) {
    if (e == 0) return QElement::one();
    QElement b = e < 0 ? base.invert() : base;
    int n = e < 0 ? -e : e;
    QElement r = QElement::one();
    for (int k = 0; k < n; ++k) r = r * b;
    return r;
}

int int_arg(const QElement& e, const char* what) {
    if (e.is_zero()) return 0;
    auto [m, c] = e.single_term();
    mpq_class v = c.eval_at(0); // constants only; eval at 0 detects q-dependence
    if (m.i != 0 || m.j != 0 || !(QElement::term(QScalar(v), 0, 0) == e) || v.get_den() != 1)
        throw Error(ErrorKind::ParseError, std::string(what) + ": expected an integer literal");
    return static_cast<int>(v.get_num().get_si());
}

} // namespace

Hamiltonian Session::session_h(const Ast&) const {
    auto it = vars_.find("H");
    if (it == vars_.end())
        throw Error(ErrorKind::ParseError,
                    "no Hamiltonian: pass it as the last argument or bind H (e.g. --H or H = ...)");
    return Hamiltonian{it->second};
}

EvalResult Session::eval(const AstPtr& ast) const {
    const Ast& a = *ast;
    CalculusConfig ccfg = cfg_.calculus();
    if (a.kind == NodeKind::Call) {
        auto need = [&](size_t lo, size_t hi) {
            if (a.args.size() < lo || a.args.size() > hi)
                throw Error(ErrorKind::ParseError, a.name + ": wrong number of arguments");
        };
        auto h_of = [&](size_t base_args) {
            return a.args.size() > base_args ? Hamiltonian{eval_element(a.args[base_args])}
                                             : session_h(a);
        };
        if (a.name == "dx") {
            need(1, 1);
            return calculus::d_x(eval_element(a.args[0]), ccfg);
        }
        if (a.name == "dp" || a.name == "dy") {
            need(1, 1);
            return calculus::d_p(eval_element(a.args[0]), ccfg);
        }
        if (a.name == "ddt") {
            need(1, 2);
            return mech::time_derivative(eval_element(a.args[0]), h_of(1));
        }
        if (a.name == "grad_x") {
            need(1, 2);
            return mech::cov_x(eval_element(a.args[0]), h_of(1));
        }
        if (a.name == "grad_p" || a.name == "grad_y") {
            need(1, 2);
            return mech::cov_p(eval_element(a.args[0]), h_of(1));
        }
        if (a.name == "grad_xp") {
            need(1, 2);
            return mech::cov_xp(eval_element(a.args[0]), h_of(1));
        }
        if (a.name == "grad_bracket") {
            need(1, 2);
            return mech::cov_bracket(eval_element(a.args[0]), h_of(1));
        }
        if (a.name == "curv") {
            need(1, 2);
            return curv::curvature(eval_element(a.args[0]), h_of(1), ccfg);
        }
        if (a.name == "inv") {
            need(1, 1);
            return eval_element(a.args[0]).invert();
        }
        if (a.name == "limit1") {
            need(1, 1);
            return eval_element(a.args[0]).classical_limit();
        }
        if (a.name == "subst") {
            need(3, 3);
            int k = int_arg(eval_element(a.args[1]), "subst");
            int l = int_arg(eval_element(a.args[2]), "subst");
            return eval_element(a.args[0]).scale_substitute(k, l);
        }
        if (a.name == "f314") {
            need(1, 1);
            return calculus::paper_formula_3_14(eval_element(a.args[0]));
        }
        if (a.name == "cmp314") {
            need(1, 1);
            return calculus::compare_3_14(eval_element(a.args[0]), ccfg);
        }
        throw Error(ErrorKind::ParseError, "unknown function '" + a.name + "'");
    }
    return eval_element(ast);
}

QElement Session::eval_element(const AstPtr& ast) const {
    const Ast& a = *ast;
    switch (a.kind) {
    case NodeKind::VarX: return QElement::x();
    case NodeKind::VarP: return QElement::p();
    case NodeKind::QVar: return QElement::term(QScalar::q(), 0, 0);
    case NodeKind::Rational: return QElement::term(QScalar(a.rational), 0, 0);
    case NodeKind::Add: return eval_element(a.args[0]) + eval_element(a.args[1]);
    case NodeKind::Sub: return eval_element(a.args[0]) - eval_element(a.args[1]);
    case NodeKind::Mul: return eval_element(a.args[0]) * eval_element(a.args[1]);
    case NodeKind::Neg: return -eval_element(a.args[0]);
    case NodeKind::Pow: return pow_element(eval_element(a.args[0]), a.exponent);
    case NodeKind::Bracket:
        return QElement::commutator(eval_element(a.args[0]), eval_element(a.args[1]));
    case NodeKind::Ident: {
        auto it = vars_.find(a.name);
        if (it == vars_.end())
            throw Error(ErrorKind::ParseError, "unknown variable '" + a.name + "'");
        return it->second;
    }
    case NodeKind::Call: {
        EvalResult r = eval(ast);
        if (auto* e = std::get_if<QElement>(&r)) return *e;
        throw Error(ErrorKind::ParseError,
                    a.name + " produces a report, not an algebra element");
    }
    }
    throw Error(ErrorKind::ParseError, "malformed expression");
}

std::string Session::render(const EvalResult& r) const {
    Format f = cfg_.output_format;
    if (const auto* e = std::get_if<QElement>(&r)) return print(*e, f, cfg_.numeric_q);
    if (const auto* cp = std::get_if<ClassicalPoly>(&r)) return print_classical(*cp, f);
    if (const auto* rep = std::get_if<calculus::ComparisonReport>(&r))
        return f == Format::Json ? to_json(*rep).dump(2) : rep->to_table();
    const auto& res = std::get<CurvatureResult>(r);
    return f == Format::Json ? to_json(res).dump(2) : res.to_table();
}

std::string Session::repl_line(const std::string& line) {
    // `name = expr` binds a session variable; anything else evaluates
    size_t eq = line.find('=');
    if (eq != std::string::npos) {
        std::string name = line.substr(0, eq);
        // trim
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        bool is_ident = !name.empty() && (std::isalpha((unsigned char)name[0]) || name[0] == '_');
        for (char c : name)
            if (!std::isalnum((unsigned char)c) && c != '_') is_ident = false;
        if (is_ident && name != "x" && name != "p" && name != "y" && name != "q") {
            QElement v = eval_element(parse(line.substr(eq + 1)));
            bind(name, v);
            return name + " = " + print(v, cfg_.output_format, cfg_.numeric_q);
        }
    }
    return render(eval(parse(line)));
}

} // namespace qp::shell

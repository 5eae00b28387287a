#include "qp/shell/printer.hpp"

#include "qp/serialize.hpp"

#include <sstream>

namespace qp::shell {

std::optional<Format> format_from_name(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "latex") return Format::Latex;
    return std::nullopt;
}

const char* format_name(Format f) {
    switch (f) {
    case Format::Text: return "text";
    case Format::Json: return "json";
    case Format::Latex: return "latex";
    }
    return "?";
}

namespace {

/// "3 * q^2", "q", "-2", or a parenthesized sum for multi-term polynomials.
std::string poly_factor(const IntPoly& p) {
    if (p.is_zero()) return "0";
    if (p.coeffs().size() > 1) return "(" + p.to_string() + ")";
    return p.to_string();
}

std::string coeff_text(const QScalar& c) {
    if (c.den() == IntPoly(1)) return poly_factor(c.num());
    return poly_factor(c.num()) + " * (" + c.den().to_string() + ")^-1";
}

std::string var_factor(const char* v, int e) {
    if (e == 0) return "";
    std::string s = std::string(" * ") + v;
    if (e != 1) s += "^" + std::to_string(e);
    return s;
}

std::string rat_text(const mpq_class& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return "(" + r.get_num().get_str() + "/" + r.get_den().get_str() + ")";
}

} // namespace

std::string print_text(const QElement& e, const std::optional<mpq_class>& q0) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        if (!first) os << " + ";
        std::string cs = q0 ? rat_text(c.eval_at(*q0)) : coeff_text(c);
        bool constant = m.i == 0 && m.j == 0;
        if (cs == "1" && !constant) {
            std::string body = var_factor("x", m.i) + var_factor("p", m.j);
            os << body.substr(3); // drop the leading " * "
        } else {
            os << cs << var_factor("x", m.i) << var_factor("p", m.j);
        }
        first = false;
    }
    return os.str();
}

namespace {

std::string latex_poly(const IntPoly& p, bool parenthesize) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : p.coeffs()) {
        mpz_class a = c;
        if (!first)
            os << (a < 0 ? " - " : " + ");
        else if (a < 0)
            os << "-";
        if (a < 0) a = -a;
        if (d == 0 || a != 1) os << a.get_str();
        if (d > 0) {
            os << "q";
            if (d > 1) os << "^{" << d << "}";
        }
        first = false;
    }
    std::string s = os.str();
    if (parenthesize && p.coeffs().size() > 1) return "\\left(" + s + "\\right)";
    return s;
}

std::string latex_coeff(const QScalar& c) {
    if (c.den() == IntPoly(1)) return latex_poly(c.num(), true);
    return "\\frac{" + latex_poly(c.num(), false) + "}{" + latex_poly(c.den(), false) + "}";
}

std::string latex_var(const char* v, int e) {
    if (e == 0) return "";
    std::string s = v;
    if (e != 1) s += "^{" + std::to_string(e) + "}";
    return s;
}

} // namespace

std::string print_latex(const QElement& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        if (!first) os << " + ";
        std::string cs = latex_coeff(c);
        std::string xs = latex_var("x", m.i), ps = latex_var("p", m.j);
        std::string vars = xs + (!xs.empty() && !ps.empty() ? "\\," : "") + ps;
        if (vars.empty())
            os << cs;
        else if (cs == "1")
            os << vars;
        else
            os << cs << "\\," << vars;
        first = false;
    }
    return os.str();
}

std::string print_json(const QElement& e) { return to_json(e).dump(); }

std::string print(const QElement& e, Format f, const std::optional<mpq_class>& q0) {
    switch (f) {
    case Format::Text: return print_text(e, q0);
    case Format::Json: return print_json(e);
    case Format::Latex: return print_latex(e);
    }
    return "";
}

std::string print_classical(const ClassicalPoly& cp, Format f) {
    if (f == Format::Json) return to_json(cp).dump();
    return classical_to_string(cp);
}

} // namespace qp::shell

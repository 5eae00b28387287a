#pragma once

#include "qp/qcurvature.hpp"
#include "qp/shell/ast.hpp"
#include "qp/shell/printer.hpp"

#include <map>
#include <variant>

namespace qp::shell {

struct SessionConfig {
    int mixed_term_exponent = 2;
    Format output_format = Format::Text;
    std::optional<mpq_class> numeric_q;

    CalculusConfig calculus() const { return CalculusConfig{mixed_term_exponent}; }
    /// One-line config echo placed at the top of every output.
    std::string header() const;
};

using EvalResult =
    std::variant<QElement, ClassicalPoly, calculus::ComparisonReport, CurvatureResult>;

/// Evaluates parsed expressions against a table of session variables.
/// Operations that need a Hamiltonian take it as a trailing argument or fall
/// back to the session variable H.
class Session {
public:
    explicit Session(SessionConfig cfg = {}) : cfg_(std::move(cfg)) {}

    SessionConfig& config() { return cfg_; }
    const SessionConfig& config() const { return cfg_; }

    void bind(const std::string& name, QElement value) { vars_[name] = std::move(value); }
    bool has_var(const std::string& name) const { return vars_.count(name) != 0; }

    EvalResult eval(const AstPtr& ast) const;
    /// eval restricted to expressions denoting algebra elements.
    QElement eval_element(const AstPtr& ast) const;

    std::string render(const EvalResult& r) const;

    /// Parses and processes one REPL line: either `name = expr` or an
    /// expression to evaluate. Returns the printable result.
    std::string repl_line(const std::string& line);

private:
    QElement hamiltonian_arg(const Ast& call, size_t expected_args) const;
    Hamiltonian session_h(const Ast& call) const;

    SessionConfig cfg_;
    std::map<std::string, QElement> vars_;
};

} // namespace qp::shell

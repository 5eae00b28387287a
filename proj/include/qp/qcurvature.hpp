#pragma once

#include "qp/qcalculus.hpp"
#include "qp/qmech.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qp {

/// R(x,p)f split into its two parts: the mixed-derivative commutator part
/// (1-q) dx dp f and the connection part (1-q)^-1 grad_xp f. The connection
/// part is partial; when undefined the error text is carried instead and
/// total is omitted.
struct CurvatureResult {
    QElement commutator_part;
    std::optional<QElement> connection_part;
    std::string connection_error;
    std::optional<QElement> total; // commutator_part - connection_part
    CalculusConfig config;

    std::string to_table() const;
};

/// Outcome of a symbolic q -> 1 limit: a value, or a genuine pole.
struct LimitOutcome {
    bool pole = false;
    mpq_class value = 0;

    std::string to_string() const { return pole ? "PoleAtOne" : value.get_str(); }
};

struct FlatnessRow {
    mpq_class q0;
    bool skipped = false; // sample hit a coefficient pole
    std::optional<mpq_class> commutator_norm;
    std::optional<mpq_class> connection_norm;
    std::optional<mpq_class> total_norm;
};

/// Numeric/symbolic evaluation of the curvature parts on a ladder of exact
/// rational sample points increasing toward q = 1.
struct FlatnessReport {
    CurvatureResult curvature;
    std::vector<FlatnessRow> rows;
    LimitOutcome commutator_limit;
    std::optional<LimitOutcome> connection_limit;
    std::optional<LimitOutcome> total_limit;

    std::string to_table() const;
    std::string to_csv() const;
};

namespace curv {

CurvatureResult curvature(const QElement& f, const Hamiltonian& H,
                          const CalculusConfig& cfg = {});

/// Exploratory: grad_x(grad_p f) - grad_p(grad_x f) through the H-dependent
/// covariant derivatives. Reported, never asserted against the commutator part.
QElement direct_commutator(const QElement& f, const Hamiltonian& H);

/// The final printed formula: paper_formula_3_14(f) minus
/// (1-q)^-1 (x (grad_p f)^-1 + (grad_x f)^-1 p)^-1. Every inverse must exist.
QElement paper_final_formula(const QElement& f, const Hamiltonian& H,
                             const CalculusConfig& cfg = {});

std::vector<mpq_class> default_samples();

/// Max absolute value over the element's coefficients at q = q0.
mpq_class coeff_norm_at(const QElement& e, const mpq_class& q0);

FlatnessReport flatness_report(const QElement& f, const Hamiltonian& H,
                               const CalculusConfig& cfg = {},
                               std::vector<mpq_class> samples = default_samples());

} // namespace curv
} // namespace qp

#pragma once

#include "qp/qelement.hpp"

#include <compare>
#include <vector>

namespace qp {

/// Canonical operator monomial x^i p^j dx^k dp^l. The derivative
/// generators are never inverted: k, l >= 0.
struct OpWord {
    int i = 0;
    int j = 0;
    int k = 0;
    int l = 0;

    auto operator<=>(const OpWord&) const = default;
    bool has_derivatives() const { return k > 0 || l > 0; }
};

/// Finite sum of canonical operator words with QScalar coefficients.
using OpElement = std::map<OpWord, QScalar>;

/// The mixed term in the dx x relation is (q^m - 1) p dp; the exponent m
/// is configurable and recorded in every report for reproducibility.
struct CalculusConfig {
    int mixed_term_exponent = 2;
};

/// Generators of the free operator algebra, in canonical order.
enum class Gen { X, P, Dx, Dp };

/// A word in the free algebra over {x, p, dx, dp} with a scalar coefficient.
struct FreeTerm {
    QScalar coeff;
    std::vector<Gen> word;
};

namespace calculus {

/// Rewrites a sum of free words to canonical normal form by exhaustively
/// applying the defining relations:
///   dx x -> 1 + q^2 x dx + (q^m - 1) p dp
///   dx p -> q p dx          dp x -> q^-1 x dp
///   dp p -> 1 + q^2 p dp    p x  -> q x p
///   dp dx -> q dx dp
OpElement rewrite(const std::vector<FreeTerm>& terms, const CalculusConfig& cfg = {});

/// Normal form of the concatenation e1 . e2 (operator composition).
OpElement compose(const OpElement& e1, const OpElement& e2, const CalculusConfig& cfg = {});

/// Canonicalizes an operator element. Words with negative x/p exponents pass
/// through untouched when derivative-free; mixed with derivatives they raise
/// UnsupportedNegativePower.
OpElement rewrite_to_normal_form(const OpElement& e, const CalculusConfig& cfg = {});

/// Acts with an operator on an algebra element: rewrite e.f to normal form
/// and keep the derivative-free part. Requires f in the polynomial sector
/// when e contains derivative generators.
QElement apply_operator(const OpElement& e, const QElement& f, const CalculusConfig& cfg = {});

/// Closed-form derivatives on the full Laurent sector:
///   dp(x^i p^j) = q^{-i} [j] x^i p^{j-1}
///   dx(x^i p^j) = (1 + (q^m - 1) [j]) [i] x^{i-1} p^j    ([n] = q_int(n))
/// For the default m = 2 the dx prefactor collapses to q^{2j}.
QElement d_x(const QElement& f, const CalculusConfig& cfg = {});
QElement d_p(const QElement& f, const CalculusConfig& cfg = {});

/// [dx, dp] f = (1 - q) dx(dp(f)).
QElement mixed_commutator(const QElement& f, const CalculusConfig& cfg = {});

/// The printed closed-form sum for [dx, dp] f:
///   1/((1+q)^2 (1-q)) sum q^{ij+j-1} (1-q^{2j}) (1-q^{2i}) a_ij p^{j-1} x^{i-1}
/// with the trailing p^{j-1} x^{i-1} brought to canonical order.
QElement paper_formula_3_14(const QElement& f);

struct ComparisonRow {
    Monomial monomial;
    QScalar engine;
    QScalar paper;
    QScalar ratio; // engine / paper; zero when paper's coefficient is zero
};

struct ComparisonReport {
    CalculusConfig config;
    bool supports_match = false;
    std::vector<ComparisonRow> rows;

    std::string to_table() const;
};

/// Tabulates, per monomial, the mixed-commutator coefficient against the
/// printed closed form and their ratio. Never asserts the two agree.
ComparisonReport compare_3_14(const QElement& f, const CalculusConfig& cfg = {});

} // namespace calculus
} // namespace qp

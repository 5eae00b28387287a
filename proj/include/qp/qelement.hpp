#pragma once

#include "qp/qscalar.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>

namespace qp {

/// Exponent pair for the canonical normal-ordered monomial x^i p^j.
/// Negative exponents are legal (Laurent sector).
struct Monomial {
    int i = 0;
    int j = 0;

    auto operator<=>(const Monomial&) const = default;
};

/// Commutative Laurent polynomial in t1, t2 with exact rational coefficients;
/// the image of a QElement under the q -> 1 classical limit.
using ClassicalPoly = std::map<std::pair<int, int>, mpq_class>;

/// Finite formal sum sum_{ij} a_ij(q) x^i p^j in canonical normal order.
/// Zero coefficients are never stored; equality is structural.
class QElement {
public:
    using TermMap = std::map<Monomial, QScalar>;

    QElement() = default;

    static QElement zero() { return QElement(); }
    static QElement one() { return term(1, 0, 0); }
    static QElement x(int power = 1) { return term(1, power, 0); }
    static QElement p(int power = 1) { return term(1, 0, power); }
    static QElement term(QScalar c, int i, int j);
    static QElement term(long c, int i, int j) { return term(QScalar(c), i, j); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    QScalar coeff(Monomial m) const;
    /// True when every exponent is nonnegative (polynomial sector).
    bool is_polynomial() const;
    /// The single (monomial, coefficient) pair; requires exactly one term.
    std::pair<Monomial, QScalar> single_term() const;

    QElement operator+(const QElement& o) const;
    QElement operator-(const QElement& o) const;
    QElement operator-() const;
    bool operator==(const QElement& o) const { return terms_ == o.terms_; }

    /// The q-twisted product: p^{j1} x^{i2} = q^{j1 i2} x^{i2} p^{j1} termwise.
    QElement operator*(const QElement& o) const;

    QElement scalar_mul(const QScalar& c) const;

    /// [f, g] = f g - g f.
    static QElement commutator(const QElement& f, const QElement& g);

    /// Two-sided inverse; defined only for single-term elements.
    /// (c x^i p^j)^{-1} = c^{-1} q^{ij} x^{-i} p^{-j}. Throws NonInvertible.
    QElement invert() const;

    /// f(q^k x, q^l p): each term picks up q^{k i + l j}.
    QElement scale_substitute(int k, int l) const;

    /// Coefficient-wise limit at q = 1 into the commutative algebra.
    /// Throws PoleAtOne naming the offending monomial.
    ClassicalPoly classical_limit() const;

    std::string to_string() const;

private:
    void add_term(Monomial m, const QScalar& c);

    TermMap terms_;
};

/// q-power exponent picked up when commuting p^{j1} past x^{i2}.
inline long normal_order_swap_count(long j1, long i2) { return j1 * i2; }

std::string classical_to_string(const ClassicalPoly& cp);

} // namespace qp

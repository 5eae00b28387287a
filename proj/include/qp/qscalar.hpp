#pragma once

#include "qp/error.hpp"
#include "qp/intpoly.hpp"

#include <string>

namespace qp {

/// Element of the coefficient field Q(q): a fully reduced ratio of integer
/// polynomials in q. Canonical form: gcd(num, den) = 1 and the denominator
/// has positive leading coefficient, so equality is structural.
class QScalar {
public:
    QScalar() : num_(), den_(1) {}
    QScalar(const IntPoly& num, const IntPoly& den);
    explicit QScalar(long n) : num_(n), den_(1) {}
    explicit QScalar(const mpq_class& r);

    static QScalar zero() { return QScalar(); }
    static QScalar one() { return QScalar(1); }
    /// The indeterminate q itself.
    static QScalar q() { return QScalar(IntPoly::monomial(1), IntPoly(1)); }
    /// q^k for any integer k; negative k goes to the denominator.
    static QScalar q_power(int k);
    /// The q-integer [n] = (1 - q^{2n}) / (1 - q^2), defined for all n.
    static QScalar q_int(int n);

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == IntPoly(1) && den_ == IntPoly(1); }

    QScalar operator+(const QScalar& o) const;
    QScalar operator-(const QScalar& o) const;
    QScalar operator*(const QScalar& o) const;
    QScalar operator/(const QScalar& o) const;
    QScalar operator-() const;
    bool operator==(const QScalar& o) const { return num_ == o.num_ && den_ == o.den_; }

    QScalar inverse() const;

    /// Exact value at q = q0. Throws PoleAtPoint if the denominator vanishes.
    mpq_class eval_at(const mpq_class& q0) const;
    /// Exact value at q = 1; removable singularities are already cancelled
    /// by reduction, so a vanishing denominator is a genuine pole (PoleAtOne).
    mpq_class limit_at_one() const;

    std::string to_string() const;

private:
    void reduce();

    IntPoly num_;
    IntPoly den_;
};

} // namespace qp

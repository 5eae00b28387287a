#include "qp/qscalar.hpp"

#include <sstream>

namespace qp {

QScalar::QScalar(const IntPoly& num, const IntPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "QScalar: zero denominator");
    reduce();
}

QScalar::QScalar(const mpq_class& r)
    : num_(IntPoly(mpz_class(r.get_num()))), den_(IntPoly(mpz_class(r.get_den()))) {
    reduce();
}

void QScalar::reduce() {
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    IntPoly g = IntPoly::gcd(num_, den_);
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QScalar QScalar::q_power(int k) {
    if (k >= 0) return QScalar(IntPoly::monomial(k), IntPoly(1));
    return QScalar(IntPoly(1), IntPoly::monomial(-k));
}

QScalar QScalar::q_int(int n) {
    // (1 - q^{2n}) / (1 - q^2), valid for negative n as well
    QScalar one_minus_q2n = QScalar::one() - q_power(2 * n);
    QScalar one_minus_q2 = QScalar::one() - q_power(2);
    return one_minus_q2n / one_minus_q2;
}

QScalar QScalar::operator+(const QScalar& o) const {
    return QScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QScalar QScalar::operator-(const QScalar& o) const {
    return QScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QScalar QScalar::operator*(const QScalar& o) const {
    return QScalar(num_ * o.num_, den_ * o.den_);
}

QScalar QScalar::operator/(const QScalar& o) const {
    if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "QScalar: division by zero");
    return QScalar(num_ * o.den_, den_ * o.num_);
}

QScalar QScalar::operator-() const {
    QScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

QScalar QScalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "QScalar: inverse of zero");
    return QScalar(den_, num_);
}

mpq_class QScalar::eval_at(const mpq_class& q0) const {
    mpq_class d = den_.eval(q0);
    if (d == 0)
        throw Error(ErrorKind::PoleAtPoint,
                    "QScalar: pole at q = " + q0.get_str() + " in " + to_string());
    mpq_class r = num_.eval(q0) / d;
    r.canonicalize();
    return r;
}

mpq_class QScalar::limit_at_one() const {
    mpq_class d = den_.eval(1);
    if (d == 0) throw Error(ErrorKind::PoleAtOne, "QScalar: pole at q = 1 in " + to_string());
    mpq_class r = num_.eval(1) / d;
    r.canonicalize();
    return r;
}

std::string QScalar::to_string() const {
    if (den_ == IntPoly(1)) return num_.to_string();
    std::ostringstream os;
    os << "(" << num_.to_string() << ")/(" << den_.to_string() << ")";
    return os.str();
}

} // namespace qp

#include "qp/qelement.hpp"

#include <sstream>

namespace qp {

QElement QElement::term(QScalar c, int i, int j) {
    QElement e;
    if (!c.is_zero()) e.terms_[Monomial{i, j}] = std::move(c);
    return e;
}

QScalar QElement::coeff(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? QScalar::zero() : it->second;
}

bool QElement::is_polynomial() const {
    for (const auto& [m, c] : terms_)
        if (m.i < 0 || m.j < 0) return false;
    return true;
}

std::pair<Monomial, QScalar> QElement::single_term() const {
    if (terms_.size() != 1)
        throw Error(ErrorKind::NonInvertible,
                    "expected a single-term element, got " + std::to_string(terms_.size()) +
                        " terms");
    return *terms_.begin();
}

void QElement::add_term(Monomial m, const QScalar& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_[m] = c;
        return;
    }
    QScalar s = it->second + c;
    if (s.is_zero())
        terms_.erase(it);
    else
        it->second = s;
}

QElement QElement::operator+(const QElement& o) const {
    QElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

QElement QElement::operator-(const QElement& o) const {
    QElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

QElement QElement::operator-() const {
    QElement r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

QElement QElement::operator*(const QElement& o) const {
    QElement r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            // (x^i1 p^j1)(x^i2 p^j2) = q^{j1 i2} x^{i1+i2} p^{j1+j2}
            long swaps = normal_order_swap_count(ma.j, mb.i);
            QScalar c = ca * cb * QScalar::q_power(static_cast<int>(swaps));
            r.add_term(Monomial{ma.i + mb.i, ma.j + mb.j}, c);
        }
    }
    return r;
}

QElement QElement::scalar_mul(const QScalar& c) const {
    QElement r;
    if (c.is_zero()) return r;
    for (const auto& [m, a] : terms_) {
        QScalar v = a * c;
        if (!v.is_zero()) r.terms_[m] = v;
    }
    return r;
}

QElement QElement::commutator(const QElement& f, const QElement& g) {
    return f * g - g * f;
}

QElement QElement::invert() const {
    auto [m, c] = single_term();
    QScalar ci = c.inverse() * QScalar::q_power(m.i * m.j);
    return term(ci, -m.i, -m.j);
}

QElement QElement::scale_substitute(int k, int l) const {
    QElement r;
    for (const auto& [m, c] : terms_)
        r.terms_[m] = c * QScalar::q_power(k * m.i + l * m.j);
    return r;
}

ClassicalPoly QElement::classical_limit() const {
    ClassicalPoly cp;
    for (const auto& [m, c] : terms_) {
        mpq_class v;
        try {
            v = c.limit_at_one();
        } catch (const Error& e) {
            throw Error(ErrorKind::PoleAtOne, "pole at q = 1 in coefficient of x^" +
                                                  std::to_string(m.i) + " p^" +
                                                  std::to_string(m.j));
        }
        if (v != 0) cp[{m.i, m.j}] = v;
    }
    return cp;
}

std::string QElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << c.to_string();
        if (m.i != 0) os << " * x" << (m.i == 1 ? "" : "^" + std::to_string(m.i));
        if (m.j != 0) os << " * p" << (m.j == 1 ? "" : "^" + std::to_string(m.j));
        first = false;
    }
    return os.str();
}

std::string classical_to_string(const ClassicalPoly& cp) {
    if (cp.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : cp) {
        if (!first) os << " + ";
        os << c.get_str();
        if (m.first != 0)
            os << " * t1" << (m.first == 1 ? "" : "^" + std::to_string(m.first));
        if (m.second != 0)
            os << " * t2" << (m.second == 1 ? "" : "^" + std::to_string(m.second));
        first = false;
    }
    return os.str();
}

} // namespace qp

#include "qp/intpoly.hpp"

#include <cassert>
#include <sstream>

namespace qp {

IntPoly::IntPoly(const mpz_class& c) {
    if (c != 0) coeffs_[0] = c;
}

IntPoly::IntPoly(long c) {
    if (c != 0) coeffs_[0] = c;
}

IntPoly IntPoly::from_coeffs(const std::vector<mpz_class>& coeffs) {
    IntPoly p;
    for (size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0) p.coeffs_[static_cast<int>(k)] = coeffs[k];
    return p;
}

IntPoly IntPoly::monomial(int degree, const mpz_class& c) {
    assert(degree >= 0);
    IntPoly p;
    if (c != 0) p.coeffs_[degree] = c;
    return p;
}

mpz_class IntPoly::leading_coeff() const {
    return coeffs_.empty() ? mpz_class(0) : coeffs_.rbegin()->second;
}

mpz_class IntPoly::coeff(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? mpz_class(0) : it->second;
}

void IntPoly::set_coeff(int degree, const mpz_class& c) {
    if (c == 0)
        coeffs_.erase(degree);
    else
        coeffs_[degree] = c;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r = *this;
    for (const auto& [d, c] : o.coeffs_) r.set_coeff(d, r.coeff(d) + c);
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r = *this;
    for (const auto& [d, c] : o.coeffs_) r.set_coeff(d, r.coeff(d) - c);
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r;
    for (const auto& [d, c] : coeffs_) r.coeffs_[d] = -c;
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    IntPoly r;
    for (const auto& [da, ca] : coeffs_)
        for (const auto& [db, cb] : o.coeffs_) r.set_coeff(da + db, r.coeff(da + db) + ca * cb);
    return r;
}

IntPoly IntPoly::mul_scalar(const mpz_class& c) const {
    IntPoly r;
    if (c == 0) return r;
    for (const auto& [d, a] : coeffs_) r.coeffs_[d] = a * c;
    return r;
}

IntPoly IntPoly::div_exact(const IntPoly& d) const {
    assert(!d.is_zero());
    IntPoly rem = *this;
    IntPoly quot;
    const int dd = d.degree();
    const mpz_class dlc = d.leading_coeff();
    while (!rem.is_zero() && rem.degree() >= dd) {
        mpz_class qc;
        mpz_divexact(qc.get_mpz_t(), rem.leading_coeff().get_mpz_t(), dlc.get_mpz_t());
        int qd = rem.degree() - dd;
        quot.set_coeff(qd, qc);
        rem = rem - d * IntPoly::monomial(qd, qc);
    }
    assert(rem.is_zero() && "div_exact: inexact division");
    return quot;
}

IntPoly IntPoly::pseudo_rem(const IntPoly& d) const {
    assert(!d.is_zero());
    IntPoly rem = *this;
    const int dd = d.degree();
    const mpz_class dlc = d.leading_coeff();
    while (!rem.is_zero() && rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        mpz_class rlc = rem.leading_coeff();
        rem = rem.mul_scalar(dlc) - d * IntPoly::monomial(shift, rlc);
    }
    return rem;
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& [d, c] : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    mpz_class c = content();
    if (leading_coeff() < 0) c = -c;
    IntPoly r;
    for (const auto& [d, a] : coeffs_) {
        mpz_class v;
        mpz_divexact(v.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
        r.coeffs_[d] = v;
    }
    return r;
}

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.is_zero() ? IntPoly() : b.primitive_part().mul_scalar(b.content());
    if (b.is_zero()) return a.primitive_part().mul_scalar(a.content());
    mpz_class gc;
    mpz_class ca = a.content(), cb = b.content();
    mpz_gcd(gc.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    // primitive PRS; sizes here are tiny, coefficient growth is acceptable
    IntPoly u = a.primitive_part();
    IntPoly v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = u.pseudo_rem(v);
        u = v;
        v = r.primitive_part();
    }
    return u.mul_scalar(gc);
}

mpq_class IntPoly::eval(const mpq_class& q0) const {
    // Horner over the sparse degree list, highest first
    mpq_class acc = 0;
    int prev_deg = -1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (prev_deg >= 0) {
            for (int k = 0; k < prev_deg - it->first; ++k) acc *= q0;
        }
        acc += mpq_class(it->second);
        prev_deg = it->first;
    }
    if (prev_deg > 0)
        for (int k = 0; k < prev_deg; ++k) acc *= q0;
    acc.canonicalize();
    return acc;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : coeffs_) {
        mpz_class a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (d == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (d != 1) os << "^" << d;
        }
        first = false;
    }
    return os.str();
}

} // namespace qp

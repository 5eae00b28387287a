#include "qp/qmech.hpp"

namespace qp::mech {

namespace {

/// Inverts [base, H], rethrowing NonInvertible as NonInvertibleCommutator
/// with the bracket name and term count attached.
QElement invert_bracket(const QElement& base, const Hamiltonian& H, const char* name) {
    QElement br = QElement::commutator(base, H.h);
    try {
        return br.invert();
    } catch (const Error&) {
        throw Error(ErrorKind::NonInvertibleCommutator,
                    std::string("[") + name + ", H] is not an invertible monomial (" +
                        std::to_string(br.terms().size()) + " terms)");
    }
}

} // namespace

QElement time_derivative(const QElement& f, const Hamiltonian& H) {
    return QElement::commutator(f, H.h);
}

QElement cov_x(const QElement& f, const Hamiltonian& H) {
    return QElement::commutator(f, H.h) * invert_bracket(QElement::x(), H, "x");
}

QElement cov_p(const QElement& f, const Hamiltonian& H) {
    return QElement::commutator(f, H.h) * invert_bracket(QElement::p(), H, "p");
}

QElement cov_xp(const QElement& f, const Hamiltonian& H) {
    return QElement::commutator(f, H.h) * invert_bracket(QElement::x() * QElement::p(), H, "xp");
}

QElement cov_x_left(const QElement& f, const Hamiltonian& H) {
    return invert_bracket(QElement::x(), H, "x") * QElement::commutator(f, H.h);
}

QElement cov_bracket(const QElement& f, const Hamiltonian& H) {
    QScalar inv_one_minus_q = (QScalar::one() - QScalar::q()).inverse();
    return cov_xp(f, H).scalar_mul(inv_one_minus_q);
}

QElement scaled_base_cov(const QElement& f, const QScalar& lambda, const Hamiltonian& H) {
    if (lambda.is_zero()) throw Error(ErrorKind::DivisionByZero, "scaled_base_cov: lambda = 0");
    QElement base = QElement::x().scalar_mul(lambda);
    QElement br = QElement::commutator(base, H.h);
    QElement inv;
    try {
        inv = br.invert();
    } catch (const Error&) {
        throw Error(ErrorKind::NonInvertibleCommutator,
                    "[lambda x, H] is not an invertible monomial (" +
                        std::to_string(br.terms().size()) + " terms)");
    }
    return QElement::commutator(f, H.h) * inv;
}

} // namespace qp::mech

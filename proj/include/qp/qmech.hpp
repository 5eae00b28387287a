#pragma once

#include "qp/qelement.hpp"

namespace qp {

/// Fixed algebra element generating time evolution via df/dt = [f, H].
struct Hamiltonian {
    QElement h;
};

namespace mech {

/// df/dt = [f, H].
QElement time_derivative(const QElement& f, const Hamiltonian& H);

/// Covariant derivatives [f,H] . [x,H]^-1 etc. Partial: the bracket in the
/// denominator must be an invertible monomial, otherwise
/// NonInvertibleCommutator is thrown naming the failing bracket.
QElement cov_x(const QElement& f, const Hamiltonian& H);
QElement cov_p(const QElement& f, const Hamiltonian& H);
QElement cov_xp(const QElement& f, const Hamiltonian& H);

/// Exploration-only variant with the inverse on the left; excluded from all
/// identities.
QElement cov_x_left(const QElement& f, const Hamiltonian& H);

/// Covariant derivative along [x,p]: (1-q)^-1 cov_xp(f, H).
QElement cov_bracket(const QElement& f, const Hamiltonian& H);

/// Covariant derivative along lambda x; equals (1/lambda) cov_x(f, H).
QElement scaled_base_cov(const QElement& f, const QScalar& lambda, const Hamiltonian& H);

} // namespace mech
} // namespace qp

#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace qp {

/// Univariate polynomial in q with arbitrary-precision integer coefficients.
/// Sparse: only nonzero coefficients are stored, keyed by nonnegative degree.
class IntPoly {
public:
    using CoeffMap = std::map<int, mpz_class>;

    IntPoly() = default;
    explicit IntPoly(const mpz_class& c);
    explicit IntPoly(long c);

    /// Little-endian dense coefficient list: coeffs[k] is the q^k coefficient.
    static IntPoly from_coeffs(const std::vector<mpz_class>& coeffs);
    /// q^k for k >= 0.
    static IntPoly monomial(int degree, const mpz_class& c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    mpz_class leading_coeff() const;
    mpz_class coeff(int degree) const;
    const CoeffMap& coeffs() const { return coeffs_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

    IntPoly mul_scalar(const mpz_class& c) const;
    /// Exact division; aborts if the divisor does not divide evenly.
    IntPoly div_exact(const IntPoly& d) const;

    /// GCD of all coefficients, nonnegative; 0 for the zero polynomial.
    mpz_class content() const;
    IntPoly primitive_part() const;

    /// Full gcd in Z[q] (including integer content), leading coefficient > 0.
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);

    mpq_class eval(const mpq_class& q0) const;

    std::string to_string(const std::string& var = "q") const;

private:
    void set_coeff(int degree, const mpz_class& c);
    /// Pseudo-remainder of *this by d: prem(a, d) with lc(d)^(deg a - deg d + 1) scaling.
    IntPoly pseudo_rem(const IntPoly& d) const;

    CoeffMap coeffs_;
};

} // namespace qp

#pragma once

// Dense univariate polynomials in z with arbitrary-precision integer
// coefficients. Storage is ascending (coeffs()[i] is the coefficient of z^i)
// with trailing zeros stripped, so the zero polynomial has no coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace mobius {

class IntPolynomial {
public:
    using Coefficient = mpz_class;

    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long> coeffs);
    explicit IntPolynomial(std::vector<Coefficient> coeffs);

    static IntPolynomial constant(const Coefficient& c);
    // c * z^exponent
    static IntPolynomial monomial(const Coefficient& c, std::size_t exponent);

    std::span<const Coefficient> coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    Coefficient coefficient(std::size_t i) const;
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    Coefficient evaluate(const Coefficient& z) const;

    // p(z^n); n must be at least 1.
    IntPolynomial substitute_power(std::size_t n) const;

    // Canonical text, e.g. "1 - 4*z + 4*z^2 - z^3"; zero prints as "0".
    std::string to_string() const;

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);

    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
    friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
    friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
    friend IntPolynomial operator-(IntPolynomial p);

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void normalize();
    std::vector<Coefficient> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

inline IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) { return a + b; }
inline IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b) { return a - b; }
inline IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }
inline IntPolynomial poly_substitute_power(const IntPolynomial& p, std::size_t n) { return p.substitute_power(n); }

IntPolynomial pow(const IntPolynomial& base, unsigned exponent);

}  // namespace mobius

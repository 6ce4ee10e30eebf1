#pragma once

// The polynomial incidence algebra of a finite generalized ranked poset.
//
// An element phi assigns to every pair p <= q a value a(p,q) * z^(|q|-|p|)
// and 0 to incomparable pairs. Under a linear extension p_1..p_n, phi is the
// upper-triangular matrix M(phi) with entries phi(p_i, p_j), and convolution
// becomes matrix multiplication.

#include "mobius/poly_matrix.hpp"
#include "mobius/polynomial.hpp"
#include "mobius/poset.hpp"

#include <stdexcept>
#include <vector>

namespace mobius {

class IncidenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Element of the polynomial incidence algebra, stored by its integer
// coefficients a(p,q) over element indices. The monomial degree of each
// value is fixed by the ranks, so only the coefficient is kept.
class IncidenceElement {
public:
    explicit IncidenceElement(const RankedPoset& rp);

    static IncidenceElement delta(const RankedPoset& rp);
    static IncidenceElement zeta(const RankedPoset& rp);

    const RankedPoset& poset() const noexcept { return *rp_; }

    const mpz_class& coefficient(std::size_t p, std::size_t q) const { return coeff_.at(p * n_ + q); }
    // Throws IncidenceError when p is not <= q and c != 0.
    void set(std::size_t p, std::size_t q, const mpz_class& c);

    // phi(p, q) as a polynomial.
    IntPolynomial value(std::size_t p, std::size_t q) const;

    // (phi . psi)(p,q) = sum_{p <= r <= q} phi(p,r) psi(r,q)
    IncidenceElement convolve(const IncidenceElement& other) const;

    // M(phi) in the poset's linear-extension basis.
    PolyMatrix to_matrix() const;

    // Inverse of to_matrix(); checks the support and single-monomial shape.
    static IncidenceElement from_matrix(const RankedPoset& rp, const PolyMatrix& m);

    bool operator==(const IncidenceElement& other) const { return n_ == other.n_ && coeff_ == other.coeff_; }

private:
    const RankedPoset* rp_;
    std::size_t n_;
    std::vector<mpz_class> coeff_;
};

// Checks that `m` is supported on p_i <= p_j with each entry a single
// monomial of degree rank(p_j) - rank(p_i).
bool is_incidence_matrix(const RankedPoset& rp, const PolyMatrix& m);

// M(zeta_z): entry (i,j) is z^(rank(p_j)-rank(p_i)) when p_i <= p_j.
// Throws IncidenceError when the ranks are not strictly monotone.
PolyMatrix zeta_matrix(const RankedPoset& rp);

// M(mu_z) = M(zeta_z)^{-1}.
PolyMatrix mobius_matrix(const RankedPoset& rp);

// Sum over p <= q of mu(p,q) z^(rank(q)-rank(p)), as 1^T M(mu_z) 1.
IntPolynomial mobius_polynomial(const RankedPoset& rp);

}  // namespace mobius

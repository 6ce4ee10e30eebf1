#include "mobius/incidence.hpp"

namespace mobius {

namespace {

void require_monotone(const RankedPoset& rp)
{
    const Poset& P = rp.poset;
    if (rp.ranks.ranks.size() != P.size())
        throw IncidenceError("rank assignment does not cover every element");
    for (std::size_t p = 0; p < P.size(); ++p)
        for (std::size_t q = 0; q < P.size(); ++q)
            if (P.less(p, q) && rp.ranks[q] <= rp.ranks[p])
                throw IncidenceError("ranks not strictly increasing on " + P.label(p) + " < " + P.label(q));
}

std::vector<std::string> basis_labels(const Poset& P)
{
    std::vector<std::string> out;
    out.reserve(P.size());
    for (std::size_t v : P.linext())
        out.push_back(P.label(v));
    return out;
}

}  // namespace

IncidenceElement::IncidenceElement(const RankedPoset& rp) : rp_(&rp), n_(rp.size()), coeff_(n_ * n_)
{
    require_monotone(rp);
}

IncidenceElement IncidenceElement::delta(const RankedPoset& rp)
{
    IncidenceElement e(rp);
    for (std::size_t p = 0; p < e.n_; ++p)
        e.coeff_[p * e.n_ + p] = 1;
    return e;
}

IncidenceElement IncidenceElement::zeta(const RankedPoset& rp)
{
    IncidenceElement e(rp);
    for (std::size_t p = 0; p < e.n_; ++p)
        for (std::size_t q = 0; q < e.n_; ++q)
            if (rp.poset.leq(p, q))
                e.coeff_[p * e.n_ + q] = 1;
    return e;
}

void IncidenceElement::set(std::size_t p, std::size_t q, const mpz_class& c)
{
    if (c != 0 && !rp_->poset.leq(p, q))
        throw IncidenceError("incidence element must vanish on " + rp_->poset.label(p) + " !<= " +
                             rp_->poset.label(q));
    coeff_.at(p * n_ + q) = c;
}

IntPolynomial IncidenceElement::value(std::size_t p, std::size_t q) const
{
    const mpz_class& c = coefficient(p, q);
    if (c == 0)
        return {};
    return IntPolynomial::monomial(c, rp_->gap(p, q));
}

IncidenceElement IncidenceElement::convolve(const IncidenceElement& other) const
{
    if (rp_ != other.rp_ && !(*rp_ == *other.rp_))
        throw IncidenceError("convolution of elements over different posets");
    const Poset& P = rp_->poset;
    IncidenceElement out(*rp_);
    for (std::size_t p = 0; p < n_; ++p)
        for (std::size_t q = 0; q < n_; ++q) {
            if (!P.leq(p, q))
                continue;
            mpz_class acc = 0;
            for (std::size_t r = 0; r < n_; ++r)
                if (P.leq(p, r) && P.leq(r, q))
                    acc += coefficient(p, r) * other.coefficient(r, q);
            out.coeff_[p * n_ + q] = acc;
        }
    return out;
}

PolyMatrix IncidenceElement::to_matrix() const
{
    const Poset& P = rp_->poset;
    const auto& order = P.linext();
    PolyMatrix m(n_, basis_labels(P));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j)
            m(i, j) = value(order[i], order[j]);
    return m;
}

IncidenceElement IncidenceElement::from_matrix(const RankedPoset& rp, const PolyMatrix& m)
{
    if (!is_incidence_matrix(rp, m))
        throw IncidenceError("matrix is not in the polynomial incidence algebra of this poset");
    IncidenceElement e(rp);
    const auto& order = rp.poset.linext();
    for (std::size_t i = 0; i < e.n_; ++i)
        for (std::size_t j = 0; j < e.n_; ++j) {
            const IntPolynomial& v = m(i, j);
            if (!v.is_zero())
                e.coeff_[order[i] * e.n_ + order[j]] = v.coeffs().back();
        }
    return e;
}

bool is_incidence_matrix(const RankedPoset& rp, const PolyMatrix& m)
{
    const Poset& P = rp.poset;
    if (m.dim() != P.size())
        return false;
    const auto& order = P.linext();
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) {
            const IntPolynomial& v = m(i, j);
            if (v.is_zero())
                continue;
            std::size_t p = order[i], q = order[j];
            if (!P.leq(p, q))
                return false;
            if (rp.ranks[q] < rp.ranks[p])
                return false;
            const auto gap = static_cast<long>(rp.gap(p, q));
            if (v.degree() != gap)
                return false;
            for (long d = 0; d < gap; ++d)
                if (v.coeffs()[static_cast<std::size_t>(d)] != 0)
                    return false;
        }
    return true;
}

PolyMatrix zeta_matrix(const RankedPoset& rp)
{
    return IncidenceElement::zeta(rp).to_matrix();
}

PolyMatrix mobius_matrix(const RankedPoset& rp)
{
    return invert_unitriangular(zeta_matrix(rp));
}

IntPolynomial mobius_polynomial(const RankedPoset& rp)
{
    return mobius_matrix(rp).entry_sum();
}

}  // namespace mobius

#include "mobius/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mobius {

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    normalize();
}

IntPolynomial::IntPolynomial(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs))
{
    normalize();
}

IntPolynomial IntPolynomial::constant(const Coefficient& c)
{
    return IntPolynomial(std::vector<Coefficient>{c});
}

IntPolynomial IntPolynomial::monomial(const Coefficient& c, std::size_t exponent)
{
    if (c == 0)
        return {};
    std::vector<Coefficient> v(exponent + 1);
    v[exponent] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntPolynomial::Coefficient IntPolynomial::coefficient(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Coefficient(0);
}

IntPolynomial::Coefficient IntPolynomial::evaluate(const Coefficient& z) const
{
    Coefficient acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

IntPolynomial IntPolynomial::substitute_power(std::size_t n) const
{
    if (n == 0)
        throw std::invalid_argument("substitute_power: exponent must be at least 1");
    if (is_zero() || n == 1)
        return *this;
    std::vector<Coefficient> v((coeffs_.size() - 1) * n + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v[i * n] = coeffs_[i];
    return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Coefficient& c = coeffs_[i];
        if (c == 0)
            continue;
        Coefficient mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != 1)
            os << mag << '*';
        os << 'z';
        if (i > 1)
            os << '^' << i;
    }
    return os.str();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs)
{
    *this = *this * rhs;
    return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs)
{
    if (lhs.is_zero() || rhs.is_zero())
        return {};
    std::vector<IntPolynomial::Coefficient> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(IntPolynomial p)
{
    for (auto& c : p.coeffs_)
        c = -c;
    return p;
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p)
{
    return os << p.to_string();
}

IntPolynomial pow(const IntPolynomial& base, unsigned exponent)
{
    IntPolynomial result{1};
    IntPolynomial b = base;
    while (exponent) {
        if (exponent & 1u)
            result *= b;
        exponent >>= 1;
        if (exponent)
            b *= b;
    }
    return result;
}

}  // namespace mobius

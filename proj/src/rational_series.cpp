#include "mobius/rational_series.hpp"

#include <sstream>

namespace mobius {

std::string RationalSeries::to_string() const
{
    return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

std::vector<mpz_class> series_expand(const RationalSeries& s, std::size_t k)
{
    mpz_class d0 = s.den.coefficient(0);
    if (d0 == 0)
        throw SeriesError("series undefined at 0");
    if (d0 != 1 && d0 != -1)
        throw SeriesError("denominator constant term must be 1 or -1, got " + d0.get_str());
    const IntPolynomial num = d0 == 1 ? s.num : -s.num;
    const IntPolynomial den = d0 == 1 ? s.den : -s.den;

    std::vector<mpz_class> c(k + 1);
    const auto dc = den.coeffs();
    for (std::size_t m = 0; m <= k; ++m) {
        mpz_class acc = num.coefficient(m);
        for (std::size_t j = 1; j < dc.size() && j <= m; ++j)
            acc -= dc[j] * c[m - j];
        c[m] = acc;
    }
    return c;
}

std::string format_coefficients(const std::vector<mpz_class>& coeffs)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i)
            os << ", ";
        os << coeffs[i];
    }
    return os.str();
}

}  // namespace mobius

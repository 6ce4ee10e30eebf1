#pragma once

#include "mobius/polynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mobius {

class SeriesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// num/den as a formal power series. Kept unsimplified.
struct RationalSeries {
    IntPolynomial num;
    IntPolynomial den;

    // "(<num>)/(<den>)" in canonical polynomial form.
    std::string to_string() const;
    bool operator==(const RationalSeries&) const = default;
};

// Coefficients c_0..c_k of num/den, from
//   c_m = num_m - sum_{j>=1} den_j c_{m-j}
// after normalizing den(0) to 1. Throws SeriesError when den(0) is 0
// ("series undefined at 0") or not a unit.
std::vector<mpz_class> series_expand(const RationalSeries& s, std::size_t k);

// "c0, c1, ..., ck"
std::string format_coefficients(const std::vector<mpz_class>& coeffs);

}  // namespace mobius

#include "mobius/rational_series.hpp"
#include "support/corpus.hpp"

#include <doctest.h>

#include <random>

using namespace mobius;
using testing::mpz_list;

TEST_CASE("series_expand examples")
{
    // (1-z)/(1-z(2-z)) = (1-z)/(1-z)^2 = 1/(1-z)
    RationalSeries ones{{1, -1}, IntPolynomial{1} - IntPolynomial{0, 1} * IntPolynomial{2, -1}};
    CHECK(series_expand(ones, 5) == mpz_list({1, 1, 1, 1, 1, 1}));
    CHECK(series_expand(ones, 5) == testing::series_oracle(ones.num, ones.den, 5));

    RationalSeries poly{{1, -1}, {1}};
    CHECK(series_expand(poly, 3) == mpz_list({1, -1, 0, 0}));

    // Hilbert series of the 4-element square.
    RationalSeries square{{1, -1}, {1, -4, 4, -1}};
    CHECK(series_expand(square, 4) == mpz_list({1, 3, 8, 21, 55}));
    CHECK(testing::series_oracle(square.num, square.den, 4) == mpz_list({1, 3, 8, 21, 55}));

    CHECK(series_expand(square, 0) == mpz_list({1}));
}

TEST_CASE("series_expand normalizes a -1 constant term")
{
    RationalSeries s{{-1, 1}, {-1, 4, -4, 1}};
    CHECK(series_expand(s, 4) == mpz_list({1, 3, 8, 21, 55}));
}

TEST_CASE("series_expand errors")
{
    CHECK_THROWS_WITH_AS(series_expand({{1}, {0, 1}}, 3), "series undefined at 0", SeriesError);
    CHECK_THROWS_AS(series_expand({{1}, {2, 1}}, 3), SeriesError);
    CHECK_THROWS_AS(series_expand({{1}, {}}, 3), SeriesError);
}

TEST_CASE("expansion times denominator reproduces the numerator")
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> coef(-5, 5), len(1, 6);
    for (int t = 0; t < 200; ++t) {
        std::vector<mpz_class> n(static_cast<std::size_t>(len(rng))), d(static_cast<std::size_t>(len(rng)));
        for (auto& c : n)
            c = coef(rng);
        for (auto& c : d)
            c = coef(rng);
        d[0] = (t % 2) ? 1 : -1;
        RationalSeries s{IntPolynomial(n), IntPolynomial(d)};
        const std::size_t k = 12;
        auto c = series_expand(s, k);
        IntPolynomial back = IntPolynomial(c) * s.den;
        for (std::size_t i = 0; i <= k; ++i)
            CHECK(back.coefficient(i) == s.num.coefficient(i));
        if (d[0] == 1)
            CHECK(c == testing::series_oracle(s.num, s.den, k));
    }
}

TEST_CASE("format_coefficients")
{
    CHECK(format_coefficients(mpz_list({1, 3, 8})) == "1, 3, 8");
    CHECK(format_coefficients(mpz_list({-2})) == "-2");
    CHECK(format_coefficients({}).empty());
    CHECK(RationalSeries{{1, -1}, {1, -2, 0, 1}}.to_string() == "(1 - z)/(1 - 2*z + z^3)");
}

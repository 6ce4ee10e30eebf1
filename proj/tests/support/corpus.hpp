#pragma once

// Test-only helpers: random generalized ranked posets and oracles that do
// not share code paths with the matrix pipeline.

#include "mobius/poset.hpp"
#include "mobius/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace mobius::testing {

// Random DAG on `n` elements whose index order is scrambled, so the linear
// extension is generally not the identity. Ranks are longest-chain ranks
// plus random jumps of up to `max_jump` along every cover (jump 0 gives a
// ranked poset when the poset is graded).
inline RankedPoset random_ranked_poset(std::mt19937_64& rng, std::size_t n, double edge_prob, unsigned max_jump)
{
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    std::bernoulli_distribution edge(edge_prob);
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (edge(rng))
                rel.emplace_back(order[i], order[j]);

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back("e" + std::to_string(i));
    RankedPoset rp{closure_from_index_relations(std::move(labels), rel), {}};

    std::uniform_int_distribution<unsigned> jump(0, max_jump);
    std::vector<Rank> ranks(n, 0);
    for (std::size_t v : rp.poset.linext())
        for (std::size_t w : rp.poset.upper_covers(v))
            ranks[w] = std::max<Rank>(ranks[w], ranks[v] + 1 + jump(rng));
    rp.ranks = classify_ranks(rp.poset, std::move(ranks));
    return rp;
}

inline RankedPoset random_ranked_poset(std::mt19937_64& rng, std::size_t max_n)
{
    std::uniform_int_distribution<std::size_t> size(1, max_n);
    std::uniform_real_distribution<double> prob(0.1, 0.7);
    std::uniform_int_distribution<unsigned> jumps(0, 2);
    return random_ranked_poset(rng, size(rng), prob(rng), jumps(rng));
}

// Sum over p <= q of mu(p,q) z^gap with mu from the interval recursion.
inline IntPolynomial mobius_polynomial_oracle(const RankedPoset& rp)
{
    const Poset& P = rp.poset;
    std::vector<mpz_class> c;
    for (std::size_t p = 0; p < P.size(); ++p)
        for (std::size_t q = 0; q < P.size(); ++q)
            if (P.leq(p, q)) {
                std::size_t d = rp.gap(p, q);
                if (c.size() <= d)
                    c.resize(d + 1);
                c[d] += static_cast<long>(mobius_recursive(P, p, q));
            }
    return IntPolynomial(std::move(c));
}

// Plain O(n^2) convolution on machine integers.
inline std::vector<long long> convolve_oracle(const std::vector<long long>& a, const std::vector<long long>& b)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<long long> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

// First k+1 coefficients of num/den by the geometric series
// 1/den = sum_j (1 - den)^j, valid when den(0) = 1 since (1 - den) has no
// constant term and only j <= k contribute below z^(k+1).
inline std::vector<mpz_class> series_oracle(const IntPolynomial& num, const IntPolynomial& den, std::size_t k)
{
    auto truncate = [k](const IntPolynomial& p) {
        std::vector<mpz_class> c(p.coeffs().begin(), p.coeffs().end());
        if (c.size() > k + 1)
            c.resize(k + 1);
        return IntPolynomial(std::move(c));
    };
    IntPolynomial t = IntPolynomial{1} - den;
    IntPolynomial inv{1};
    IntPolynomial power{1};
    for (std::size_t j = 1; j <= k; ++j) {
        power = truncate(power * t);
        inv += power;
    }
    IntPolynomial prod = truncate(num * inv);
    std::vector<mpz_class> out(k + 1);
    for (std::size_t i = 0; i <= k; ++i)
        out[i] = prod.coefficient(i);
    return out;
}

// Power-series long division: peel off c_m z^m den from the running
// remainder. Requires den(0) = 1.
inline std::vector<mpz_class> long_division_oracle(const IntPolynomial& num, const IntPolynomial& den, std::size_t k)
{
    std::vector<mpz_class> rem(k + 1);
    for (std::size_t i = 0; i <= k; ++i)
        rem[i] = num.coefficient(i);
    std::vector<mpz_class> out(k + 1);
    for (std::size_t m = 0; m <= k; ++m) {
        out[m] = rem[m];
        for (std::size_t j = 0; m + j <= k; ++j)
            rem[m + j] -= out[m] * den.coefficient(j);
    }
    return out;
}

// Isomorphism by trying every permutation; tiny posets only.
inline bool brute_force_isomorphic(const RankedPoset& a, const RankedPoset& b)
{
    const std::size_t n = a.size();
    if (n != b.size())
        return false;
    std::vector<std::size_t> f(n);
    std::iota(f.begin(), f.end(), 0);
    do {
        bool ok = true;
        for (std::size_t p = 0; p < n && ok; ++p) {
            ok = a.ranks[p] == b.ranks[f[p]];
            for (std::size_t q = 0; q < n && ok; ++q)
                ok = a.poset.leq(p, q) == b.poset.leq(f[p], f[q]);
        }
        if (ok)
            return true;
    } while (std::next_permutation(f.begin(), f.end()));
    return false;
}

inline std::vector<mpz_class> mpz_list(std::initializer_list<long> v)
{
    return std::vector<mpz_class>(v.begin(), v.end());
}

}  // namespace mobius::testing

#pragma once

// Poset families and composite structures: chains, subset lattices, divisor
// posets, direct products, rank rescaling, and automorphisms of products
// that permute isomorphic factors.

#include "mobius/polynomial.hpp"
#include "mobius/poset.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mobius {

class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr unsigned max_boolean_rank = 16;
inline constexpr std::uint64_t max_divisor_argument = 1'000'000'000;

// Total order on s+1 elements "0" < "1" < ... < "s", ranked 0..s.
RankedPoset chain(std::size_t s);

// Subsets of {1..n} ordered by inclusion, ranked by size. Elements appear in
// binary-counter order; labels look like "{}", "{1,3}".
RankedPoset boolean(unsigned n);

// Prime factorization by trial division, ascending primes.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// Divisors of n by divisibility, ranked by the number of prime factors with
// multiplicity; labels are decimal values in increasing order.
RankedPoset divisor_poset(std::uint64_t n);

// The automorphism of divisor_poset(n) induced by permuting primes of equal
// multiplicity. `prime_map` sends primes to primes; primes not mentioned are
// fixed.
PosetAutomorphism divisor_prime_automorphism(std::uint64_t n, const std::map<std::uint64_t, std::uint64_t>& prime_map);

// Componentwise order, ranks add. Element (i, j) sits at index
// i * q.size() + j where i, j are linear-extension positions in p and q, so
// the product's linear extension is the left-major lexicographic one.
RankedPoset direct_product(const RankedPoset& p, const RankedPoset& q);

// Left fold of direct_product over a nonempty list.
RankedPoset direct_product(std::span<const RankedPoset> factors);

// Same order, every rank multiplied by n.
RankedPoset rescale(const RankedPoset& p, std::size_t n);

// Automorphism of a product of factors that carries factor k onto factor
// perm[k]. Components are transported through isomorphisms found by
// find_isomorphism, chosen so that going once around any cycle of perm is
// the identity on the cycle's representative factor.
class FactorShuffle {
public:
    struct Cycle {
        std::vector<std::size_t> members;  // k, perm[k], perm[perm[k]], ...
        std::size_t length() const noexcept { return members.size(); }
        std::size_t representative() const noexcept { return members.front(); }
    };

    // Throws ConstructionError if perm is not a permutation or a factor is
    // not isomorphic to its image.
    FactorShuffle(std::vector<RankedPoset> factors, std::vector<std::size_t> perm);

    const std::vector<RankedPoset>& factors() const noexcept { return factors_; }
    const std::vector<std::size_t>& perm() const noexcept { return perm_; }
    const std::vector<Cycle>& cycles() const noexcept { return cycles_; }

    // Isomorphism factor k -> factor perm[k] (indices of k -> indices of perm[k]).
    const std::vector<std::size_t>& transport(std::size_t k) const { return transport_.at(k); }

private:
    std::vector<RankedPoset> factors_;
    std::vector<std::size_t> perm_;
    std::vector<Cycle> cycles_;
    std::vector<std::vector<std::size_t>> transport_;
};

// The induced automorphism of direct_product(fs.factors()).
PosetAutomorphism shuffle_automorphism(const FactorShuffle& fs);

// Product over cycles of M_{Q_j}(z^{i_j}).
IntPolynomial shuffle_fixed_mobius(const FactorShuffle& fs);

}  // namespace mobius

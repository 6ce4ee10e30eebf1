#include "mobius/constructions.hpp"

#include "mobius/incidence.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace mobius {

RankedPoset chain(std::size_t s)
{
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    std::vector<Rank> ranks;
    for (std::size_t i = 0; i <= s; ++i) {
        labels.push_back(std::to_string(i));
        ranks.push_back(i);
        if (i)
            rel.emplace_back(i - 1, i);
    }
    RankedPoset out{closure_from_index_relations(std::move(labels), rel), {}};
    out.ranks = classify_ranks(out.poset, std::move(ranks));
    return out;
}

RankedPoset boolean(unsigned n)
{
    if (n > max_boolean_rank)
        throw ConstructionError("boolean lattice rank " + std::to_string(n) + " exceeds the limit of " +
                                std::to_string(max_boolean_rank));
    const std::size_t size = std::size_t{1} << n;
    std::vector<std::string> labels(size);
    std::vector<Rank> ranks(size);
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    rel.reserve(size * n / 2);
    for (std::size_t mask = 0; mask < size; ++mask) {
        std::string label = "{";
        for (unsigned b = 0; b < n; ++b)
            if (mask >> b & 1u) {
                if (label.size() > 1)
                    label += ',';
                label += std::to_string(b + 1);
            } else {
                rel.emplace_back(mask, mask | (std::size_t{1} << b));
            }
        labels[mask] = label + "}";
        ranks[mask] = static_cast<Rank>(std::popcount(mask));
    }
    RankedPoset out{closure_from_index_relations(std::move(labels), rel), {}};
    out.ranks = classify_ranks(out.poset, std::move(ranks));
    return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e)
            out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

namespace {

unsigned big_omega(std::uint64_t m)
{
    unsigned count = 0;
    for (auto [p, e] : factorize(m))
        count += e;
    return count;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n)
{
    std::vector<std::uint64_t> out{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

RankedPoset divisor_poset(std::uint64_t n)
{
    if (n < 1)
        throw ConstructionError("divisor poset needs n >= 1");
    if (n > max_divisor_argument)
        throw ConstructionError("divisor poset argument " + std::to_string(n) + " exceeds the limit of " +
                                std::to_string(max_divisor_argument));
    const auto divisors = divisors_of(n);
    const auto primes = factorize(n);
    std::vector<std::string> labels;
    std::vector<Rank> ranks;
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        labels.push_back(std::to_string(divisors[i]));
        ranks.push_back(big_omega(divisors[i]));
        for (auto [p, e] : primes) {
            std::uint64_t up = divisors[i] * p;
            if (n % up == 0) {
                auto j = static_cast<std::size_t>(std::lower_bound(divisors.begin(), divisors.end(), up) -
                                                  divisors.begin());
                rel.emplace_back(i, j);
            }
        }
    }
    RankedPoset out{closure_from_index_relations(std::move(labels), rel), {}};
    out.ranks = classify_ranks(out.poset, std::move(ranks));
    return out;
}

PosetAutomorphism divisor_prime_automorphism(std::uint64_t n, const std::map<std::uint64_t, std::uint64_t>& prime_map)
{
    auto base = std::make_shared<const RankedPoset>(divisor_poset(n));
    const auto primes = factorize(n);
    std::map<std::uint64_t, unsigned> mult(primes.begin(), primes.end());

    std::map<std::uint64_t, std::uint64_t> full;
    for (auto [p, e] : primes)
        full[p] = p;
    for (auto [from, to] : prime_map) {
        if (!mult.count(from))
            throw ConstructionError(std::to_string(from) + " is not a prime factor of " + std::to_string(n));
        if (!mult.count(to))
            throw ConstructionError(std::to_string(to) + " is not a prime factor of " + std::to_string(n));
        if (mult[from] != mult[to])
            throw ConstructionError("primes " + std::to_string(from) + " and " + std::to_string(to) +
                                    " have different multiplicities");
        full[from] = to;
    }
    std::map<std::uint64_t, std::uint64_t> targets;
    for (auto [from, to] : full)
        if (!targets.emplace(to, from).second)
            throw ConstructionError("prime map is not a permutation: " + std::to_string(to) + " is hit twice");

    const Poset& P = base->poset;
    std::vector<std::size_t> image(P.size());
    for (std::size_t i = 0; i < P.size(); ++i) {
        std::uint64_t m = std::stoull(P.label(i));
        std::uint64_t mapped = 1;
        for (auto [p, e] : factorize(m))
            for (unsigned k = 0; k < e; ++k)
                mapped *= full[p];
        image[i] = P.index_of(std::to_string(mapped));
    }
    return PosetAutomorphism(std::move(base), std::move(image));
}

RankedPoset direct_product(const RankedPoset& p, const RankedPoset& q)
{
    const Poset& P = p.poset;
    const Poset& Q = q.poset;
    const std::size_t np = P.size(), nq = Q.size();
    std::vector<std::string> labels;
    std::vector<Rank> ranks;
    labels.reserve(np * nq);
    ranks.reserve(np * nq);
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = 0; j < nq; ++j) {
            std::size_t a = P.linext()[i], b = Q.linext()[j];
            labels.push_back("(" + P.label(a) + "," + Q.label(b) + ")");
            ranks.push_back(p.ranks[a] + q.ranks[b]);
        }
    auto at = [&](std::size_t a, std::size_t b) { return P.position(a) * nq + Q.position(b); };
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (auto [lo, hi] : P.covers())
        for (std::size_t b = 0; b < nq; ++b)
            rel.emplace_back(at(lo, b), at(hi, b));
    for (auto [lo, hi] : Q.covers())
        for (std::size_t a = 0; a < np; ++a)
            rel.emplace_back(at(a, lo), at(a, hi));

    RankedPoset out{closure_from_index_relations(std::move(labels), rel), {}};
    out.ranks = classify_ranks(out.poset, std::move(ranks));
    if (p.ranks.kind == RankKind::generalized || q.ranks.kind == RankKind::generalized)
        out.ranks.kind = RankKind::generalized;
    return out;
}

RankedPoset direct_product(std::span<const RankedPoset> factors)
{
    if (factors.empty())
        throw ConstructionError("direct product of no factors");
    RankedPoset acc = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k)
        acc = direct_product(acc, factors[k]);
    return acc;
}

RankedPoset rescale(const RankedPoset& p, std::size_t n)
{
    if (n < 1)
        throw ConstructionError("rescale factor must be at least 1");
    RankedPoset out = p;
    for (auto& r : out.ranks.ranks)
        r *= n;
    if (n > 1 && !p.poset.covers().empty())
        out.ranks.kind = RankKind::generalized;
    return out;
}

namespace {

std::vector<std::size_t> compose(const std::vector<std::size_t>& outer, const std::vector<std::size_t>& inner)
{
    std::vector<std::size_t> out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i)
        out[i] = outer[inner[i]];
    return out;
}

std::vector<std::size_t> inverse(const std::vector<std::size_t>& f)
{
    std::vector<std::size_t> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        out[f[i]] = i;
    return out;
}

std::vector<std::size_t> identity_map(std::size_t n)
{
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = i;
    return out;
}

}  // namespace

FactorShuffle::FactorShuffle(std::vector<RankedPoset> factors, std::vector<std::size_t> perm)
    : factors_(std::move(factors)), perm_(std::move(perm))
{
    const std::size_t n = factors_.size();
    if (n == 0)
        throw ConstructionError("factor shuffle needs at least one factor");
    if (perm_.size() != n)
        throw ConstructionError("factor permutation has " + std::to_string(perm_.size()) + " entries for " +
                                std::to_string(n) + " factors");
    std::vector<bool> hit(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        if (perm_[k] >= n || hit[perm_[k]])
            throw ConstructionError("factor map is not a permutation");
        hit[perm_[k]] = true;
    }

    transport_.assign(n, {});
    std::vector<bool> done(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (done[start])
            continue;
        Cycle c;
        for (std::size_t k = start; !done[k]; k = perm_[k]) {
            done[k] = true;
            c.members.push_back(k);
        }
        // to_member[t]: representative -> members[t]
        std::vector<std::vector<std::size_t>> to_member;
        to_member.push_back(identity_map(factors_[start].size()));
        for (std::size_t t = 1; t < c.length(); ++t) {
            auto iso = find_isomorphism(factors_[start], factors_[c.members[t]]);
            if (!iso)
                throw ConstructionError("factors " + std::to_string(c.members[t - 1]) + " and " +
                                        std::to_string(c.members[t]) + " are not isomorphic");
            to_member.push_back(std::move(*iso));
        }
        for (std::size_t t = 0; t < c.length(); ++t) {
            std::size_t next = (t + 1) % c.length();
            transport_[c.members[t]] = compose(to_member[next], inverse(to_member[t]));
        }
        cycles_.push_back(std::move(c));
    }
}

PosetAutomorphism shuffle_automorphism(const FactorShuffle& fs)
{
    const auto& factors = fs.factors();
    const std::size_t n = factors.size();
    auto product = std::make_shared<const RankedPoset>(direct_product(std::span<const RankedPoset>(factors)));

    // Product index = mixed radix over linear-extension positions, factor 0
    // most significant.
    std::vector<std::size_t> radix(n);
    for (std::size_t k = 0; k < n; ++k)
        radix[k] = factors[k].size();

    std::vector<std::size_t> image(product->size());
    std::vector<std::size_t> comp(n), out(n);
    for (std::size_t idx = 0; idx < product->size(); ++idx) {
        std::size_t rest = idx;
        for (std::size_t k = n; k-- > 0;) {
            comp[k] = factors[k].poset.linext()[rest % radix[k]];
            rest /= radix[k];
        }
        for (std::size_t k = 0; k < n; ++k)
            out[fs.perm()[k]] = fs.transport(k)[comp[k]];
        std::size_t target = 0;
        for (std::size_t k = 0; k < n; ++k)
            target = target * radix[k] + factors[k].poset.position(out[k]);
        image[idx] = target;
    }
    return PosetAutomorphism(std::move(product), std::move(image));
}

IntPolynomial shuffle_fixed_mobius(const FactorShuffle& fs)
{
    IntPolynomial out{1};
    for (const auto& c : fs.cycles())
        out *= mobius_polynomial(fs.factors()[c.representative()]).substitute_power(c.length());
    return out;
}

}  // namespace mobius

#include "mobius/constructions.hpp"
#include "mobius/poset.hpp"
#include "support/corpus.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace mobius;

namespace {

RankedPoset with_ranks(Poset p, std::vector<Rank> ranks, RankKind kind)
{
    RankAssignment r = classify_ranks(p, std::move(ranks));
    r.kind = kind;
    return {std::move(p), std::move(r)};
}

bool mentions(const std::vector<Diagnostic>& d, const std::string& axiom, const std::string& lo,
              const std::string& hi)
{
    return std::any_of(d.begin(), d.end(),
                       [&](const Diagnostic& x) { return x.axiom == axiom && x.lower == lo && x.upper == hi; });
}

}  // namespace

TEST_CASE("closure_from_covers builds the transitive closure")
{
    Poset p = closure_from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(p.leq(p.index_of("a"), p.index_of("c")));
    CHECK_FALSE(p.leq(p.index_of("c"), p.index_of("a")));
    CHECK(p.covers().size() == 2);
    CHECK_FALSE(p.is_cover(p.index_of("a"), p.index_of("c")));
}

TEST_CASE("closure_from_covers drops redundant relations")
{
    Poset p = closure_from_covers({"a", "b", "c"}, {{"a", "c"}, {"a", "b"}, {"b", "c"}});
    CHECK(p.covers() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
}

TEST_CASE("antichain has diagonal order")
{
    Poset p = closure_from_covers({"a", "b"}, {});
    CHECK(p.leq(0, 0));
    CHECK(p.leq(1, 1));
    CHECK_FALSE(p.comparable(0, 1));
    CHECK(p.minimal_elements().size() == 2);
}

TEST_CASE("closure_from_covers rejects bad input")
{
    CHECK_THROWS_WITH_AS(closure_from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}), doctest::Contains("cycle"),
                         PosetError);
    CHECK_THROWS_WITH_AS(closure_from_covers({"a"}, {{"a", "a"}}), doctest::Contains("cycle"), PosetError);
    CHECK_THROWS_WITH_AS(closure_from_covers({"a"}, {{"a", "x"}}), doctest::Contains("unknown element 'x'"),
                         PosetError);
    CHECK_THROWS_WITH_AS(closure_from_covers({}, {}), doctest::Contains("empty"), PosetError);
    CHECK_THROWS_AS(closure_from_covers({"a", "a"}, {}), PosetError);
    CHECK_THROWS_AS(closure_from_covers({"a b"}, {}), PosetError);
}

TEST_CASE("cycle witness names the cycle members")
{
    try {
        closure_from_covers({"s", "x", "y", "z"}, {{"s", "x"}, {"x", "y"}, {"y", "z"}, {"z", "x"}});
        FAIL("expected a cycle error");
    } catch (const PosetError& e) {
        std::string msg = e.what();
        CHECK(msg.find("x") != std::string::npos);
        CHECK(msg.find("y") != std::string::npos);
        CHECK(msg.find("z") != std::string::npos);
        CHECK(msg.find("s <") == std::string::npos);
    }
}

TEST_CASE("linear extension breaks ties by input order")
{
    Poset p = closure_from_covers({"t", "b", "a", "*"}, {{"*", "a"}, {"*", "b"}, {"a", "t"}, {"b", "t"}});
    std::vector<std::string> seen;
    for (auto v : p.linext())
        seen.push_back(p.label(v));
    CHECK(seen == std::vector<std::string>{"*", "b", "a", "t"});
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < p.size(); ++y)
            if (p.leq(x, y))
                CHECK(p.position(x) <= p.position(y));
}

TEST_CASE("validate: smallest ranked poset")
{
    Poset p = closure_from_covers({"x", "y"}, {{"x", "y"}});
    CHECK(validate(p, classify_ranks(p, {0, 1})).empty());
}

TEST_CASE("validate: equal ranks on a 2-chain")
{
    Poset p = closure_from_covers({"x", "y"}, {{"x", "y"}});
    auto d = validate(p, classify_ranks(p, {0, 0}));
    REQUIRE_FALSE(d.empty());
    CHECK(mentions(d, "monotone", "x", "y"));
    CHECK(std::any_of(d.begin(), d.end(), [](const Diagnostic& x) {
        return x.message.find("p<q requires rank(p)<rank(q)") != std::string::npos;
    }));
}

TEST_CASE("validate: diamond with a jumping cover")
{
    Poset p = closure_from_covers({"*", "a", "b", "t"}, {{"*", "a"}, {"*", "b"}, {"a", "t"}, {"b", "t"}});
    auto rp = with_ranks(p, {0, 1, 2, 3}, RankKind::ranked);
    auto d = validate(rp.poset, rp.ranks);
    CHECK(mentions(d, "cover-step", "a", "t"));
    rp.ranks.kind = RankKind::generalized;
    CHECK(validate(rp.poset, rp.ranks).empty());
}

TEST_CASE("validate: rank zero only on minimal elements")
{
    Poset p = closure_from_covers({"a", "b", "c"}, {{"a", "b"}});
    auto d = validate(p, classify_ranks(p, {0, 1, 1}));
    CHECK(mentions(d, "rank-zero", "c", "c"));
    d = validate(p, classify_ranks(p, {0, 0, 0}));
    CHECK(mentions(d, "rank-zero", "b", "b"));
}

TEST_CASE("validate: wrong rank count")
{
    Poset p = closure_from_covers({"a", "b"}, {});
    RankAssignment r;
    r.ranks = {0};
    CHECK(validate(p, r).front().axiom == "rank-count");
}

TEST_CASE("infer_ranks")
{
    SUBCASE("boolean square gets subset sizes")
    {
        Poset p = closure_from_covers({"{}", "{1}", "{2}", "{1,2}"},
                                      {{"{}", "{1}"}, {"{}", "{2}"}, {"{1}", "{1,2}"}, {"{2}", "{1,2}"}});
        auto r = infer_ranks(p);
        CHECK(r.ranks == std::vector<Rank>{0, 1, 1, 2});
        CHECK(r.kind == RankKind::ranked);
    }
    SUBCASE("antichain")
    {
        Poset p = closure_from_covers({"a", "b"}, {});
        auto r = infer_ranks(p);
        CHECK(r.ranks == std::vector<Rank>{0, 0});
        CHECK(r.kind == RankKind::ranked);
        CHECK(r.zero_iff_minimal);
    }
    SUBCASE("N-shape with b maximal")
    {
        Poset p = closure_from_covers({"*", "a", "b", "t"}, {{"*", "a"}, {"*", "b"}, {"a", "t"}});
        auto r = infer_ranks(p);
        CHECK(r.ranks == std::vector<Rank>{0, 1, 1, 2});
        CHECK(r.kind == RankKind::ranked);
    }
}

TEST_CASE("infer_ranks on a pentagon is generalized")
{
    // 0 < a < b < 1 and 0 < c < 1: cover (c,1) jumps from 1 to 3.
    Poset p = closure_from_covers({"0", "a", "b", "c", "1"},
                                  {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
    auto r = infer_ranks(p);
    CHECK(r.ranks == std::vector<Rank>{0, 1, 2, 1, 3});
    CHECK(r.kind == RankKind::generalized);
    CHECK(validate(p, r).empty());
}

TEST_CASE("infer_ranks is strictly monotone on random posets")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto rp = testing::random_ranked_poset(rng, 9);
        auto r = infer_ranks(rp.poset);
        CHECK(r.zero_iff_minimal);
        for (std::size_t p = 0; p < rp.size(); ++p)
            for (std::size_t q = 0; q < rp.size(); ++q)
                if (rp.poset.less(p, q))
                    CHECK(r.ranks[p] < r.ranks[q]);
        CHECK(validate(rp.poset, r).empty());
    }
}

TEST_CASE("mobius_recursive")
{
    Poset two = closure_from_covers({"x", "y"}, {{"x", "y"}});
    CHECK(mobius_recursive(two, "x", "x") == 1);
    CHECK(mobius_recursive(two, "x", "y") == -1);
    CHECK(mobius_recursive(two, "y", "x") == 0);

    auto b2 = boolean(2);
    CHECK(mobius_recursive(b2.poset, "{}", "{1,2}") == 1);
    auto b3 = boolean(3);
    CHECK(mobius_recursive(b3.poset, "{}", "{1,2,3}") == -1);

    CHECK_THROWS_AS(mobius_recursive(two, "x", "nope"), PosetError);
}

TEST_CASE("mobius_recursive sums to delta over intervals")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        auto rp = testing::random_ranked_poset(rng, 8);
        const Poset& P = rp.poset;
        for (std::size_t p = 0; p < P.size(); ++p)
            for (std::size_t q = 0; q < P.size(); ++q) {
                if (!P.leq(p, q)) {
                    CHECK(mobius_recursive(P, p, q) == 0);
                    continue;
                }
                long long sum = 0;
                for (std::size_t r = 0; r < P.size(); ++r)
                    if (P.leq(p, r) && P.leq(r, q))
                        sum += mobius_recursive(P, p, r);
                CHECK(sum == (p == q ? 1 : 0));
            }
    }
}

TEST_CASE("automorphism validation")
{
    auto base = std::make_shared<const RankedPoset>(boolean(2));
    CHECK_NOTHROW(PosetAutomorphism(base, {0, 2, 1, 3}));
    CHECK_THROWS_WITH_AS(PosetAutomorphism(base, {0, 1, 1, 3}), doctest::Contains("not injective"), PosetError);
    CHECK_THROWS_WITH_AS(PosetAutomorphism(base, {3, 1, 2, 0}), doctest::Contains("rank"), PosetError);
    CHECK_THROWS_AS(PosetAutomorphism(base, {0, 1, 2}), PosetError);

    // Rank-preserving but order-breaking: swap the two middle elements of
    // an antichain-with-top where only one is below the top.
    Poset p = closure_from_covers({"a", "b", "t"}, {{"a", "t"}});
    auto rp = std::make_shared<const RankedPoset>(RankedPoset{p, classify_ranks(p, {0, 0, 1})});
    CHECK_THROWS_WITH_AS(PosetAutomorphism(rp, {1, 0, 2}), doctest::Contains("order"), PosetError);
}

TEST_CASE("fixed_subposet")
{
    SUBCASE("identity keeps everything")
    {
        auto base = std::make_shared<const RankedPoset>(boolean(3));
        auto fixed = fixed_subposet(PosetAutomorphism::identity(base));
        CHECK(fixed.poset == base->poset);
        CHECK(fixed.ranks.ranks == base->ranks.ranks);
    }
    SUBCASE("atom swap in the square")
    {
        auto base = std::make_shared<const RankedPoset>(boolean(2));
        auto fixed = fixed_subposet(PosetAutomorphism(base, {0, 2, 1, 3}));
        CHECK(fixed.poset.labels() == std::vector<std::string>{"{}", "{1,2}"});
        CHECK(fixed.ranks.ranks == std::vector<Rank>{0, 2});
        CHECK(fixed.ranks.kind == RankKind::generalized);
    }
    SUBCASE("3-cycle on the atoms of the cube")
    {
        auto base = std::make_shared<const RankedPoset>(boolean(3));
        // atoms 1 -> 2 -> 3 -> 1, as bitmasks
        std::vector<std::size_t> image(8);
        for (std::size_t m = 0; m < 8; ++m) {
            std::size_t out = 0;
            for (unsigned b = 0; b < 3; ++b)
                if (m >> b & 1u)
                    out |= std::size_t{1} << ((b + 1) % 3);
            image[m] = out;
        }
        auto fixed = fixed_subposet(PosetAutomorphism(base, image));
        CHECK(fixed.poset.labels() == std::vector<std::string>{"{}", "{1,2,3}"});
        CHECK(fixed.ranks.ranks == std::vector<Rank>{0, 3});
    }
    SUBCASE("fixed-point-free map is rejected")
    {
        Poset p = closure_from_covers({"a", "b"}, {});
        auto rp = std::make_shared<const RankedPoset>(RankedPoset{p, infer_ranks(p)});
        CHECK_THROWS_WITH_AS(fixed_subposet(PosetAutomorphism(rp, {1, 0})), doctest::Contains("fixed subposet empty"),
                             PosetError);
    }
}

TEST_CASE("is_isomorphic examples")
{
    CHECK(is_isomorphic(chain(2), chain(2)));
    CHECK_FALSE(is_isomorphic(chain(2), boolean(2)));
    auto square = direct_product(chain(1), chain(1));
    auto witness = find_isomorphism(boolean(2), square);
    REQUIRE(witness);
    auto b = boolean(2);
    for (std::size_t p = 0; p < 4; ++p)
        for (std::size_t q = 0; q < 4; ++q)
            CHECK(b.poset.leq(p, q) == square.poset.leq((*witness)[p], (*witness)[q]));
    // same order, different ranks
    CHECK_FALSE(is_isomorphic(chain(1), rescale(chain(1), 2)));
}

TEST_CASE("is_isomorphic agrees with brute force, reflexive and symmetric")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        auto a = testing::random_ranked_poset(rng, 6);
        auto b = testing::random_ranked_poset(rng, 6);
        CHECK(is_isomorphic(a, a));
        CHECK(is_isomorphic(a, b) == is_isomorphic(b, a));
        CHECK(is_isomorphic(a, b) == testing::brute_force_isomorphic(a, b));
    }
    // relabelled, reindexed copies must match
    for (int trial = 0; trial < 50; ++trial) {
        auto a = testing::random_ranked_poset(rng, 7);
        std::vector<std::size_t> perm(a.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::string> labels(a.size());
        std::vector<Rank> ranks(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            labels[perm[i]] = "r" + std::to_string(i);
            ranks[perm[i]] = a.ranks[i];
        }
        std::vector<std::pair<std::size_t, std::size_t>> rel;
        for (auto [lo, hi] : a.poset.covers())
            rel.emplace_back(perm[lo], perm[hi]);
        RankedPoset b{closure_from_index_relations(labels, rel), {}};
        b.ranks = classify_ranks(b.poset, ranks);
        CHECK(is_isomorphic(a, b));
    }
}

#pragma once

// Finite posets with (generalized) rank functions.
//
// Elements are identified by label; the internal index of an element is its
// position in the label list given at construction. The order relation is
// stored as a transitive closure bitset, one row per element.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mobius {

class PosetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Rank = std::uint64_t;

class Poset {
public:
    using Index = std::size_t;

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(Index i) const { return labels_.at(i); }
    std::size_t size() const noexcept { return labels_.size(); }

    // Throws PosetError for unknown labels.
    Index index_of(std::string_view label) const;
    std::optional<Index> find(std::string_view label) const;

    bool leq(Index p, Index q) const noexcept
    {
        return (closure_[p * words_ + q / 64] >> (q % 64)) & 1u;
    }
    bool less(Index p, Index q) const noexcept { return p != q && leq(p, q); }
    bool comparable(Index p, Index q) const noexcept { return leq(p, q) || leq(q, p); }

    // Cover pairs (lower, upper), sorted by (lower, upper) index.
    const std::vector<std::pair<Index, Index>>& covers() const noexcept { return covers_; }
    const std::vector<Index>& upper_covers(Index p) const { return up_.at(p); }
    const std::vector<Index>& lower_covers(Index p) const { return down_.at(p); }
    bool is_cover(Index p, Index q) const;

    // linext()[k] is the element at position k; position(p) is the inverse.
    const std::vector<Index>& linext() const noexcept { return linext_; }
    std::size_t position(Index p) const { return position_.at(p); }

    bool is_minimal(Index p) const { return down_.at(p).empty(); }
    std::vector<Index> minimal_elements() const;

    bool operator==(const Poset& other) const;

private:
    friend Poset closure_from_covers(std::vector<std::string>,
                                     const std::vector<std::pair<std::string, std::string>>&);
    friend Poset closure_from_index_relations(std::vector<std::string>,
                                              const std::vector<std::pair<std::size_t, std::size_t>>&);

    std::vector<std::string> labels_;
    std::unordered_map<std::string, Index> by_label_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> closure_;
    std::vector<std::pair<Index, Index>> covers_;
    std::vector<std::vector<Index>> up_;
    std::vector<std::vector<Index>> down_;
    std::vector<Index> linext_;
    std::vector<std::size_t> position_;
};

// Builds the poset whose order is the reflexive-transitive closure of the
// given relations. The relations need not be a transitive reduction; the
// stored covers are recomputed. The linear extension is the topological
// order that always picks the available element earliest in `labels`.
//
// Throws PosetError on: empty label list, duplicate or malformed labels,
// unknown labels, or a cycle (the message lists a witness cycle).
Poset closure_from_covers(std::vector<std::string> labels,
                          const std::vector<std::pair<std::string, std::string>>& covers);

// Same as above with relations given by element index.
Poset closure_from_index_relations(std::vector<std::string> labels,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& relations);

enum class RankKind { ranked, generalized };

struct RankAssignment {
    std::vector<Rank> ranks;  // by element index
    RankKind kind = RankKind::generalized;
    // rank(p) == 0 exactly on the minimal elements.
    bool zero_iff_minimal = true;

    Rank operator[](std::size_t i) const { return ranks.at(i); }
    bool operator==(const RankAssignment&) const = default;
};

struct RankedPoset {
    Poset poset;
    RankAssignment ranks;

    std::size_t size() const noexcept { return poset.size(); }
    // rank(q) - rank(p); only meaningful for p <= q on valid ranks.
    Rank gap(std::size_t p, std::size_t q) const { return ranks[q] - ranks[p]; }
    bool operator==(const RankedPoset&) const = default;
};

struct Diagnostic {
    std::string axiom;
    std::string lower;
    std::string upper;
    std::string message;
};

// Checks the order axioms and the rank axioms. An empty result means the
// pair is a valid generalized ranked poset, and additionally a ranked poset
// when ranks.kind == RankKind::ranked.
std::vector<Diagnostic> validate(const Poset& poset, const RankAssignment& ranks);

// Determines `kind` and `zero_iff_minimal` for explicitly supplied ranks.
// Does not reject invalid ranks; use validate() for that.
RankAssignment classify_ranks(const Poset& poset, std::vector<Rank> ranks);

// Longest chain from a minimal element.
RankAssignment infer_ranks(const Poset& poset);

// Classical Möbius function by the interval recursion
//   mu(p,p) = 1,  mu(p,q) = -sum_{p <= r < q} mu(p,r),  mu(p,q) = 0 if p !<= q.
long long mobius_recursive(const Poset& poset, std::size_t p, std::size_t q);
long long mobius_recursive(const Poset& poset, std::string_view p, std::string_view q);

// An order- and rank-preserving permutation of a ranked poset.
class PosetAutomorphism {
public:
    // Validates the map; throws PosetError naming the first violation.
    PosetAutomorphism(std::shared_ptr<const RankedPoset> base, std::vector<std::size_t> image);

    static PosetAutomorphism identity(std::shared_ptr<const RankedPoset> base);

    const RankedPoset& base() const noexcept { return *base_; }
    const std::shared_ptr<const RankedPoset>& base_ptr() const noexcept { return base_; }
    const std::vector<std::size_t>& image() const noexcept { return image_; }
    std::size_t operator()(std::size_t p) const { return image_.at(p); }
    bool fixes(std::size_t p) const { return image_.at(p) == p; }

private:
    std::shared_ptr<const RankedPoset> base_;
    std::vector<std::size_t> image_;
};

// The subposet of elements fixed by `aut`, with inherited order and ranks.
// Elements keep their relative index order. Throws PosetError if nothing is
// fixed.
RankedPoset fixed_subposet(const PosetAutomorphism& aut);

// A rank-preserving order isomorphism a -> b, as a map from indices of `a`
// to indices of `b`, or nullopt when none exists. Backtracking search;
// intended for small posets.
std::optional<std::vector<std::size_t>> find_isomorphism(const RankedPoset& a, const RankedPoset& b);

inline bool is_isomorphic(const RankedPoset& a, const RankedPoset& b)
{
    return find_isomorphism(a, b).has_value();
}

}  // namespace mobius

#include "mobius/poset.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <queue>
#include <sstream>
#include <tuple>

namespace mobius {

namespace {

bool valid_label(std::string_view label)
{
    if (label.empty() || label.front() == '#')
        return false;
    return std::none_of(label.begin(), label.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

// Finds a directed cycle among `remaining` nodes of `succ`. Every remaining
// node has an unprocessed predecessor, so walking predecessors must revisit.
std::vector<std::size_t> cycle_witness(const std::vector<std::vector<std::size_t>>& pred,
                                       const std::vector<bool>& remaining)
{
    std::size_t start = 0;
    while (!remaining[start])
        ++start;
    std::vector<std::size_t> seen_at(remaining.size(), SIZE_MAX);
    std::vector<std::size_t> walk;
    std::size_t cur = start;
    while (seen_at[cur] == SIZE_MAX) {
        seen_at[cur] = walk.size();
        walk.push_back(cur);
        auto it = std::find_if(pred[cur].begin(), pred[cur].end(), [&](std::size_t p) { return remaining[p]; });
        cur = *it;
    }
    std::vector<std::size_t> cycle(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[cur]), walk.end());
    std::reverse(cycle.begin(), cycle.end());
    return cycle;
}

}  // namespace

Poset::Index Poset::index_of(std::string_view label) const
{
    if (auto idx = find(label))
        return *idx;
    throw PosetError("unknown element '" + std::string(label) + "'");
}

std::optional<Poset::Index> Poset::find(std::string_view label) const
{
    auto it = by_label_.find(std::string(label));
    if (it == by_label_.end())
        return std::nullopt;
    return it->second;
}

bool Poset::is_cover(Index p, Index q) const
{
    const auto& ups = up_.at(p);
    return std::binary_search(ups.begin(), ups.end(), q);
}

std::vector<Poset::Index> Poset::minimal_elements() const
{
    std::vector<Index> out;
    for (Index i = 0; i < size(); ++i)
        if (down_[i].empty())
            out.push_back(i);
    return out;
}

bool Poset::operator==(const Poset& other) const
{
    return labels_ == other.labels_ && closure_ == other.closure_;
}

Poset closure_from_index_relations(std::vector<std::string> labels,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& relations)
{
    if (labels.empty())
        throw PosetError("empty poset");

    Poset P;
    const std::size_t n = labels.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!valid_label(labels[i]))
            throw PosetError("invalid element label '" + labels[i] + "'");
        if (!P.by_label_.emplace(labels[i], i).second)
            throw PosetError("duplicate element '" + labels[i] + "'");
    }
    P.labels_ = std::move(labels);

    std::vector<std::vector<std::size_t>> succ(n), pred(n);
    for (auto [a, b] : relations) {
        if (a >= n || b >= n)
            throw PosetError("relation index out of range");
        succ[a].push_back(b);
        pred[b].push_back(a);
    }

    // Kahn's algorithm, smallest index first.
    std::vector<std::size_t> indegree(n);
    for (std::size_t i = 0; i < n; ++i)
        indegree[i] = pred[i].size();
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (indegree[i] == 0)
            ready.push(i);
    while (!ready.empty()) {
        std::size_t v = ready.top();
        ready.pop();
        P.linext_.push_back(v);
        for (std::size_t w : succ[v])
            if (--indegree[w] == 0)
                ready.push(w);
    }
    if (P.linext_.size() != n) {
        std::vector<bool> remaining(n, true);
        for (std::size_t v : P.linext_)
            remaining[v] = false;
        auto cycle = cycle_witness(pred, remaining);
        std::ostringstream msg;
        msg << "cycle detected: ";
        for (std::size_t v : cycle)
            msg << P.labels_[v] << " < ";
        msg << P.labels_[cycle.front()];
        throw PosetError(msg.str());
    }
    P.position_.assign(n, 0);
    for (std::size_t k = 0; k < n; ++k)
        P.position_[P.linext_[k]] = k;

    // Up-sets, filled in reverse linear-extension order.
    P.words_ = (n + 63) / 64;
    P.closure_.assign(n * P.words_, 0);
    for (auto it = P.linext_.rbegin(); it != P.linext_.rend(); ++it) {
        std::size_t v = *it;
        std::uint64_t* row = &P.closure_[v * P.words_];
        row[v / 64] |= std::uint64_t{1} << (v % 64);
        for (std::size_t w : succ[v]) {
            const std::uint64_t* other = &P.closure_[w * P.words_];
            for (std::size_t k = 0; k < P.words_; ++k)
                row[k] |= other[k];
        }
    }

    // q covers p iff p < q and no r with p < r < q. Candidates are the
    // input successors; the true covers are those not reachable through
    // another successor.
    P.up_.assign(n, {});
    P.down_.assign(n, {});
    for (std::size_t p = 0; p < n; ++p) {
        std::vector<std::size_t> cand = succ[p];
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        for (std::size_t q : cand) {
            bool direct = std::none_of(cand.begin(), cand.end(),
                                       [&](std::size_t r) { return r != q && P.leq(r, q); });
            if (direct) {
                P.up_[p].push_back(q);
                P.down_[q].push_back(p);
                P.covers_.emplace_back(p, q);
            }
        }
    }
    for (auto& d : P.down_)
        std::sort(d.begin(), d.end());
    return P;
}

Poset closure_from_covers(std::vector<std::string> labels,
                          const std::vector<std::pair<std::string, std::string>>& covers)
{
    std::unordered_map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < labels.size(); ++i)
        idx.emplace(labels[i], i);
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    rel.reserve(covers.size());
    for (const auto& [a, b] : covers) {
        auto ia = idx.find(a);
        auto ib = idx.find(b);
        if (ia == idx.end())
            throw PosetError("unknown element '" + a + "' in cover");
        if (ib == idx.end())
            throw PosetError("unknown element '" + b + "' in cover");
        rel.emplace_back(ia->second, ib->second);
    }
    return closure_from_index_relations(std::move(labels), rel);
}

std::vector<Diagnostic> validate(const Poset& P, const RankAssignment& ranks)
{
    std::vector<Diagnostic> out;
    const std::size_t n = P.size();
    auto add = [&](std::string axiom, std::size_t a, std::size_t b, std::string msg) {
        out.push_back({std::move(axiom), P.label(a), P.label(b), std::move(msg)});
    };

    if (ranks.ranks.size() != n) {
        out.push_back({"rank-count", "", "",
                       "rank assignment has " + std::to_string(ranks.ranks.size()) + " entries for " +
                           std::to_string(n) + " elements"});
        return out;
    }

    for (std::size_t p = 0; p < n; ++p) {
        if (!P.leq(p, p))
            add("reflexive", p, p, "leq is not reflexive at " + P.label(p));
        for (std::size_t q = p + 1; q < n; ++q)
            if (P.leq(p, q) && P.leq(q, p))
                add("antisymmetric", p, q, P.label(p) + " <= " + P.label(q) + " <= " + P.label(p));
    }
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (!P.less(p, q))
                continue;
            if (P.position(p) > P.position(q))
                add("linear-extension", p, q, "linear extension places " + P.label(q) + " before " + P.label(p));
            for (std::size_t r = 0; r < n; ++r)
                if (P.leq(q, r) && !P.leq(p, r)) {
                    add("transitive", p, r, "leq is not transitive through " + P.label(q));
                    break;
                }
        }

    for (std::size_t p = 0; p < n; ++p) {
        bool minimal = P.is_minimal(p);
        if ((ranks[p] == 0) != minimal)
            add("rank-zero", p, p,
                minimal ? "minimal element " + P.label(p) + " has rank " + std::to_string(ranks[p])
                        : "non-minimal element " + P.label(p) + " has rank 0");
    }
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (P.less(p, q) && !(ranks[p] < ranks[q]))
                add("monotone", p, q,
                    "p<q requires rank(p)<rank(q): " + P.label(p) + " < " + P.label(q) + " but ranks " +
                        std::to_string(ranks[p]) + " >= " + std::to_string(ranks[q]));
    if (ranks.kind == RankKind::ranked)
        for (auto [p, q] : P.covers())
            if (ranks[q] != ranks[p] + 1)
                add("cover-step", p, q,
                    "cover (" + P.label(p) + "," + P.label(q) + ") requires rank(" + P.label(q) + ")=rank(" +
                        P.label(p) + ")+1, got " + std::to_string(ranks[q]) + " and " + std::to_string(ranks[p]));
    return out;
}

RankAssignment classify_ranks(const Poset& P, std::vector<Rank> ranks)
{
    RankAssignment out;
    out.ranks = std::move(ranks);
    if (out.ranks.size() != P.size()) {
        out.kind = RankKind::generalized;
        out.zero_iff_minimal = false;
        return out;
    }
    bool steps = std::all_of(P.covers().begin(), P.covers().end(),
                             [&](const auto& c) { return out.ranks[c.second] == out.ranks[c.first] + 1; });
    out.kind = steps ? RankKind::ranked : RankKind::generalized;
    out.zero_iff_minimal = true;
    for (std::size_t p = 0; p < P.size(); ++p)
        if ((out.ranks[p] == 0) != P.is_minimal(p))
            out.zero_iff_minimal = false;
    return out;
}

RankAssignment infer_ranks(const Poset& P)
{
    std::vector<Rank> ranks(P.size(), 0);
    for (std::size_t v : P.linext())
        for (std::size_t w : P.upper_covers(v))
            ranks[w] = std::max(ranks[w], ranks[v] + 1);
    return classify_ranks(P, std::move(ranks));
}

long long mobius_recursive(const Poset& P, std::size_t p, std::size_t q)
{
    if (p >= P.size() || q >= P.size())
        throw PosetError("element index out of range");
    if (!P.leq(p, q))
        return 0;
    // mu(p, r) for every r in [p, q], visited in linear-extension order so
    // each value only depends on already computed ones.
    std::vector<long long> mu(P.size(), 0);
    const auto& order = P.linext();
    for (std::size_t k = P.position(p); k <= P.position(q); ++k) {
        std::size_t r = order[k];
        if (!P.leq(p, r) || !P.leq(r, q))
            continue;
        if (r == p) {
            mu[r] = 1;
            continue;
        }
        long long sum = 0;
        for (std::size_t j = P.position(p); j < k; ++j) {
            std::size_t s = order[j];
            if (P.leq(p, s) && P.less(s, r))
                sum += mu[s];
        }
        mu[r] = -sum;
    }
    return mu[q];
}

long long mobius_recursive(const Poset& P, std::string_view p, std::string_view q)
{
    return mobius_recursive(P, P.index_of(p), P.index_of(q));
}

PosetAutomorphism::PosetAutomorphism(std::shared_ptr<const RankedPoset> base, std::vector<std::size_t> image)
    : base_(std::move(base)), image_(std::move(image))
{
    if (!base_)
        throw PosetError("automorphism without base poset");
    const Poset& P = base_->poset;
    const std::size_t n = P.size();
    if (image_.size() != n)
        throw PosetError("automorphism image has wrong size");
    std::vector<bool> hit(n, false);
    for (std::size_t p = 0; p < n; ++p) {
        if (image_[p] >= n)
            throw PosetError("automorphism maps " + P.label(p) + " outside the poset");
        if (hit[image_[p]])
            throw PosetError("automorphism is not injective: two elements map to " + P.label(image_[p]));
        hit[image_[p]] = true;
    }
    for (std::size_t p = 0; p < n; ++p) {
        if (base_->ranks[image_[p]] != base_->ranks[p])
            throw PosetError("automorphism does not preserve rank at " + P.label(p));
        for (std::size_t q = 0; q < n; ++q)
            if (P.leq(p, q) != P.leq(image_[p], image_[q]))
                throw PosetError("automorphism does not preserve order on (" + P.label(p) + "," + P.label(q) + ")");
    }
}

PosetAutomorphism PosetAutomorphism::identity(std::shared_ptr<const RankedPoset> base)
{
    std::vector<std::size_t> id(base ? base->size() : 0);
    for (std::size_t i = 0; i < id.size(); ++i)
        id[i] = i;
    return PosetAutomorphism(std::move(base), std::move(id));
}

RankedPoset fixed_subposet(const PosetAutomorphism& aut)
{
    const RankedPoset& base = aut.base();
    const Poset& P = base.poset;
    std::vector<std::size_t> kept;
    for (std::size_t p = 0; p < P.size(); ++p)
        if (aut.fixes(p))
            kept.push_back(p);
    if (kept.empty())
        throw PosetError("fixed subposet empty");

    std::vector<std::string> labels;
    std::vector<Rank> ranks;
    for (std::size_t p : kept) {
        labels.push_back(P.label(p));
        ranks.push_back(base.ranks[p]);
    }
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (i != j && P.leq(kept[i], kept[j]))
                rel.emplace_back(i, j);

    RankedPoset out{closure_from_index_relations(std::move(labels), rel), {}};
    out.ranks = classify_ranks(out.poset, std::move(ranks));
    out.ranks.kind = RankKind::generalized;
    return out;
}

namespace {

struct Profile {
    Rank rank;
    std::size_t up, down, above, below;
    bool operator==(const Profile&) const = default;
};

std::vector<Profile> profiles(const RankedPoset& rp)
{
    const Poset& P = rp.poset;
    std::vector<Profile> out(P.size());
    for (std::size_t p = 0; p < P.size(); ++p) {
        Profile& pr = out[p];
        pr.rank = rp.ranks[p];
        pr.up = P.upper_covers(p).size();
        pr.down = P.lower_covers(p).size();
        pr.above = pr.below = 0;
        for (std::size_t q = 0; q < P.size(); ++q) {
            pr.above += P.less(p, q);
            pr.below += P.less(q, p);
        }
    }
    return out;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const RankedPoset& a, const RankedPoset& b)
{
    const std::size_t n = a.size();
    if (n != b.size() || a.poset.covers().size() != b.poset.covers().size())
        return std::nullopt;
    if (a.ranks.ranks.size() != n || b.ranks.ranks.size() != n)
        return std::nullopt;

    auto pa = profiles(a);
    auto pb = profiles(b);
    {
        auto key = [](const Profile& p) { return std::tuple(p.rank, p.up, p.down, p.above, p.below); };
        std::vector<std::tuple<Rank, std::size_t, std::size_t, std::size_t, std::size_t>> ka, kb;
        for (const auto& p : pa)
            ka.push_back(key(p));
        for (const auto& p : pb)
            kb.push_back(key(p));
        std::sort(ka.begin(), ka.end());
        std::sort(kb.begin(), kb.end());
        if (ka != kb)
            return std::nullopt;
    }

    const auto& order = a.poset.linext();
    std::vector<std::size_t> map(n, SIZE_MAX);
    std::vector<bool> used(n, false);

    std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
        if (k == n)
            return true;
        std::size_t p = order[k];
        for (std::size_t q = 0; q < n; ++q) {
            if (used[q] || !(pa[p] == pb[q]))
                continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                std::size_t r = order[j];
                std::size_t s = map[r];
                ok = a.poset.leq(r, p) == b.poset.leq(s, q) && a.poset.leq(p, r) == b.poset.leq(q, s);
            }
            if (!ok)
                continue;
            map[p] = q;
            used[q] = true;
            if (extend(k + 1))
                return true;
            used[q] = false;
            map[p] = SIZE_MAX;
        }
        return false;
    };
    if (!extend(0))
        return std::nullopt;
    return map;
}

}  // namespace mobius

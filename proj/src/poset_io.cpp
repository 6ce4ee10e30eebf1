#include "mobius/poset_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace mobius {

namespace {

std::vector<std::string> tokens(std::string_view line)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) {
        if (tok.front() == '#')
            break;
        out.push_back(tok);
    }
    return out;
}

template <typename F>
void for_each_line(std::string_view text, F&& f)
{
    std::size_t lineno = 0;
    while (!text.empty()) {
        ++lineno;
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        auto toks = tokens(line);
        if (!toks.empty())
            f(lineno, toks);
        if (nl == std::string_view::npos)
            break;
        text.remove_prefix(nl + 1);
    }
}

Rank parse_rank(std::size_t lineno, const std::string& s)
{
    Rank r = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), r);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError(lineno, "invalid rank '" + s + "'");
    return r;
}

}  // namespace

RankedPoset parse_poset(std::string_view text)
{
    std::vector<std::string> labels;
    std::vector<Rank> ranks;
    std::set<std::string> seen;
    std::vector<std::pair<std::string, std::string>> covers;
    std::size_t with_rank = 0;

    for_each_line(text, [&](std::size_t lineno, const std::vector<std::string>& t) {
        if (t[0] == "elem") {
            if (t.size() != 2 && !(t.size() == 4 && t[2] == "rank"))
                throw ParseError(lineno, "expected 'elem <label>' or 'elem <label> rank <k>'");
            if (!seen.insert(t[1]).second)
                throw ParseError(lineno, "duplicate element '" + t[1] + "'");
            labels.push_back(t[1]);
            if (t.size() == 4) {
                ranks.push_back(parse_rank(lineno, t[3]));
                ++with_rank;
            } else {
                ranks.push_back(0);
            }
            if (with_rank != 0 && with_rank != labels.size())
                throw ParseError(lineno, "either every elem line has a rank or none does");
        } else if (t[0] == "cover") {
            if (t.size() != 3)
                throw ParseError(lineno, "expected 'cover <lower> <upper>'");
            covers.emplace_back(t[1], t[2]);
        } else {
            throw ParseError(lineno, "unknown directive '" + t[0] + "'");
        }
    });

    if (labels.empty())
        throw ParseError(0, "empty poset");
    for (const auto& [a, b] : covers) {
        if (!seen.count(a))
            throw ParseError(0, "cover mentions unknown element '" + a + "'");
        if (!seen.count(b))
            throw ParseError(0, "cover mentions unknown element '" + b + "'");
    }

    RankedPoset out;
    try {
        out.poset = closure_from_covers(std::move(labels), covers);
    } catch (const PosetError& e) {
        throw ParseError(0, e.what());
    }
    out.ranks = with_rank ? classify_ranks(out.poset, std::move(ranks)) : infer_ranks(out.poset);
    return out;
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RankedPoset read_poset_file(const std::string& path)
{
    return parse_poset(read_text_file(path));
}

std::string format_poset(const RankedPoset& rp)
{
    std::ostringstream os;
    const Poset& P = rp.poset;
    for (std::size_t i = 0; i < P.size(); ++i)
        os << "elem " << P.label(i) << " rank " << rp.ranks[i] << '\n';
    for (auto [a, b] : P.covers())
        os << "cover " << P.label(a) << ' ' << P.label(b) << '\n';
    return os.str();
}

PosetAutomorphism parse_automorphism(std::string_view text, std::shared_ptr<const RankedPoset> base)
{
    const Poset& P = base->poset;
    std::vector<std::size_t> image(P.size());
    for (std::size_t i = 0; i < image.size(); ++i)
        image[i] = i;
    std::set<std::size_t> sources, targets;

    for_each_line(text, [&](std::size_t lineno, const std::vector<std::string>& t) {
        if (t[0] != "map" || t.size() != 3)
            throw ParseError(lineno, "expected 'map <from> <to>'");
        auto from = P.find(t[1]);
        auto to = P.find(t[2]);
        if (!from)
            throw ParseError(lineno, "unknown element '" + t[1] + "'");
        if (!to)
            throw ParseError(lineno, "unknown element '" + t[2] + "'");
        if (!sources.insert(*from).second)
            throw ParseError(lineno, "element '" + t[1] + "' mapped twice");
        if (!targets.insert(*to).second)
            throw ParseError(lineno, "element '" + t[2] + "' is the target of two map lines");
        image[*from] = *to;
    });

    try {
        return PosetAutomorphism(std::move(base), std::move(image));
    } catch (const PosetError& e) {
        throw ParseError(0, e.what());
    }
}

PosetAutomorphism read_automorphism_file(const std::string& path, std::shared_ptr<const RankedPoset> base)
{
    return parse_automorphism(read_text_file(path), std::move(base));
}

}  // namespace mobius

#pragma once

// Line-oriented text formats.
//
// Poset file:
//   elem <label> [rank <k>]
//   cover <lower> <upper>
// '#' starts a comment, blank lines are ignored. Either every elem line
// carries a rank or none does; without ranks they are inferred from longest
// chains.
//
// Automorphism file:
//   map <from> <to>
// Elements without a map line are fixed.

#include "mobius/poset.hpp"

#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mobius {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Parses the order and ranks. The ranks are classified but not validated,
// so a file with broken ranks still loads. Order errors (cycles, unknown
// labels) throw ParseError.
RankedPoset parse_poset(std::string_view text);
RankedPoset read_poset_file(const std::string& path);

// Always writes explicit ranks; elements in index order, covers sorted.
std::string format_poset(const RankedPoset& rp);

PosetAutomorphism parse_automorphism(std::string_view text, std::shared_ptr<const RankedPoset> base);
PosetAutomorphism read_automorphism_file(const std::string& path, std::shared_ptr<const RankedPoset> base);

std::string read_text_file(const std::string& path);

}  // namespace mobius

#pragma once

#include <mdiff/text.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace mdiff {

// Reserved marker lines of the merged-difference text format.
// These are frozen byte-for-byte, including the double space in `end`.
namespace markers {
    inline constexpr std::string_view begin = ";===== begin =====";
    inline constexpr std::string_view separator = ";-----------------";
    inline constexpr std::string_view end = ";=====  end  =====";
}

struct Segment {
    enum class Kind {
        Common,
        Difference,
    };

    Kind kind = Kind::Common;
    std::vector<Token> common; // Common only
    std::vector<Token> upper; // Difference: tokens only in the first input
    std::vector<Token> lower; // Difference: tokens only in the second input
    bool marked = false; // Difference: worker's "x" on the separator

    bool operator==(const Segment&) const = default;

    static Segment make_common(std::vector<Token> tokens);
    static Segment make_difference(std::vector<Token> upper, std::vector<Token> lower, bool marked = false);
};

// Alternating common and difference segments; no two adjacent Common
// segments; both originals are recoverable.
struct MergedDocument {
    std::vector<Segment> segments;
    Granularity granularity = Granularity::Line;

    bool operator==(const MergedDocument&) const = default;
};

// Merge two sequences into a document: Keep hunks become Common segments,
// a Delete and the Insert following it pair up into one Difference.
MergedDocument merge(const TokenSeq& a, const TokenSeq& b);

// Text form: common tokens one per line, each difference bracketed by the
// begin/separator/end marker lines. A marked separator renders as
// "x;-----------------". Ends with '\n' unless the document is empty.
std::string render(const MergedDocument& doc);

// Inverse of render. Accepts 'x' or 'X' before the separator as a mark.
// Throws MalformedFormat on unbalanced or misplaced markers.
MergedDocument parse(std::string_view text, Granularity granularity = Granularity::Line);

// Common tokens plus upper difference tokens, in order: the first input.
TokenSeq reconstruct_first(const MergedDocument& doc);

// Common tokens plus lower difference tokens: the second input.
TokenSeq reconstruct_second(const MergedDocument& doc);

} // namespace mdiff

#pragma once

#include <mdiff/text.hpp>

#include <cstddef>
#include <vector>

namespace mdiff {

enum class HunkKind {
    Keep,
    Delete,
    Insert,
};

struct Hunk {
    HunkKind kind;
    std::vector<Token> tokens;

    bool operator==(const Hunk&) const = default;
};

// Edit script transforming the first sequence into the second.
// Hunks are maximal; a Delete adjacent to an Insert always comes first.
struct EditScript {
    std::vector<Hunk> hunks;
    std::size_t len_a = 0;
    std::size_t len_b = 0;

    std::size_t keep_count() const;
};

// LCS-optimal edit script (Myers shortest edit script).
// Throws GranularityMismatch when the inputs disagree.
EditScript diff(const TokenSeq& a, const TokenSeq& b);

// Longest-common-subsequence length by full dynamic programming.
// Quadratic memory; intended as a cross-check for diff().
std::size_t lcs_length(const TokenSeq& a, const TokenSeq& b);

struct ThreeWayRegion {
    enum class Kind {
        Agree,
        Disagree,
    };

    Kind kind;
    std::vector<Token> a;
    std::vector<Token> b;
    std::vector<Token> c;

    bool operator==(const ThreeWayRegion&) const = default;
};

// Three-way difference report, pivoting on the first sequence.
// Concatenating each slot over all regions reproduces that input.
std::vector<ThreeWayRegion> diff3(const TokenSeq& a, const TokenSeq& b, const TokenSeq& c);

} // namespace mdiff

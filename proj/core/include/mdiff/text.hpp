#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mdiff {

enum class Granularity {
    Line,
    Word,
};

using Token = std::string;

// Ordered sequence of tokens; one token per compared unit.
struct TokenSeq {
    std::vector<Token> tokens;
    Granularity granularity = Granularity::Line;

    bool operator==(const TokenSeq&) const = default;

    bool empty() const { return tokens.empty(); }
    std::size_t size() const { return tokens.size(); }
};

// True for the three reserved marker lines and the x-marked separator.
bool is_reserved_marker(std::string_view line);

// One token per line; CR stripped; a final newline adds no empty token.
// Throws MarkerCollision if a line equals a reserved marker.
TokenSeq tokenize_lines(std::string_view text);

// Tokens are maximal runs of non-whitespace characters.
// Throws MarkerCollision if a word equals a reserved marker.
TokenSeq tokenize_words(std::string_view text);

// Line granularity joins with '\n', Word granularity with a single space.
// No trailing separator.
std::string detokenize(const TokenSeq& seq);

// Number of UTF-8 code points in a token.
std::size_t character_count(std::string_view text);

} // namespace mdiff

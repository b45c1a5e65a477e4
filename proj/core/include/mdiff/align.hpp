#pragma once

#include <mdiff/text.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace mdiff {

// Classifies structural tag tokens by a prefix/suffix pair, e.g. the
// default recognizes <Chapter 1> and </Chapter 1>.
struct TagPattern {
    std::string open_prefix = "<";
    std::string close_suffix = ">";

    bool matches(std::string_view token) const;
    // A tag whose inner text starts with '/' closes the matching open tag.
    bool is_close(std::string_view token) const;
    // Inner text without affixes (and without the leading '/' for closers).
    std::string name(std::string_view token) const;
};

// Inserts the tag tokens of `tagged` into `untagged` at the positions a
// merge induces: common tokens and the lower (untagged) sides survive,
// and of the upper sides only the tag tokens do.
TokenSeq propagate_tags(const TokenSeq& tagged, const TokenSeq& untagged, const TagPattern& pattern = {});

// Number of pattern-matching tokens in a sequence. Nonzero on the
// untagged input means propagate_tags positions may be unreliable.
std::size_t count_tags(const TokenSeq& seq, const TagPattern& pattern = {});

struct ChapterSpan {
    std::string label; // empty before the first tag
    std::vector<Token> tokens;

    bool operator==(const ChapterSpan&) const = default;
};

// Partitions the non-tag tokens of an annotated sequence into spans
// labeled by their enclosing open tag. Throws UnbalancedTags when a close
// tag has no matching open tag.
std::vector<ChapterSpan> chapters_of(const TokenSeq& annotated, const TagPattern& pattern = {});

} // namespace mdiff

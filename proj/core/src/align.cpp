#include <mdiff/align.hpp>

#include <mdiff/errors.hpp>
#include <mdiff/merged.hpp>

#include <utility>

namespace mdiff {

bool TagPattern::matches(std::string_view token) const
{
    return token.size() > open_prefix.size() + close_suffix.size()
        && token.starts_with(open_prefix)
        && token.ends_with(close_suffix);
}

bool TagPattern::is_close(std::string_view token) const
{
    if (!matches(token))
        return false;
    return token.substr(open_prefix.size()).starts_with('/');
}

std::string TagPattern::name(std::string_view token) const
{
    std::string_view inner = token.substr(open_prefix.size(),
        token.size() - open_prefix.size() - close_suffix.size());
    if (inner.starts_with('/'))
        inner.remove_prefix(1);
    return std::string(inner);
}

TokenSeq propagate_tags(const TokenSeq& tagged, const TokenSeq& untagged, const TagPattern& pattern)
{
    const MergedDocument doc = merge(tagged, untagged);

    TokenSeq out;
    out.granularity = untagged.granularity;
    for (const auto& segment : doc.segments) {
        if (segment.kind == Segment::Kind::Common) {
            out.tokens.insert(out.tokens.end(), segment.common.begin(), segment.common.end());
            continue;
        }
        // Tags come before the presentation-side tokens of the same difference.
        for (const auto& token : segment.upper) {
            if (pattern.matches(token))
                out.tokens.push_back(token);
        }
        out.tokens.insert(out.tokens.end(), segment.lower.begin(), segment.lower.end());
    }
    return out;
}

std::size_t count_tags(const TokenSeq& seq, const TagPattern& pattern)
{
    std::size_t n = 0;
    for (const auto& token : seq.tokens) {
        if (pattern.matches(token))
            ++n;
    }
    return n;
}

std::vector<ChapterSpan> chapters_of(const TokenSeq& annotated, const TagPattern& pattern)
{
    std::vector<ChapterSpan> spans;
    std::vector<std::string> stack;
    ChapterSpan current;
    bool just_opened = false;

    auto flush = [&](bool keep_empty) {
        if (!current.tokens.empty() || keep_empty)
            spans.push_back({ current.label, std::move(current.tokens) });
        current.tokens.clear();
    };

    for (const auto& token : annotated.tokens) {
        if (!pattern.matches(token)) {
            current.tokens.push_back(token);
            just_opened = false;
            continue;
        }
        const std::string tag_name = pattern.name(token);
        if (pattern.is_close(token)) {
            if (stack.empty() || stack.back() != tag_name)
                throw UnbalancedTags(token);
            // A chapter opened and closed with nothing between them is a
            // legitimate zero-length span.
            flush(just_opened);
            stack.pop_back();
            current.label = stack.empty() ? std::string() : stack.back();
            just_opened = false;
        } else {
            flush(just_opened);
            stack.push_back(tag_name);
            current.label = tag_name;
            just_opened = true;
        }
    }
    flush(false);
    return spans;
}

} // namespace mdiff

#include <mdiff/merged.hpp>

#include <mdiff/diff.hpp>
#include <mdiff/errors.hpp>

#include <cassert>
#include <utility>

namespace mdiff {

Segment Segment::make_common(std::vector<Token> tokens)
{
    Segment s;
    s.kind = Kind::Common;
    s.common = std::move(tokens);
    return s;
}

Segment Segment::make_difference(std::vector<Token> upper, std::vector<Token> lower, bool marked)
{
    Segment s;
    s.kind = Kind::Difference;
    s.upper = std::move(upper);
    s.lower = std::move(lower);
    s.marked = marked;
    return s;
}

MergedDocument merge(const TokenSeq& a, const TokenSeq& b)
{
    const EditScript script = diff(a, b);

    MergedDocument doc;
    doc.granularity = a.granularity;

    const auto& hunks = script.hunks;
    for (std::size_t i = 0; i < hunks.size(); ++i) {
        switch (hunks[i].kind) {
        case HunkKind::Keep:
            doc.segments.push_back(Segment::make_common(hunks[i].tokens));
            break;
        case HunkKind::Delete:
            if (i + 1 < hunks.size() && hunks[i + 1].kind == HunkKind::Insert) {
                doc.segments.push_back(Segment::make_difference(hunks[i].tokens, hunks[i + 1].tokens));
                ++i;
            } else {
                doc.segments.push_back(Segment::make_difference(hunks[i].tokens, {}));
            }
            break;
        case HunkKind::Insert:
            doc.segments.push_back(Segment::make_difference({}, hunks[i].tokens));
            break;
        }
    }
    return doc;
}

std::string render(const MergedDocument& doc)
{
    std::string out;
    auto line = [&](std::string_view text) {
        out += text;
        out += '\n';
    };
    for (const auto& segment : doc.segments) {
        if (segment.kind == Segment::Kind::Common) {
            for (const auto& token : segment.common)
                line(token);
            continue;
        }
        line(markers::begin);
        for (const auto& token : segment.upper)
            line(token);
        if (segment.marked)
            line(std::string("x") + std::string(markers::separator));
        else
            line(markers::separator);
        for (const auto& token : segment.lower)
            line(token);
        line(markers::end);
    }
    return out;
}

MergedDocument parse(std::string_view text, Granularity granularity)
{
    enum class State {
        Outside,
        Upper,
        Lower,
    };

    MergedDocument doc;
    doc.granularity = granularity;

    State state = State::Outside;
    std::vector<Token> common;
    std::vector<Token> upper;
    std::vector<Token> lower;
    bool marked = false;

    auto flush_common = [&] {
        if (!common.empty())
            doc.segments.push_back(Segment::make_common(std::move(common)));
        common.clear();
    };

    std::size_t pos = 0;
    std::size_t line_number = 0;
    std::size_t begin_line = 0;
    while (pos < text.size()) {
        ++line_number;
        std::size_t nl = text.find('\n', pos);
        std::string_view line = (nl == std::string_view::npos)
            ? text.substr(pos)
            : text.substr(pos, nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() : nl + 1;
        if (line.ends_with('\r'))
            line.remove_suffix(1);

        const bool is_begin = line == markers::begin;
        const bool is_end = line == markers::end;
        const bool is_plain_sep = line == markers::separator;
        const bool is_marked_sep = (line.starts_with('x') || line.starts_with('X'))
            && line.substr(1) == markers::separator;

        switch (state) {
        case State::Outside:
            if (is_begin) {
                flush_common();
                state = State::Upper;
                begin_line = line_number;
            } else if (is_plain_sep || is_marked_sep) {
                throw MalformedFormat("separator outside a difference", line_number);
            } else if (is_end) {
                throw MalformedFormat("end marker without a begin marker", line_number);
            } else {
                common.emplace_back(line);
            }
            break;
        case State::Upper:
            if (is_plain_sep || is_marked_sep) {
                marked = is_marked_sep;
                state = State::Lower;
            } else if (is_begin) {
                throw MalformedFormat("nested begin marker", line_number);
            } else if (is_end) {
                throw MalformedFormat("end marker before the separator", line_number);
            } else {
                upper.emplace_back(line);
            }
            break;
        case State::Lower:
            if (is_end) {
                if (upper.empty() && lower.empty())
                    throw MalformedFormat("difference with both sides empty", line_number);
                doc.segments.push_back(Segment::make_difference(std::move(upper), std::move(lower), marked));
                upper.clear();
                lower.clear();
                marked = false;
                state = State::Outside;
            } else if (is_begin) {
                throw MalformedFormat("nested begin marker", line_number);
            } else if (is_plain_sep || is_marked_sep) {
                throw MalformedFormat("duplicate separator in a difference", line_number);
            } else {
                lower.emplace_back(line);
            }
            break;
        }
    }
    if (state != State::Outside)
        throw MalformedFormat("begin marker without an end marker", begin_line);
    flush_common();
    return doc;
}

TokenSeq reconstruct_first(const MergedDocument& doc)
{
    TokenSeq seq;
    seq.granularity = doc.granularity;
    for (const auto& segment : doc.segments) {
        const auto& tokens = segment.kind == Segment::Kind::Common ? segment.common : segment.upper;
        seq.tokens.insert(seq.tokens.end(), tokens.begin(), tokens.end());
    }
    return seq;
}

TokenSeq reconstruct_second(const MergedDocument& doc)
{
    TokenSeq seq;
    seq.granularity = doc.granularity;
    for (const auto& segment : doc.segments) {
        const auto& tokens = segment.kind == Segment::Kind::Common ? segment.common : segment.lower;
        seq.tokens.insert(seq.tokens.end(), tokens.begin(), tokens.end());
    }
    return seq;
}

} // namespace mdiff

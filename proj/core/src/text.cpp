#include <mdiff/text.hpp>

#include <mdiff/errors.hpp>
#include <mdiff/merged.hpp>

namespace mdiff {

bool is_reserved_marker(std::string_view line)
{
    if (line == markers::begin || line == markers::separator || line == markers::end)
        return true;
    // The x-marked separator is parsed as a marker too, so it is equally reserved.
    if ((line.starts_with('x') || line.starts_with('X')) && line.substr(1) == markers::separator)
        return true;
    return false;
}

TokenSeq tokenize_lines(std::string_view text)
{
    TokenSeq seq;
    seq.granularity = Granularity::Line;

    std::size_t pos = 0;
    std::size_t line_number = 0;
    while (pos < text.size()) {
        ++line_number;
        std::size_t nl = text.find('\n', pos);
        std::string_view line = (nl == std::string_view::npos)
            ? text.substr(pos)
            : text.substr(pos, nl - pos);
        if (line.ends_with('\r'))
            line.remove_suffix(1);
        if (is_reserved_marker(line))
            throw MarkerCollision(std::string(line), line_number);
        seq.tokens.emplace_back(line);
        if (nl == std::string_view::npos)
            break;
        pos = nl + 1;
    }
    return seq;
}

namespace {

// Whitespace for word splitting: ASCII whitespace plus the Unicode spaces
// most likely to appear in text data (NBSP, ideographic space).
bool is_space_byte(unsigned char c)
{
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Returns the byte length of a whitespace code point starting at `i`, or 0.
std::size_t space_length(std::string_view s, std::size_t i)
{
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 0x80)
        return is_space_byte(c) ? 1 : 0;
    // U+00A0 NO-BREAK SPACE: C2 A0
    if (c == 0xC2 && i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0xA0)
        return 2;
    // U+3000 IDEOGRAPHIC SPACE: E3 80 80
    if (c == 0xE3 && i + 2 < s.size()
        && static_cast<unsigned char>(s[i + 1]) == 0x80
        && static_cast<unsigned char>(s[i + 2]) == 0x80)
        return 3;
    return 0;
}

} // namespace

TokenSeq tokenize_words(std::string_view text)
{
    TokenSeq seq;
    seq.granularity = Granularity::Word;

    std::size_t i = 0;
    std::size_t word_number = 0;
    while (i < text.size()) {
        std::size_t skip = space_length(text, i);
        if (skip > 0) {
            i += skip;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && space_length(text, i) == 0)
            ++i;
        std::string_view word = text.substr(start, i - start);
        ++word_number;
        if (is_reserved_marker(word))
            throw MarkerCollision(std::string(word), word_number);
        seq.tokens.emplace_back(word);
    }
    return seq;
}

std::string detokenize(const TokenSeq& seq)
{
    const char sep = seq.granularity == Granularity::Line ? '\n' : ' ';
    std::string out;
    for (std::size_t i = 0; i < seq.tokens.size(); ++i) {
        if (i > 0)
            out += sep;
        out += seq.tokens[i];
    }
    return out;
}

std::size_t character_count(std::string_view text)
{
    std::size_t n = 0;
    for (unsigned char c : text) {
        if ((c & 0xC0) != 0x80) // skip UTF-8 continuation bytes
            ++n;
    }
    return n;
}

} // namespace mdiff

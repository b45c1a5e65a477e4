#pragma once

#include <mdiff/text.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

// Independent LCS oracle: full O(nm) dynamic-programming table, kept apart
// from the library's diff path on purpose.
inline std::size_t lcs_oracle(const std::vector<std::string>& a, const std::vector<std::string>& b)
{
    std::vector<std::vector<std::size_t>> table(a.size() + 1, std::vector<std::size_t>(b.size() + 1, 0));
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            if (a[i - 1] == b[j - 1])
                table[i][j] = table[i - 1][j - 1] + 1;
            else
                table[i][j] = std::max(table[i - 1][j], table[i][j - 1]);
        }
    }
    return table[a.size()][b.size()];
}

inline mdiff::TokenSeq random_seq(std::mt19937& rng, std::size_t max_len, std::size_t alphabet,
    mdiff::Granularity granularity = mdiff::Granularity::Line)
{
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<std::size_t> sym_dist(0, alphabet - 1);
    mdiff::TokenSeq seq;
    seq.granularity = granularity;
    const std::size_t len = len_dist(rng);
    for (std::size_t i = 0; i < len; ++i)
        seq.tokens.push_back(std::string(1, static_cast<char>('a' + sym_dist(rng))));
    return seq;
}

inline std::vector<std::string> tokens(std::initializer_list<const char*> list)
{
    return { list.begin(), list.end() };
}

inline mdiff::TokenSeq seq(std::initializer_list<const char*> list,
    mdiff::Granularity granularity = mdiff::Granularity::Line)
{
    return { { list.begin(), list.end() }, granularity };
}

} // namespace testsupport

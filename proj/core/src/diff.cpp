#include <mdiff/diff.hpp>

#include <mdiff/errors.hpp>

#include <algorithm>
#include <cassert>
#include <utility>

namespace mdiff {

std::size_t EditScript::keep_count() const
{
    std::size_t n = 0;
    for (const auto& hunk : hunks) {
        if (hunk.kind == HunkKind::Keep)
            n += hunk.tokens.size();
    }
    return n;
}

namespace {

// Myers O(ND) greedy shortest-edit-script search. Returns the matched
// index pairs (i in a, j in b), strictly increasing in both coordinates.
// Ties between equal-cost paths take the deletion first, which is the
// canonical forward-scan choice.
std::vector<std::pair<int, int>> myers_matches(const std::vector<Token>& a, const std::vector<Token>& b)
{
    const int n = static_cast<int>(a.size());
    const int m = static_cast<int>(b.size());
    const int max_d = n + m;

    std::vector<int> v(2 * max_d + 1, 0);
    auto furthest = [&](int k) -> int& { return v[k + max_d]; };

    // trace[d] holds the furthest-x values for k = -d, -d+2, ..., d.
    std::vector<std::vector<int>> trace;
    int final_d = -1;
    for (int d = 0; d <= max_d && final_d < 0; ++d) {
        auto& row = trace.emplace_back();
        row.reserve(d + 1);
        for (int k = -d; k <= d; k += 2) {
            int x;
            if (k == -d || (k != d && furthest(k - 1) < furthest(k + 1)))
                x = furthest(k + 1);
            else
                x = furthest(k - 1) + 1;
            int y = x - k;
            while (x < n && y < m && a[x] == b[y]) {
                ++x;
                ++y;
            }
            furthest(k) = x;
            row.push_back(x);
            if (x >= n && y >= m) {
                final_d = d;
                break;
            }
        }
    }
    assert(final_d >= 0);

    std::vector<std::pair<int, int>> matches;
    int x = n;
    int y = m;
    for (int d = final_d; d > 0; --d) {
        const int k = x - y;
        const auto& prev = trace[d - 1];
        auto prev_x_at = [&](int kk) { return prev[(kk + d - 1) / 2]; };

        int prev_k;
        if (k == -d || (k != d && prev_x_at(k - 1) < prev_x_at(k + 1)))
            prev_k = k + 1; // vertical step: insertion from b
        else
            prev_k = k - 1; // horizontal step: deletion from a

        const int px = prev_x_at(prev_k);
        const int py = px - prev_k;
        const int snake_x = (prev_k == k - 1) ? px + 1 : px;
        const int snake_y = snake_x - k;
        while (x > snake_x && y > snake_y) {
            --x;
            --y;
            matches.emplace_back(x, y);
        }
        x = px;
        y = py;
    }
    while (x > 0 && y > 0) { // leading snake at d == 0
        --x;
        --y;
        matches.emplace_back(x, y);
    }
    std::reverse(matches.begin(), matches.end());
    return matches;
}

void require_same_granularity(const TokenSeq& a, const TokenSeq& b)
{
    if (a.granularity != b.granularity)
        throw GranularityMismatch();
}

} // namespace

EditScript diff(const TokenSeq& a, const TokenSeq& b)
{
    require_same_granularity(a, b);

    const auto& ta = a.tokens;
    const auto& tb = b.tokens;
    const auto matches = myers_matches(ta, tb);

    EditScript script;
    script.len_a = ta.size();
    script.len_b = tb.size();

    auto emit = [&](HunkKind kind, std::vector<Token> tokens) {
        if (!tokens.empty())
            script.hunks.push_back({ kind, std::move(tokens) });
    };

    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t p = 0;
    while (p < matches.size()) {
        const auto mi = static_cast<std::size_t>(matches[p].first);
        const auto mj = static_cast<std::size_t>(matches[p].second);
        emit(HunkKind::Delete, { ta.begin() + i, ta.begin() + mi });
        emit(HunkKind::Insert, { tb.begin() + j, tb.begin() + mj });
        i = mi;
        j = mj;
        std::vector<Token> kept;
        while (p < matches.size()
            && static_cast<std::size_t>(matches[p].first) == i
            && static_cast<std::size_t>(matches[p].second) == j) {
            kept.push_back(ta[i]);
            ++i;
            ++j;
            ++p;
        }
        emit(HunkKind::Keep, std::move(kept));
    }
    emit(HunkKind::Delete, { ta.begin() + i, ta.end() });
    emit(HunkKind::Insert, { tb.begin() + j, tb.end() });
    return script;
}

std::size_t lcs_length(const TokenSeq& a, const TokenSeq& b)
{
    const auto& ta = a.tokens;
    const auto& tb = b.tokens;
    std::vector<std::size_t> prev(tb.size() + 1, 0);
    std::vector<std::size_t> curr(tb.size() + 1, 0);
    for (std::size_t i = 1; i <= ta.size(); ++i) {
        for (std::size_t j = 1; j <= tb.size(); ++j) {
            if (ta[i - 1] == tb[j - 1])
                curr[j] = prev[j - 1] + 1;
            else
                curr[j] = std::max(prev[j], curr[j - 1]);
        }
        std::swap(prev, curr);
    }
    return prev[tb.size()];
}

std::vector<ThreeWayRegion> diff3(const TokenSeq& a, const TokenSeq& b, const TokenSeq& c)
{
    require_same_granularity(a, b);
    require_same_granularity(a, c);

    const auto& ta = a.tokens;
    const auto& tb = b.tokens;
    const auto& tc = c.tokens;
    const std::size_t n = ta.size();
    const std::size_t m = tb.size();
    const std::size_t l = tc.size();

    // Map each index of a to its match in b and in c (-1 when unmatched).
    std::vector<int> to_b(n, -1);
    std::vector<int> to_c(n, -1);
    for (const auto& [i, j] : myers_matches(ta, tb))
        to_b[i] = j;
    for (const auto& [i, k] : myers_matches(ta, tc))
        to_c[i] = k;

    std::vector<ThreeWayRegion> regions;
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    auto aligned = [&](std::size_t idx) {
        return to_b[idx] == static_cast<int>(j) && to_c[idx] == static_cast<int>(k);
    };
    while (i < n || j < m || k < l) {
        if (i < n && aligned(i)) {
            std::vector<Token> run;
            while (i < n && aligned(i)) {
                run.push_back(ta[i]);
                ++i;
                ++j;
                ++k;
            }
            regions.push_back({ ThreeWayRegion::Kind::Agree, run, run, run });
            continue;
        }
        // Scan forward to the next index of a matched in both b and c; it
        // anchors the end of the disagreeing region.
        std::size_t next = i;
        while (next < n && (to_b[next] < 0 || to_c[next] < 0))
            ++next;
        const std::size_t j_end = next < n ? static_cast<std::size_t>(to_b[next]) : m;
        const std::size_t k_end = next < n ? static_cast<std::size_t>(to_c[next]) : l;
        regions.push_back({ ThreeWayRegion::Kind::Disagree,
            { ta.begin() + i, ta.begin() + next },
            { tb.begin() + j, tb.begin() + j_end },
            { tc.begin() + k, tc.begin() + k_end } });
        i = next;
        j = j_end;
        k = k_end;
    }
    return regions;
}

} // namespace mdiff

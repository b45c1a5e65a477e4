#pragma once

#include <mdiff/merged.hpp>
#include <mdiff/text.hpp>

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mdiff {

// A difference harvested from a merged document, with up to k tokens of
// surrounding common context for human inspection.
struct DifferencePair {
    std::vector<Token> source; // upper side
    std::vector<Token> target; // lower side
    std::vector<Token> left_context;
    std::vector<Token> right_context;

    bool operator==(const DifferencePair&) const = default;
};

enum class Direction {
    FirstToSecond,
    SecondToFirst,
};

// Rewrite rules keyed by (source, target) token sequences with occurrence
// counts. Immutable after aggregation.
struct RuleSet {
    using Key = std::pair<std::vector<Token>, std::vector<Token>>;

    Direction direction = Direction::FirstToSecond;
    std::map<Key, std::size_t> counts;

    bool operator==(const RuleSet&) const = default;
};

// Human-readable identifier for a rule, e.g. `performed -> done`.
std::string rule_id(const std::vector<Token>& source, const std::vector<Token>& target);

// One pair per Difference segment, in document order; contexts are clipped
// to at most k tokens of the adjacent Common segments.
std::vector<DifferencePair> extract_pairs(const MergedDocument& doc, std::size_t k = 2);

// Groups pairs by (source, target), ignoring context. SecondToFirst swaps
// the orientation of every rule.
RuleSet aggregate(const std::vector<DifferencePair>& pairs, Direction direction);

struct RuleCandidate {
    TokenSeq seq;
    std::string rule;

    bool operator==(const RuleCandidate&) const = default;
};

// All single rule applications to `seq`: each candidate replaces one
// occurrence of a rule's source span by its target. Insertion rules
// (empty source) are never applied. When `position` is given, only spans
// starting there are considered.
std::vector<RuleCandidate> apply_rules(const TokenSeq& seq, const RuleSet& rules,
    std::optional<std::size_t> position = std::nullopt);

// TSV persistence: "source<TAB>target<TAB>count" per line, tokens joined
// by single spaces, empty side as an empty field.
void write_rules(std::ostream& out, const RuleSet& rules);
RuleSet read_rules(std::istream& in, Direction direction = Direction::FirstToSecond);

} // namespace mdiff

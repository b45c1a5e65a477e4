#pragma once

#include <mdiff/merged.hpp>
#include <mdiff/rules.hpp>
#include <mdiff/text.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace mdiff {

inline const std::vector<std::string> default_interrogatives = {
    "where", "who", "what", "when", "which", "whom", "whose"
};

inline constexpr std::string_view placeholder_token = "X";

// Word-tokenized question with the interrogative replaced by the
// placeholder and the trailing '?' turned into '.'.
struct PreparedQuestion {
    TokenSeq tokens;
    std::string original;

    bool operator==(const PreparedQuestion&) const = default;
};

// Character-overlap similarity: common-segment characters over all
// characters (common counted once, plus both difference sides).
struct SimilarityScore {
    double value = 1.0;
    std::size_t common_chars = 0;
    std::size_t total_chars = 0;

    bool operator==(const SimilarityScore&) const = default;
};

struct QaResult {
    std::vector<Token> answer;
    std::string knowledge_sentence;
    SimilarityScore score;
    std::vector<std::string> applied_rules;
    MergedDocument merged;
};

// Throws NoInterrogative / MultipleInterrogatives / NoQuestionMark.
// Interrogatives are matched case-insensitively (ASCII).
PreparedQuestion prepare_question(const std::string& question,
    const std::vector<std::string>& interrogatives = default_interrogatives);

SimilarityScore similarity(const TokenSeq& a, const TokenSeq& b);

// The lower side of the unique difference whose upper side is exactly the
// placeholder. Throws NoPlaceholderDifference or AmbiguousPlaceholder.
std::vector<Token> extract_answer(const MergedDocument& doc, const Token& placeholder = Token(placeholder_token));

// Best-match question answering: for each knowledge sentence, greedily
// apply the single rule application (to either sentence) that most
// improves similarity, up to max_steps times, and return the result for
// the best-scoring sentence with a clean placeholder difference.
QaResult answer(const std::string& question, const std::vector<std::string>& knowledge,
    const RuleSet& rules, std::size_t max_steps = 5,
    const std::vector<std::string>& interrogatives = default_interrogatives);

} // namespace mdiff

#include <mdiff/qa.hpp>

#include <mdiff/errors.hpp>

#include <algorithm>
#include <cctype>
#include <optional>
#include <utility>

namespace mdiff {

namespace {

    std::string ascii_lower(std::string_view s)
    {
        std::string out(s);
        for (char& c : out)
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return out;
    }

    std::size_t token_chars(const std::vector<Token>& tokens)
    {
        std::size_t n = 0;
        for (const auto& token : tokens)
            n += character_count(token);
        return n;
    }

} // namespace

PreparedQuestion prepare_question(const std::string& question,
    const std::vector<std::string>& interrogatives)
{
    TokenSeq words = tokenize_words(question);
    if (words.empty() || !words.tokens.back().ends_with('?'))
        throw NoQuestionMark();

    std::size_t found = 0;
    std::size_t index = 0;
    for (std::size_t i = 0; i < words.tokens.size(); ++i) {
        const std::string lowered = ascii_lower(words.tokens[i]);
        if (std::find(interrogatives.begin(), interrogatives.end(), lowered) != interrogatives.end()) {
            ++found;
            index = i;
        }
    }
    if (found == 0)
        throw NoInterrogative();
    if (found > 1)
        throw MultipleInterrogatives();

    words.tokens[index] = Token(placeholder_token);
    words.tokens.back().back() = '.';
    return { std::move(words), question };
}

SimilarityScore similarity(const TokenSeq& a, const TokenSeq& b)
{
    const MergedDocument doc = merge(a, b);

    SimilarityScore score;
    for (const auto& segment : doc.segments) {
        if (segment.kind == Segment::Kind::Common) {
            score.common_chars += token_chars(segment.common);
        } else {
            score.total_chars += token_chars(segment.upper);
            score.total_chars += token_chars(segment.lower);
        }
    }
    score.total_chars += score.common_chars;
    score.value = score.total_chars > 0
        ? static_cast<double>(score.common_chars) / static_cast<double>(score.total_chars)
        : 1.0;
    return score;
}

std::vector<Token> extract_answer(const MergedDocument& doc, const Token& placeholder)
{
    const std::vector<Token> wanted = { placeholder };
    const Segment* match = nullptr;
    for (const auto& segment : doc.segments) {
        if (segment.kind != Segment::Kind::Difference || segment.upper != wanted)
            continue;
        if (match)
            throw AmbiguousPlaceholder();
        match = &segment;
    }
    if (!match)
        throw NoPlaceholderDifference();
    return match->lower;
}

QaResult answer(const std::string& question, const std::vector<std::string>& knowledge,
    const RuleSet& rules, std::size_t max_steps,
    const std::vector<std::string>& interrogatives)
{
    const PreparedQuestion prepared = prepare_question(question, interrogatives);

    std::optional<QaResult> best;
    for (const auto& sentence : knowledge) {
        TokenSeq q = prepared.tokens;
        TokenSeq k = tokenize_words(sentence);
        SimilarityScore score = similarity(q, k);
        std::vector<std::string> applied;

        // Greedy hill climbing: one rule application per step, to either
        // sentence, accepted only when it strictly improves similarity.
        for (std::size_t step = 0; step < max_steps; ++step) {
            SimilarityScore best_score = score;
            std::optional<std::pair<bool, RuleCandidate>> best_move; // first: applies to q
            for (auto& candidate : apply_rules(q, rules)) {
                const SimilarityScore s = similarity(candidate.seq, k);
                if (s.value > best_score.value) {
                    best_score = s;
                    best_move = { true, std::move(candidate) };
                }
            }
            for (auto& candidate : apply_rules(k, rules)) {
                const SimilarityScore s = similarity(q, candidate.seq);
                if (s.value > best_score.value) {
                    best_score = s;
                    best_move = { false, std::move(candidate) };
                }
            }
            if (!best_move)
                break;
            auto& [to_question, candidate] = *best_move;
            (to_question ? q : k) = std::move(candidate.seq);
            applied.push_back(std::move(candidate.rule));
            score = best_score;
        }

        if (best && score.value <= best->score.value)
            continue; // earlier sentence wins ties
        MergedDocument doc = merge(q, k);
        try {
            std::vector<Token> ans = extract_answer(doc);
            best = QaResult { std::move(ans), sentence, score, std::move(applied), std::move(doc) };
        } catch (const Error&) {
            // placeholder absorbed or missing; this sentence cannot answer
        }
    }
    if (!best)
        throw NoAnswer();
    return *std::move(best);
}

} // namespace mdiff

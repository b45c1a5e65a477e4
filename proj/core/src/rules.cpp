#include <mdiff/rules.hpp>

#include <mdiff/errors.hpp>

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace mdiff {

namespace {

    std::string join_tokens(const std::vector<Token>& tokens)
    {
        std::string out;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (i > 0)
                out += ' ';
            out += tokens[i];
        }
        return out;
    }

    std::vector<Token> split_tokens(const std::string& field)
    {
        std::vector<Token> tokens;
        std::istringstream stream(field);
        std::string token;
        while (stream >> token)
            tokens.push_back(token);
        return tokens;
    }

} // namespace

std::string rule_id(const std::vector<Token>& source, const std::vector<Token>& target)
{
    return join_tokens(source) + " -> " + join_tokens(target);
}

std::vector<DifferencePair> extract_pairs(const MergedDocument& doc, std::size_t k)
{
    std::vector<DifferencePair> pairs;
    const auto& segments = doc.segments;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (segments[i].kind != Segment::Kind::Difference)
            continue;
        DifferencePair pair;
        pair.source = segments[i].upper;
        pair.target = segments[i].lower;
        if (i > 0 && segments[i - 1].kind == Segment::Kind::Common) {
            const auto& prev = segments[i - 1].common;
            const std::size_t take = std::min(k, prev.size());
            pair.left_context.assign(prev.end() - take, prev.end());
        }
        if (i + 1 < segments.size() && segments[i + 1].kind == Segment::Kind::Common) {
            const auto& next = segments[i + 1].common;
            const std::size_t take = std::min(k, next.size());
            pair.right_context.assign(next.begin(), next.begin() + take);
        }
        pairs.push_back(std::move(pair));
    }
    return pairs;
}

RuleSet aggregate(const std::vector<DifferencePair>& pairs, Direction direction)
{
    RuleSet rules;
    rules.direction = direction;
    for (const auto& pair : pairs) {
        auto key = direction == Direction::FirstToSecond
            ? RuleSet::Key { pair.source, pair.target }
            : RuleSet::Key { pair.target, pair.source };
        ++rules.counts[std::move(key)];
    }
    return rules;
}

std::vector<RuleCandidate> apply_rules(const TokenSeq& seq, const RuleSet& rules,
    std::optional<std::size_t> position)
{
    std::vector<RuleCandidate> candidates;
    const auto& tokens = seq.tokens;
    for (const auto& [key, count] : rules.counts) {
        const auto& [source, target] = key;
        if (source.empty())
            continue; // insertion rules are reported but never applied
        if (source.size() > tokens.size())
            continue;
        const std::size_t last_start = tokens.size() - source.size();
        for (std::size_t start = 0; start <= last_start; ++start) {
            if (position && *position != start)
                continue;
            if (!std::equal(source.begin(), source.end(), tokens.begin() + start))
                continue;
            RuleCandidate candidate;
            candidate.seq.granularity = seq.granularity;
            auto& out = candidate.seq.tokens;
            out.assign(tokens.begin(), tokens.begin() + start);
            out.insert(out.end(), target.begin(), target.end());
            out.insert(out.end(), tokens.begin() + start + source.size(), tokens.end());
            candidate.rule = rule_id(source, target);
            candidates.push_back(std::move(candidate));
        }
    }
    return candidates;
}

void write_rules(std::ostream& out, const RuleSet& rules)
{
    for (const auto& [key, count] : rules.counts)
        out << join_tokens(key.first) << '\t' << join_tokens(key.second) << '\t' << count << '\n';
}

RuleSet read_rules(std::istream& in, Direction direction)
{
    RuleSet rules;
    rules.direction = direction;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.ends_with('\r'))
            line.pop_back();
        if (line.empty())
            continue;
        const std::size_t tab1 = line.find('\t');
        if (tab1 == std::string::npos)
            throw Error("rule file: missing tab on line " + std::to_string(line_number));
        const std::size_t tab2 = line.find('\t', tab1 + 1);
        const std::string source_field = line.substr(0, tab1);
        const std::string target_field = tab2 == std::string::npos
            ? line.substr(tab1 + 1)
            : line.substr(tab1 + 1, tab2 - tab1 - 1);
        std::size_t count = 1;
        if (tab2 != std::string::npos) {
            try {
                count = std::stoull(line.substr(tab2 + 1));
            } catch (const std::exception&) {
                throw Error("rule file: bad count on line " + std::to_string(line_number));
            }
        }
        rules.counts[{ split_tokens(source_field), split_tokens(target_field) }] += count;
    }
    return rules;
}

} // namespace mdiff

#include <mdiff/align.hpp>
#include <mdiff/combine.hpp>
#include <mdiff/diff.hpp>
#include <mdiff/errors.hpp>
#include <mdiff/merged.hpp>
#include <mdiff/qa.hpp>
#include <mdiff/rules.hpp>
#include <mdiff/text.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_differences = 1;
constexpr int exit_error = 2;

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw mdiff::Error(path + ": cannot open file");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

mdiff::TokenSeq load_tokens(const std::string& path, bool words)
{
    const std::string text = read_input(path);
    try {
        return words ? mdiff::tokenize_words(text) : mdiff::tokenize_lines(text);
    } catch (const mdiff::MarkerCollision& e) {
        throw mdiff::Error(path + ":" + std::to_string(e.line_number) + ": " + e.what());
    }
}

mdiff::MergedDocument load_merged(const std::string& path, bool words)
{
    const std::string text = read_input(path);
    const auto granularity = words ? mdiff::Granularity::Word : mdiff::Granularity::Line;
    try {
        return mdiff::parse(text, granularity);
    } catch (const mdiff::MalformedFormat& e) {
        throw mdiff::Error(path + ":" + std::to_string(e.line_number) + ": " + e.what());
    }
}

void write_token_lines(std::ostream& out, const mdiff::TokenSeq& seq)
{
    for (const auto& token : seq.tokens)
        out << token << '\n';
}

// Line mode writes one token per line; word mode writes a single
// space-joined line. Empty sequences produce no output at all.
void write_sequence(std::ostream& out, const mdiff::TokenSeq& seq)
{
    if (seq.tokens.empty())
        return;
    if (seq.granularity == mdiff::Granularity::Line)
        write_token_lines(out, seq);
    else
        out << mdiff::detokenize(seq) << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app { "Token-level diff toolkit built around the merged-difference format" };
    app.require_subcommand(1);

    bool words = false;
    std::string file_a, file_b, file_c;
    std::string direction = "first-to-second";
    std::size_t context = 2;
    std::string output_path;
    std::string tag_open = "<";
    std::string tag_close = ">";
    std::string kb_path, rules_path, question;
    std::size_t max_steps = 5;
    bool reconstruct_first = false;
    bool reconstruct_second = false;

    auto* tokenize_cmd = app.add_subcommand("tokenize", "Print one token per line");
    tokenize_cmd->add_option("file", file_a, "input file or -")->required();
    tokenize_cmd->add_flag("--words", words, "split into words instead of lines");

    auto* diff_cmd = app.add_subcommand("diff", "Show differences as </> lines");
    diff_cmd->add_option("first", file_a)->required();
    diff_cmd->add_option("second", file_b)->required();
    diff_cmd->add_flag("--words", words, "compare word tokens");

    auto* mdiff_cmd = app.add_subcommand("mdiff", "Merge two files into the marked difference format");
    mdiff_cmd->add_option("first", file_a)->required();
    mdiff_cmd->add_option("second", file_b)->required();
    mdiff_cmd->add_flag("--words", words, "compare word tokens");

    auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Recover an original file from a merged document");
    reconstruct_cmd->add_option("file", file_a, "merged document or -")->required();
    reconstruct_cmd->add_flag("--first", reconstruct_first, "recover the first input");
    reconstruct_cmd->add_flag("--second", reconstruct_second, "recover the second input");
    reconstruct_cmd->add_flag("--words", words, "treat tokens as words");

    auto* resolve_cmd = app.add_subcommand("resolve", "Apply x-marks: keep upper sides unless marked");
    resolve_cmd->add_option("file", file_a, "merged document or -")->required();
    resolve_cmd->add_flag("--words", words, "treat tokens as words");

    auto* diff3_cmd = app.add_subcommand("diff3", "Three-way agreement report");
    diff3_cmd->add_option("first", file_a)->required();
    diff3_cmd->add_option("second", file_b)->required();
    diff3_cmd->add_option("third", file_c)->required();
    diff3_cmd->add_flag("--words", words, "compare word tokens");

    auto* rules_cmd = app.add_subcommand("extract-rules", "Harvest rewrite rules from a merged document");
    rules_cmd->add_option("file", file_a, "merged document or -")->required();
    rules_cmd->add_option("--direction", direction, "first-to-second or second-to-first")
        ->check(CLI::IsMember({ "first-to-second", "second-to-first" }));
    rules_cmd->add_option("--context,-k", context, "context width kept on extracted pairs");
    rules_cmd->add_option("--output,-o", output_path, "rule TSV output file (default stdout)");
    rules_cmd->add_flag("--words", words, "treat tokens as words");

    auto* align_cmd = app.add_subcommand("align", "Propagate structural tags into a parallel document");
    align_cmd->add_option("tagged", file_a)->required();
    align_cmd->add_option("untagged", file_b)->required();
    align_cmd->add_option("--tag-open", tag_open, "tag token prefix");
    align_cmd->add_option("--tag-close", tag_close, "tag token suffix");
    align_cmd->add_flag("--words", words, "split inputs into words");

    auto* qa_cmd = app.add_subcommand("qa", "Answer a question from a knowledge-base file");
    qa_cmd->add_option("question", question)->required();
    qa_cmd->add_option("--kb", kb_path, "knowledge base, one sentence per line")->required();
    qa_cmd->add_option("--rules", rules_path, "rule TSV file");
    qa_cmd->add_option("--max-steps", max_steps, "rule applications per sentence");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_error;
    }

    try {
        if (tokenize_cmd->parsed()) {
            write_token_lines(std::cout, load_tokens(file_a, words));
            return exit_ok;
        }

        if (diff_cmd->parsed()) {
            const auto script = mdiff::diff(load_tokens(file_a, words), load_tokens(file_b, words));
            std::string out;
            bool changed = false;
            for (const auto& hunk : script.hunks) {
                if (hunk.kind == mdiff::HunkKind::Keep)
                    continue;
                changed = true;
                const char* prefix = hunk.kind == mdiff::HunkKind::Delete ? "< " : "> ";
                for (const auto& token : hunk.tokens)
                    out += prefix + token + '\n';
            }
            std::cout << out;
            return changed ? exit_differences : exit_ok;
        }

        if (mdiff_cmd->parsed()) {
            const auto doc = mdiff::merge(load_tokens(file_a, words), load_tokens(file_b, words));
            std::cout << mdiff::render(doc);
            const bool changed = std::any_of(doc.segments.begin(), doc.segments.end(),
                [](const mdiff::Segment& s) { return s.kind == mdiff::Segment::Kind::Difference; });
            return changed ? exit_differences : exit_ok;
        }

        if (reconstruct_cmd->parsed()) {
            if (reconstruct_first == reconstruct_second)
                throw mdiff::Error("reconstruct: pass exactly one of --first / --second");
            const auto doc = load_merged(file_a, words);
            write_sequence(std::cout, reconstruct_first ? mdiff::reconstruct_first(doc)
                                                        : mdiff::reconstruct_second(doc));
            return exit_ok;
        }

        if (resolve_cmd->parsed()) {
            write_sequence(std::cout, mdiff::resolve(load_merged(file_a, words)));
            return exit_ok;
        }

        if (diff3_cmd->parsed()) {
            const auto a = load_tokens(file_a, words);
            const auto b = load_tokens(file_b, words);
            const auto c = load_tokens(file_c, words);
            for (const auto& region : mdiff::diff3(a, b, c)) {
                if (region.kind == mdiff::ThreeWayRegion::Kind::Agree) {
                    for (const auto& token : region.a)
                        std::cout << "  " << token << '\n';
                } else {
                    std::cout << "<<< first\n";
                    for (const auto& token : region.a)
                        std::cout << "  " << token << '\n';
                    std::cout << "||| second\n";
                    for (const auto& token : region.b)
                        std::cout << "  " << token << '\n';
                    std::cout << "||| third\n";
                    for (const auto& token : region.c)
                        std::cout << "  " << token << '\n';
                    std::cout << ">>>\n";
                }
            }
            const auto report = mdiff::agreement_report(a, b, c);
            std::cout << "agree: " << report.agree_regions << " regions, "
                      << report.agree_tokens << " tokens\n"
                      << "disagree: " << report.disagree_regions << " regions, a="
                      << report.disagree_tokens_a << " b=" << report.disagree_tokens_b
                      << " c=" << report.disagree_tokens_c << " tokens\n";
            return report.disagree_regions == 0 ? exit_ok : exit_differences;
        }

        if (rules_cmd->parsed()) {
            const auto doc = load_merged(file_a, words);
            const auto pairs = mdiff::extract_pairs(doc, context);
            const auto dir = direction == "first-to-second"
                ? mdiff::Direction::FirstToSecond
                : mdiff::Direction::SecondToFirst;
            const auto rules = mdiff::aggregate(pairs, dir);
            if (output_path.empty()) {
                mdiff::write_rules(std::cout, rules);
            } else {
                std::ofstream out(output_path, std::ios::binary);
                if (!out)
                    throw mdiff::Error(output_path + ": cannot open for writing");
                mdiff::write_rules(out, rules);
            }
            return exit_ok;
        }

        if (align_cmd->parsed()) {
            const mdiff::TagPattern pattern { tag_open, tag_close };
            const auto tagged = load_tokens(file_a, words);
            const auto untagged = load_tokens(file_b, words);
            if (const auto stray = mdiff::count_tags(untagged, pattern); stray > 0)
                std::cerr << "warning: " << stray << " tag-like token(s) in the untagged input; "
                          << "tag positions may be unreliable\n";
            write_token_lines(std::cout, mdiff::propagate_tags(tagged, untagged, pattern));
            return exit_ok;
        }

        if (qa_cmd->parsed()) {
            std::vector<std::string> kb;
            {
                std::istringstream stream(read_input(kb_path));
                std::string line;
                while (std::getline(stream, line)) {
                    if (line.ends_with('\r'))
                        line.pop_back();
                    if (!line.empty())
                        kb.push_back(line);
                }
            }
            mdiff::RuleSet rules;
            if (!rules_path.empty()) {
                std::istringstream stream(read_input(rules_path));
                rules = mdiff::read_rules(stream);
            }
            const auto result = mdiff::answer(question, kb, rules, max_steps);
            mdiff::TokenSeq answer_seq { result.answer, mdiff::Granularity::Word };
            std::cout << mdiff::detokenize(answer_seq) << '\n'
                      << "score: " << result.score.value
                      << " (" << result.score.common_chars << '/' << result.score.total_chars << ")\n";
            for (const auto& rule : result.applied_rules)
                std::cerr << "applied rule: " << rule << '\n';
            return exit_ok;
        }
    } catch (const mdiff::Error& e) {
        std::cerr << "mdiff: " << e.what() << '\n';
        return exit_error;
    } catch (const std::exception& e) {
        std::cerr << "mdiff: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}

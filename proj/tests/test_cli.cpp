#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli_support.hpp"

#ifndef MDIFF_CLI_PATH
#error "MDIFF_CLI_PATH must point at the built binary"
#endif

using clisupport::RunResult;
using clisupport::TempDir;
using clisupport::run;

namespace {

const std::string cli = MDIFF_CLI_PATH;

std::string quoted(const std::string& s)
{
    return "'" + s + "'";
}

} // namespace

TEST_CASE("tokenize splits lines and words")
{
    TempDir dir;
    const auto file = dir.file("in.txt", "I go\nto school.\n");
    CHECK(run(cli + " tokenize " + quoted(file)).output == "I go\nto school.\n");
    const auto words = run(cli + " tokenize --words " + quoted(file));
    CHECK(words.output == "I\ngo\nto\nschool.\n");
    CHECK(words.exit_code == 0);
}

TEST_CASE("diff prints delete/insert lines and exits 1 on differences")
{
    TempDir dir;
    const auto f1 = dir.file("f1", "I\ngo\nto\nschool.\n");
    const auto f2 = dir.file("f2", "I\ngo\nto\nuniversity.\n");
    const auto changed = run(cli + " diff " + quoted(f1) + " " + quoted(f2));
    CHECK(changed.output == "< school.\n> university.\n");
    CHECK(changed.exit_code == 1);

    const auto same = run(cli + " diff " + quoted(f1) + " " + quoted(f1));
    CHECK(same.output.empty());
    CHECK(same.exit_code == 0);
}

TEST_CASE("mdiff of identical files prints the file and exits 0")
{
    TempDir dir;
    const auto f = dir.file("f", "a\nb\nc\n");
    const auto result = run(cli + " mdiff " + quoted(f) + " " + quoted(f));
    CHECK(result.output == "a\nb\nc\n");
    CHECK(result.exit_code == 0);
}

TEST_CASE("mdiff then reconstruct reproduces the originals byte for byte")
{
    TempDir dir;
    const auto f1 = dir.file("f1", "one\ntwo\nthree\nfour\n");
    const auto f2 = dir.file("f2", "one\n2\nthree\n4\nfive\n");
    const auto merged = run(cli + " mdiff " + quoted(f1) + " " + quoted(f2));
    CHECK(merged.exit_code == 1);
    const auto doc = dir.file("out.mdiff", merged.output);
    CHECK(run(cli + " reconstruct --first " + quoted(doc)).output == "one\ntwo\nthree\nfour\n");
    CHECK(run(cli + " reconstruct --second " + quoted(doc)).output == "one\n2\nthree\n4\nfive\n");
}

TEST_CASE("reads stdin when the file argument is -")
{
    TempDir dir;
    const auto f1 = dir.file("f1", "x\ny\n");
    const auto result = run("printf 'x\\nz\\n' | " + cli + " mdiff " + quoted(f1) + " -");
    CHECK(result.exit_code == 1);
    CHECK(result.output.find(";===== begin =====") != std::string::npos);
}

TEST_CASE("resolve honors x-marks written by a worker")
{
    TempDir dir;
    const auto doc = dir.file("marked.mdiff",
        "We\tNoun\n"
        ";===== begin =====\n"
        "like\tVerb\n"
        "x;-----------------\n"
        "like\tPreposition\n"
        ";=====  end  =====\n"
        "apples\tNoun\n");
    const auto result = run(cli + " resolve " + quoted(doc));
    CHECK(result.output == "We\tNoun\nlike\tPreposition\napples\tNoun\n");
    CHECK(result.exit_code == 0);
}

TEST_CASE("diff3 reports agreement and exits by difference status")
{
    TempDir dir;
    const auto f1 = dir.file("f1", "a\nb\n");
    const auto f2 = dir.file("f2", "a\nb\n");
    const auto f3 = dir.file("f3", "a\nc\n");
    const auto result = run(cli + " diff3 " + quoted(f1) + " " + quoted(f2) + " " + quoted(f3));
    CHECK(result.exit_code == 1);
    CHECK(result.output.find("agree: 1 regions, 1 tokens") != std::string::npos);
    CHECK(result.output.find("disagree: 1 regions, a=1 b=1 c=1 tokens") != std::string::npos);

    const auto same = run(cli + " diff3 " + quoted(f1) + " " + quoted(f2) + " " + quoted(f2));
    CHECK(same.exit_code == 0);
}

TEST_CASE("extract-rules writes a TSV rule file")
{
    TempDir dir;
    const auto f1 = dir.file("f1", "sorting\nis\nperformed\nby\n");
    const auto f2 = dir.file("f2", "sorting\nis\ndone\nby\n");
    const auto merged = run(cli + " mdiff " + quoted(f1) + " " + quoted(f2));
    const auto doc = dir.file("out.mdiff", merged.output);
    const auto rules = run(cli + " extract-rules " + quoted(doc));
    CHECK(rules.output == "performed\tdone\t1\n");
    CHECK(rules.exit_code == 0);
}

TEST_CASE("align interleaves chapter tags into the presentation")
{
    TempDir dir;
    const auto paper = dir.file("paper",
        "<Chapter 1>\nthe\nmeaning\nsort\n</Chapter 1>\n<Chapter 2>\nsorting\nmethods\n</Chapter 2>\n");
    const auto talk = dir.file("talk", "today\nthe\nmeaning\nsort\nsorting\nis\nfun\n");
    const auto result = run(cli + " align " + quoted(paper) + " " + quoted(talk));
    CHECK(result.exit_code == 0);
    CHECK(result.output == "<Chapter 1>\ntoday\nthe\nmeaning\nsort\n</Chapter 1>\n<Chapter 2>\nsorting\n</Chapter 2>\nis\nfun\n");
}

TEST_CASE("qa prints the answer and a score line")
{
    TempDir dir;
    const auto kb = dir.file("kb.txt", "Tokyo is the capital of Japan.\n");
    const auto result = run(cli + " qa --kb " + quoted(kb) + " 'Where is the capital of Japan?'");
    CHECK(result.exit_code == 0);
    CHECK(result.output.substr(0, 6) == "Tokyo\n");
    CHECK(result.output.find("score: ") != std::string::npos);
    CHECK(result.output.find("(20/26)") != std::string::npos);
}

TEST_CASE("usage and format errors exit 2")
{
    TempDir dir;
    CHECK(run(cli + " 2>/dev/null").exit_code == 2);
    CHECK(run(cli + " nonsense 2>/dev/null").exit_code == 2);
    CHECK(run(cli + " mdiff missing-a missing-b 2>/dev/null").exit_code == 2);

    const auto broken = dir.file("broken.mdiff", ";===== begin =====\na\n");
    CHECK(run(cli + " reconstruct --first " + quoted(broken) + " 2>/dev/null").exit_code == 2);

    const auto collision = dir.file("collision", "fine\n;===== begin =====\n");
    CHECK(run(cli + " tokenize " + quoted(collision) + " 2>/dev/null").exit_code == 2);
}

TEST_CASE("mdiff output is deterministic across runs")
{
    TempDir dir;
    const auto f1 = dir.file("f1", "a\nx\nb\ny\nc\n");
    const auto f2 = dir.file("f2", "a\np\nb\nq\nc\nr\n");
    const auto first = run(cli + " mdiff " + quoted(f1) + " " + quoted(f2));
    const auto second = run(cli + " mdiff " + quoted(f1) + " " + quoted(f2));
    CHECK(first.output == second.output);
    CHECK(first.exit_code == second.exit_code);
}

#include <doctest.h>

#include <mdiff/errors.hpp>
#include <mdiff/merged.hpp>
#include <mdiff/text.hpp>

#include "support.hpp"

#include <random>

using namespace mdiff;
using testsupport::seq;

TEST_CASE("tokenize_lines splits on newlines")
{
    CHECK(tokenize_lines("I\ngo\nto\nschool.\n") == seq({ "I", "go", "to", "school." }));
    CHECK(tokenize_lines("") == TokenSeq {});
    CHECK(tokenize_lines("a\n\nb") == seq({ "a", "", "b" }));
}

TEST_CASE("tokenize_lines strips CR and keeps granularity")
{
    const auto s = tokenize_lines("a\r\nb\r\n");
    CHECK(s == seq({ "a", "b" }));
    CHECK(s.granularity == Granularity::Line);
}

TEST_CASE("tokenize_lines rejects reserved marker lines")
{
    CHECK_THROWS_AS(tokenize_lines("ok\n;===== begin =====\n"), MarkerCollision);
    CHECK_THROWS_AS(tokenize_lines(";-----------------"), MarkerCollision);
    CHECK_THROWS_AS(tokenize_lines(";=====  end  ====="), MarkerCollision);
    CHECK_THROWS_AS(tokenize_lines("x;-----------------"), MarkerCollision);
    try {
        tokenize_lines("a\nb\n;===== begin =====\n");
        FAIL("expected MarkerCollision");
    } catch (const MarkerCollision& e) {
        CHECK(e.line_number == 3);
    }
}

TEST_CASE("tokenize_words splits on whitespace runs")
{
    CHECK(tokenize_words("I go to school.") == seq({ "I", "go", "to", "school." }, Granularity::Word));
    CHECK(tokenize_words("   ") == TokenSeq { {}, Granularity::Word });
    CHECK(tokenize_words("Today I'd like to") == seq({ "Today", "I'd", "like", "to" }, Granularity::Word));
    CHECK(tokenize_words(" a\t b\nc ") == seq({ "a", "b", "c" }, Granularity::Word));
}

TEST_CASE("tokenize_words handles non-ASCII whitespace")
{
    // NBSP and ideographic space separate words too
    CHECK(tokenize_words("a\xc2\xa0winter\xe3\x80\x80night")
        == seq({ "a", "winter", "night" }, Granularity::Word));
}

TEST_CASE("detokenize joins by granularity")
{
    CHECK(detokenize(seq({ "I", "go", "to" }, Granularity::Word)) == "I go to");
    CHECK(detokenize(TokenSeq {}) == "");
    CHECK(detokenize(seq({ "a", "", "b" })) == "a\n\nb");
}

TEST_CASE("line tokenization round-trips marker-free text")
{
    std::mt19937 rng(20260826);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = testsupport::random_seq(rng, 30, 8);
        const std::string text = detokenize(s);
        CHECK(tokenize_lines(text) == s);
    }
}

TEST_CASE("word tokenization is idempotent through its canonical form")
{
    for (const char* text : { "a  b\t\tc", " x ", "", "one", "I go  to school." }) {
        const auto once = tokenize_words(text);
        CHECK(tokenize_words(detokenize(once)) == once);
    }
}

TEST_CASE("character_count counts code points")
{
    CHECK(character_count("") == 0);
    CHECK(character_count("Japan.") == 6);
    CHECK(character_count("caf\xc3\xa9") == 4); // café
}

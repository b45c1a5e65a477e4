#pragma once

#include <mdiff/merged.hpp>
#include <mdiff/text.hpp>

#include <cstddef>

namespace mdiff {

// Applies worker marks to a merged document: each difference keeps its
// upper side when unmarked and its lower side when marked with "x".
TokenSeq resolve(const MergedDocument& doc);

struct AgreementReport {
    std::size_t agree_regions = 0;
    std::size_t disagree_regions = 0;
    std::size_t agree_tokens = 0; // per slot; slots are equal in agreement
    std::size_t disagree_tokens_a = 0;
    std::size_t disagree_tokens_b = 0;
    std::size_t disagree_tokens_c = 0;

    bool operator==(const AgreementReport&) const = default;
};

// Summarizes a three-way comparison of system outputs.
AgreementReport agreement_report(const TokenSeq& a, const TokenSeq& b, const TokenSeq& c);

} // namespace mdiff

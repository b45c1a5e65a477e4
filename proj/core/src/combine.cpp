#include <mdiff/combine.hpp>

#include <mdiff/diff.hpp>

namespace mdiff {

TokenSeq resolve(const MergedDocument& doc)
{
    TokenSeq out;
    out.granularity = doc.granularity;
    for (const auto& segment : doc.segments) {
        const auto& chosen = segment.kind == Segment::Kind::Common
            ? segment.common
            : (segment.marked ? segment.lower : segment.upper);
        out.tokens.insert(out.tokens.end(), chosen.begin(), chosen.end());
    }
    return out;
}

AgreementReport agreement_report(const TokenSeq& a, const TokenSeq& b, const TokenSeq& c)
{
    AgreementReport report;
    for (const auto& region : diff3(a, b, c)) {
        if (region.kind == ThreeWayRegion::Kind::Agree) {
            ++report.agree_regions;
            report.agree_tokens += region.a.size();
        } else {
            ++report.disagree_regions;
            report.disagree_tokens_a += region.a.size();
            report.disagree_tokens_b += region.b.size();
            report.disagree_tokens_c += region.c.size();
        }
    }
    return report;
}

} // namespace mdiff

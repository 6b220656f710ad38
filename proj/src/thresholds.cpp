#include "kpan/thresholds.hpp"

#include <stdexcept>

namespace kpan {

namespace {

void require_multipartite(const PartProfile& profile) {
    if (profile.k() < 2) {
        throw std::domain_error("threshold formulas need at least two parts, got " +
                                profile.to_string());
    }
}

std::int64_t halve_exact(std::int64_t numerator, const char* what) {
    if (numerator % 2 != 0) {
        throw std::logic_error(std::string("odd numerator in ") + what);
    }
    return numerator / 2;
}

}  // namespace

std::string_view to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::General: return "General";
        case CaseTag::EvenHalf: return "EvenHalf";
        case CaseTag::OddHalf: return "OddHalf";
        case CaseTag::EvenHalfMinus1: return "EvenHalfMinus1";
        case CaseTag::Inadmissible: return "Inadmissible";
    }
    return "?";
}

std::optional<CaseTag> case_from_string(std::string_view name) {
    for (CaseTag t : {CaseTag::General, CaseTag::EvenHalf, CaseTag::OddHalf,
                      CaseTag::EvenHalfMinus1, CaseTag::Inadmissible}) {
        if (to_string(t) == name) return t;
    }
    return std::nullopt;
}

std::int64_t complete_edge_count(const PartProfile& profile) {
    require_multipartite(profile);
    const std::int64_t p = profile.order();
    std::int64_t twice = 0;
    for (int n : profile.parts()) twice += n * (p - n);
    return halve_exact(twice, "complete_edge_count");
}

std::int64_t max_deletions(const PartProfile& profile) {
    require_multipartite(profile);
    return std::int64_t{profile.order()} - profile.largest() - 2;
}

std::int64_t chorded_threshold(const PartProfile& profile) {
    if (max_deletions(profile) < 0) {
        throw std::domain_error("profile " + profile.to_string() +
                                " has no deletion budget (p - n1 - 2 < 0)");
    }
    const std::int64_t p = profile.order();
    std::int64_t numerator = 4 - 2 * p + 2 * profile.largest();
    for (int n : profile.parts()) numerator += n * (p - n);
    return halve_exact(numerator, "chorded_threshold");
}

std::int64_t balanced_threshold(std::int64_t k, std::int64_t n) {
    if (k < 2 || n < 1) {
        throw std::domain_error("balanced_threshold needs k >= 2 and n >= 1");
    }
    return halve_exact((k * k - k) * n * n - 2 * n * (k - 1) + 4, "balanced_threshold");
}

CaseTag classify_case(const PartProfile& profile) {
    const int p = profile.order();
    const int twice_n1 = 2 * profile.largest();
    if (twice_n1 > p) return CaseTag::Inadmissible;
    if (twice_n1 == p) return CaseTag::EvenHalf;
    if (twice_n1 == p - 1) return CaseTag::OddHalf;
    if (twice_n1 == p - 2) return CaseTag::EvenHalfMinus1;
    return CaseTag::General;
}

ThresholdSheet threshold_sheet(const PartProfile& profile) {
    ThresholdSheet sheet;
    sheet.complete_edges = complete_edge_count(profile);
    sheet.max_deletions = max_deletions(profile);
    if (sheet.max_deletions >= 0) sheet.threshold = chorded_threshold(profile);
    sheet.min_degree_complete = profile.order() - profile.largest();
    sheet.case_tag = classify_case(profile);
    sheet.vacuous = profile.order() < 4;
    return sheet;
}

}  // namespace kpan

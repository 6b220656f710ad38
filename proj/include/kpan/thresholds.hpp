// Closed-form edge counts for chorded pancyclicity of k-partite graphs.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "kpan/graph.hpp"

namespace kpan {

/// Where the largest part sits relative to half the order.
enum class CaseTag {
    General,         // n1 < p/2 - 1
    EvenHalf,        // p even, n1 = p/2
    OddHalf,         // p odd, n1 = (p-1)/2
    EvenHalfMinus1,  // p even, n1 = p/2 - 1
    Inadmissible,    // n1 > p/2: nothing in the class is hamiltonian
};

std::string_view to_string(CaseTag tag);
std::optional<CaseTag> case_from_string(std::string_view name);

/// Profiles must have k >= 2 for every function below.
std::int64_t complete_edge_count(const PartProfile& profile);

/// p - n1 - 2. Negative for profiles such as (1,1) where no deletion budget exists.
std::int64_t max_deletions(const PartProfile& profile);

/// (4 - 2p + 2n1 + sum n_i(p - n_i)) / 2. Throws std::domain_error when
/// max_deletions(profile) < 0.
std::int64_t chorded_threshold(const PartProfile& profile);

/// ((k^2 - k) n^2 - 2n(k - 1) + 4) / 2 for k >= 2, n >= 1.
std::int64_t balanced_threshold(std::int64_t k, std::int64_t n);

CaseTag classify_case(const PartProfile& profile);

struct ThresholdSheet {
    std::int64_t complete_edges = 0;
    std::int64_t max_deletions = 0;
    /// Absent when max_deletions < 0.
    std::optional<std::int64_t> threshold;
    std::int64_t min_degree_complete = 0;
    CaseTag case_tag = CaseTag::General;
    /// Order below 4: chorded pancyclicity asks for no cycle at all.
    bool vacuous = false;
};

ThresholdSheet threshold_sheet(const PartProfile& profile);

}  // namespace kpan

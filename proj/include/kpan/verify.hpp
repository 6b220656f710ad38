// Theorem-verification harness.
//
// A plan enumerates edge-deletion sets of K(profile) of size 0..p-n1-2,
// either exhaustively (sizes ascending, colex order within a size) or by
// seeded sampling, and checks each resulting graph. Records reach the sink in
// rank order whatever the worker count, so output is reproducible.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "kpan/construction.hpp"
#include "kpan/cycle_search.hpp"
#include "kpan/graph.hpp"
#include "kpan/witnesses.hpp"

namespace kpan {

enum class VerifyMode { Exhaustive, Random };

/// Per-graph checks. Construction runs only for the near-half cases.
enum class GraphCheck { ChordedPancyclic, Hamiltonian, Construction };

std::string_view to_string(GraphCheck c);

class PlanError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 5'000'000;

struct VerifyPlan {
    PartProfile profile{1, 1, 1};
    VerifyMode mode = VerifyMode::Exhaustive;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::set<GraphCheck> checks{GraphCheck::ChordedPancyclic, GraphCheck::Hamiltonian,
                                GraphCheck::Construction};
    std::uint64_t budget = kDefaultBudget;
    unsigned workers = 1;
    std::uint64_t cap = kDefaultEnumerationCap;
    bool fail_fast = false;
};

struct VerifyRecord {
    std::uint64_t rank = 0;
    std::vector<Edge> deleted;
    int edge_count = 0;
    bool meets_threshold = false;
    std::optional<PancyclicityReport> chorded;
    std::optional<SearchResult> hamiltonian;
    bool construction_ran = false;
    std::optional<ConstructionResult> construction;
    std::uint64_t expansions = 0;
    /// A threshold-meeting graph that is definitively not chorded pancyclic
    /// or not hamiltonian.
    bool counterexample = false;
    /// Some search ran out of budget.
    bool undecided = false;
    /// A returned certificate failed independent validation.
    bool invalid_certificate = false;
    bool construction_failed = false;
};

using RecordSink = std::function<void(const VerifyRecord&)>;

struct VerifySummary {
    PartProfile profile{1, 1, 1};
    VerifyMode mode = VerifyMode::Exhaustive;
    std::uint64_t expected_graphs = 0;
    std::uint64_t graphs_checked = 0;
    std::uint64_t asserted = 0;
    std::uint64_t counterexamples = 0;
    std::uint64_t undecided = 0;
    std::uint64_t invalid_certificates = 0;
    std::uint64_t construction_failures = 0;
    std::uint64_t certificates = 0;
    std::uint64_t max_expansions = 0;
    std::map<std::string, std::uint64_t> strategies;
    /// Deletion-form documents of every counterexample graph.
    std::vector<nlohmann::json> counterexample_graphs;
    bool aborted = false;
    double wall_seconds = 0.0;

    bool ok() const noexcept {
        return !aborted && counterexamples == 0 && undecided == 0 && invalid_certificates == 0 &&
               construction_failures == 0 && graphs_checked == expected_graphs;
    }
};

/// Binomial coefficient; saturates at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// sum_{j=0}^{m} C(n, j), saturating.
std::uint64_t binomial_prefix_sum(std::uint64_t n, std::uint64_t m);

/// Combination of `size` indices with the given colex rank, ascending.
std::vector<std::uint32_t> colex_unrank(std::uint64_t rank, std::uint32_t size);

/// Checks profile (k >= 3, admissible), mode parameters and the enumeration
/// cap. Throws PlanError; for the cap the message states the exact count.
void validate_plan(const VerifyPlan& plan);

VerifySummary exhaustive_verify(const VerifyPlan& plan, const RecordSink& sink = {});
VerifySummary random_verify(const VerifyPlan& plan, const RecordSink& sink = {});
VerifySummary run_plan(const VerifyPlan& plan, const RecordSink& sink = {});

/// Checks one graph the way the harness does; `deleted` is recorded as given.
VerifyRecord check_graph(const KGraph& g, std::vector<Edge> deleted, const VerifyPlan& plan);

/// {"deleted":[[u,v],...],"edges":N,"checks":{...},"expansions":N}
nlohmann::ordered_json record_to_json(const VerifyRecord& record);

std::string summary_csv_header();
std::string summary_csv_row(const VerifySummary& summary);
nlohmann::ordered_json summary_to_json(const VerifySummary& summary);

/// {"plans":[{"parts":[...],"mode":"exhaustive"|"random","samples":N,"seed":S,
///            "budget":N,"workers":N,"cap":N,"fail_fast":bool,
///            "checks":["chorded_pancyclic","hamiltonian","construction"]}]}
std::vector<VerifyPlan> plans_from_json(const nlohmann::json& doc);

// Suites over fixed constructions.

struct TightnessRow {
    PartProfile profile{1, 1, 1};
    std::int64_t edges = 0;
    std::int64_t expected_edges = 0;
    SearchStatus hamiltonian = SearchStatus::Absent;
    bool ok = false;
};

std::vector<TightnessRow> tightness_suite(const std::vector<PartProfile>& profiles,
                                          std::uint64_t budget = kDefaultBudget);

struct PosaGapRow {
    WitnessFamily family = WitnessFamily::Remark1;
    int a = 0;
    std::int64_t edges = 0;
    std::int64_t threshold = 0;
    std::optional<int> posa_failure_r;
    int expected_r = 0;
    SearchStatus hamiltonian = SearchStatus::Absent;
    std::optional<CycleCertificate> cycle;
    bool ok = false;
};

std::vector<PosaGapRow> posa_gap_suite(const std::vector<std::pair<WitnessFamily, int>>& cases,
                                       std::uint64_t budget = kDefaultBudget);

struct CrosscheckFinding {
    std::string identity;
    std::string instance;
    bool ok = false;
    /// Known small exceptions to the strict inequality.
    bool expected_exception = false;
};

struct CrosscheckSummary {
    std::vector<CrosscheckFinding> findings;
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;

    bool ok() const noexcept { return failed == 0; }
};

/// Threshold identities over 2 <= k <= kmax, 1 <= n <= nmax and all profiles
/// of order <= pmax. Only failures and flagged exceptions are kept in
/// `findings`.
CrosscheckSummary formula_crosscheck(int kmax = 8, int nmax = 8, int pmax = 16);

}  // namespace kpan

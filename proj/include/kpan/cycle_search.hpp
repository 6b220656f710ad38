// Exact, certificate-producing cycle search over bit-row adjacency.
//
// All searches are depth-first with neighbours tried in ascending index
// order, so identical inputs give identical certificates. Effort is capped
// by a node-expansion budget; exhausting it is reported as its own outcome,
// distinct from a definitive "no such cycle".
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "kpan/certificate.hpp"
#include "kpan/graph.hpp"

namespace kpan {

inline constexpr std::uint64_t kDefaultBudget = 50'000'000;

enum class SearchStatus { Found, Absent, BudgetExceeded };

std::string_view to_string(SearchStatus s);

struct SearchResult {
    SearchStatus status = SearchStatus::Absent;
    std::optional<CycleCertificate> certificate;
    std::uint64_t expansions = 0;

    bool found() const noexcept { return status == SearchStatus::Found; }
};

/// Spanning cycle. Throws std::invalid_argument when p < 3.
SearchResult find_hamiltonian_cycle(const KGraph& g, std::uint64_t budget = kDefaultBudget);

/// Cycle on exactly t vertices, 3 <= t <= p.
SearchResult find_cycle_of_length(const KGraph& g, int t, std::uint64_t budget = kDefaultBudget);

/// Cycle on exactly t vertices with at least one chord, 4 <= t <= p. Cycles
/// are enumerated (each once, up to rotation and reflection) and tested for a
/// chord.
SearchResult find_chorded_cycle_of_length(const KGraph& g, int t,
                                          std::uint64_t budget = kDefaultBudget);

/// Calls `visit` once per t-cycle (up to rotation and reflection) until it
/// returns false. Each cycle starts at its smallest vertex and has
/// cycle[1] < cycle[t-1].
SearchStatus enumerate_cycles_of_length(const KGraph& g, int t,
                                        const std::function<bool(std::span<const Vertex>)>& visit,
                                        std::uint64_t budget = kDefaultBudget,
                                        std::uint64_t* expansions = nullptr);

struct PathResult {
    SearchStatus status = SearchStatus::Absent;
    std::vector<Vertex> path;
    std::uint64_t expansions = 0;
};

/// Spanning path. Start vertices are tried in ascending order.
PathResult find_hamiltonian_path(const KGraph& g, std::uint64_t budget = kDefaultBudget);

enum class PancyclicityMode { Pancyclic, Bipancyclic, Chorded };

std::string_view to_string(PancyclicityMode m);

struct PancyclicityReport {
    PancyclicityMode mode = PancyclicityMode::Pancyclic;
    std::map<int, SearchResult> per_length;
    /// True iff every required length has a certificate.
    bool verdict = false;
    /// False if any length ran out of budget, leaving the verdict undecided.
    bool decided = true;
    std::uint64_t expansions = 0;
};

/// Required lengths: 3..p (pancyclic), even 4..p (bipancyclic, balanced
/// bipartite graphs only), 4..p (chorded). Throws std::invalid_argument on a
/// mode/graph mismatch. Stops at the first failing length unless
/// `all_lengths` is set.
PancyclicityReport pancyclicity_report(const KGraph& g, PancyclicityMode mode,
                                       std::uint64_t budget = kDefaultBudget,
                                       bool all_lengths = true);

}  // namespace kpan

// Hamiltonian cycles built by cycle surgery for the three near-half cases.
//
// EvenHalf        every cycle alternates V1 / V\V1, so a cycle of the V1-cross
//                 subgraph is searched directly.
// OddHalf         a vertex w of V\V1 sees all of V1; an alternating cycle of
//                 G-w is spliced through w using one edge inside V\V1, or an
//                 alternating path of G-w is closed through w.
// EvenHalfMinus1  with n1 = n2, a cycle on V1 u V2 absorbs the two remaining
//                 vertices x, y; with n2 < n1 the degree-census argument
//                 applies and a plain search is used.
#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "kpan/certificate.hpp"
#include "kpan/cycle_search.hpp"
#include "kpan/graph.hpp"

namespace kpan {

/// Inserts w into `cycle` using the edge e = (a, b) between two cycle
/// vertices: pred(a), w, pred(b), ..., a, b, ..., pred(a), where pred is taken
/// along the cycle's listed orientation. Requires w off the cycle, e an edge
/// of g, and w adjacent to pred(a) and pred(b). Throws std::invalid_argument
/// naming the failed requirement.
CycleCertificate splice_through_vertex(const CycleCertificate& cycle, Vertex w, Edge e,
                                       const KGraph& g);

enum class ConstructionStrategy {
    BipartiteCore,      // EvenHalf
    VertexSplice,       // OddHalf, cycle of G-w plus splice
    PathClosure,        // OddHalf, path of G-w closed through w
    PathReroute,        // OddHalf, path end shares w's part
    TwoVertexInsertion, // EvenHalfMinus1 with n1 = n2
    PosaSearch,         // EvenHalfMinus1 with n2 < n1
    SearchFallback,     // surgery not reachable for this graph
};

std::string_view to_string(ConstructionStrategy s);

struct ConstructionResult {
    CycleCertificate cycle;
    ConstructionStrategy strategy = ConstructionStrategy::SearchFallback;
    std::uint64_t expansions = 0;
};

/// Requires k >= 3, classify_case in {EvenHalf, OddHalf, EvenHalfMinus1} and
/// at least chorded_threshold edges; throws std::invalid_argument otherwise.
/// Returns nullopt only if no Hamiltonian cycle was found within budget.
std::optional<ConstructionResult> ham_by_construction(const KGraph& g,
                                                      std::uint64_t budget = kDefaultBudget);

}  // namespace kpan

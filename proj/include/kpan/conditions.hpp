// Sufficient conditions for hamiltonicity and (chorded) pancyclicity.
//
// Every predicate returns a ConditionReport. When a condition applies but
// fails, the report carries a witness that can be re-checked against the
// graph: the offending vertex pair for degree-sum conditions, a vertex for
// minimum-degree conditions, r and the low-degree vertices for Posa, and the
// edge deficit for edge-count conditions. Fractional bounds are compared
// exactly.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kpan/graph.hpp"

namespace kpan {

enum class ConditionId {
    Ore,
    Dirac,
    Posa,
    MoonMoser,
    ChenJacobsonDegreeSum,
    ChenJacobsonMinDegree,
    EdgeGeneral,         // (p^2 - 3p + 6) / 2 edges
    EdgeBipartite,       // n^2 - n + 2 edges, balanced bipartite
    EdgeTripartite,      // 3n^2 - 2n + 2 edges, balanced tripartite, n >= 2
    EdgeBalanced,        // ((k^2-k)n^2 - 2n(k-1) + 4) / 2 edges, balanced, k >= 3
    EdgeKPartite,        // chorded_threshold edges, k >= 3, n1 <= p/2
    BondyDensity,        // p^2 / 4 edges on a hamiltonian graph
};

std::string_view to_string(ConditionId id);

/// What a satisfied condition guarantees.
enum class Conclusion { Hamiltonian, Pancyclic, Bipancyclic, ChordedPancyclic };

std::string_view to_string(Conclusion c);

struct PairWitness {
    Vertex u = 0;
    Vertex v = 0;
    int degree_sum = 0;
};

struct VertexWitness {
    Vertex v = 0;
    int degree = 0;
};

struct PosaWitness {
    int r = 0;
    /// Every vertex of degree at most r (there are at least r of them).
    std::vector<Vertex> vertices;
};

struct EdgeDeficit {
    std::int64_t required = 0;
    std::int64_t actual = 0;
    std::int64_t deficit = 0;
};

enum class DensityException { CompleteBalancedBipartite, TriangularPrism };

std::string_view to_string(DensityException e);

using ConditionWitness =
    std::variant<PairWitness, VertexWitness, PosaWitness, EdgeDeficit, DensityException>;

struct ConditionReport {
    ConditionId condition = ConditionId::Ore;
    bool applicable = true;
    bool satisfied = false;
    std::optional<ConditionWitness> witness;
    Conclusion conclusion = Conclusion::Hamiltonian;
    /// Human-readable statement of the bound that was tested.
    std::string bound;
};

ConditionReport check_ore(const KGraph& g);
ConditionReport check_dirac(const KGraph& g);
ConditionReport check_posa(const KGraph& g);
ConditionReport check_moon_moser(const KGraph& g);

/// Two reports: the degree-sum condition over nonadjacent cross-part pairs
/// and the minimum-degree corollary. Balanced profiles with k >= 3 only.
std::vector<ConditionReport> check_chen_jacobson(const KGraph& g);

/// One report per edge-count condition that applies to g's profile.
std::vector<ConditionReport> check_edge_thresholds(const KGraph& g);

/// Density test for a graph the caller knows to be hamiltonian. Satisfied
/// means chorded pancyclicity is predicted: the density holds and g is
/// neither K_{p/2,p/2} nor the triangular prism.
ConditionReport check_bondy_density(const KGraph& g);

bool is_complete_balanced_bipartite(const KGraph& g);
bool is_triangular_prism(const KGraph& g);

}  // namespace kpan

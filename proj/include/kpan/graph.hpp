// k-partite graph model: part profiles, immutable bit-row graphs, edge sets.
#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kpan {

using Vertex = int;
using Bits = std::uint64_t;

/// Largest supported order. Adjacency rows are single 64-bit words.
inline constexpr int kMaxVertices = 64;

enum class GraphErrorKind {
    InvalidProfile,
    VertexOutOfRange,
    IntraPartEdge,
    DuplicateEdge,
    EdgeNotPresent,
    MalformedDocument,
};

class GraphError : public std::runtime_error {
public:
    GraphError(GraphErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    GraphErrorKind kind() const noexcept { return kind_; }

private:
    GraphErrorKind kind_;
};

/// Sizes of the parts, sorted non-increasing (n1 >= n2 >= ... >= nk).
///
/// Construction sorts the input and records, for each sorted slot, the index
/// the part had in the caller's list. A profile with a single part is
/// representable (it arises from induced subgraphs) but the threshold
/// formulas require k >= 2.
class PartProfile {
public:
    explicit PartProfile(std::vector<int> parts);
    PartProfile(std::initializer_list<int> parts)
        : PartProfile(std::vector<int>(parts)) {}

    static PartProfile balanced(int k, int n);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int k() const noexcept { return static_cast<int>(parts_.size()); }
    int order() const noexcept { return order_; }
    int largest() const noexcept { return parts_.front(); }
    int operator[](int i) const { return parts_.at(i); }
    bool is_balanced() const noexcept;

    /// original_index()[i] is the caller's position of sorted part i.
    const std::vector<int>& original_index() const noexcept { return original_index_; }
    bool was_reordered() const noexcept;

    /// First vertex index of part i under the contiguous labelling.
    int part_begin(int i) const;

    std::string to_string() const;

    friend bool operator==(const PartProfile& a, const PartProfile& b) {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<int> parts_;
    std::vector<int> original_index_;
    int order_ = 0;
};

/// Unordered vertex pair stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Duplicate-free list of edges; each pair normalised to u < v.
class EdgeSet {
public:
    EdgeSet() = default;
    EdgeSet(std::initializer_list<Edge> edges);
    explicit EdgeSet(std::span<const Edge> edges);

    /// Throws GraphError(DuplicateEdge) if already present, or
    /// GraphError(IntraPartEdge) for a loop.
    void add(Edge e);
    bool contains(Edge e) const;

    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }
    auto begin() const noexcept { return edges_.begin(); }
    auto end() const noexcept { return edges_.end(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

private:
    std::vector<Edge> edges_;
};

/// An immutable k-partite graph on vertices 0..p-1.
///
/// Vertices are assigned to parts contiguously in profile order: part 0 holds
/// 0..n1-1, part 1 the next n2 indices, and so on. Every edge crosses parts.
class KGraph {
public:
    /// Builds from an explicit edge list. Throws GraphError on intra-part
    /// pairs, out-of-range indices and duplicates.
    KGraph(PartProfile profile, std::span<const Edge> edges);
    KGraph(PartProfile profile, std::initializer_list<Edge> edges)
        : KGraph(std::move(profile), std::span<const Edge>(edges.begin(), edges.size())) {}

    const PartProfile& profile() const noexcept { return profile_; }
    int order() const noexcept { return static_cast<int>(rows_.size()); }
    int edge_count() const noexcept { return edge_count_; }

    int part_of(Vertex v) const { return part_of_.at(check(v)); }
    Bits row(Vertex v) const { return rows_.at(check(v)); }
    std::span<const Bits> rows() const noexcept { return rows_; }
    bool adjacent(Vertex u, Vertex v) const {
        return (row(u) >> check(v)) & 1U;
    }
    int degree(Vertex v) const { return std::popcount(row(v)); }

    /// Mask of all vertices in part i.
    Bits part_mask(int i) const;
    Bits all_vertices() const noexcept;

    /// Present edges in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const KGraph& a, const KGraph& b) {
        return a.profile_ == b.profile_ && a.rows_ == b.rows_;
    }

private:
    friend KGraph complete_kpartite(const PartProfile& profile);
    friend KGraph delete_edges(const KGraph& g, const EdgeSet& del);

    KGraph(PartProfile profile, std::vector<Bits> rows);
    Vertex check(Vertex v) const;

    PartProfile profile_;
    std::vector<int> part_of_;
    std::vector<Bits> rows_;
    int edge_count_ = 0;
};

KGraph complete_kpartite(const PartProfile& profile);

/// Returns g without the listed edges. Each must be a present cross-part edge.
KGraph delete_edges(const KGraph& g, const EdgeSet& del);

/// degree(g, v) == g.degree(v); kept as a free function for symmetry with the
/// other graph operations.
inline int degree(const KGraph& g, Vertex v) { return g.degree(v); }

struct InducedSubgraph {
    KGraph graph;
    /// original[i] is the vertex of the parent graph that became vertex i.
    std::vector<Vertex> original;
};

/// Subgraph induced by `keep`. Surviving vertices keep their relative order
/// within each part; parts left empty are dropped from the profile.
InducedSubgraph induced_subgraph(const KGraph& g, std::span<const Vertex> keep);

/// Edges of K(profile) absent from g, lexicographic.
std::vector<Edge> missing_edges(const KGraph& g);

inline int popcount(Bits b) { return std::popcount(b); }
inline Bits bit(Vertex v) { return Bits{1} << v; }

}  // namespace kpan

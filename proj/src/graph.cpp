#include "kpan/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kpan {

PartProfile::PartProfile(std::vector<int> parts) {
    if (parts.empty()) {
        throw GraphError(GraphErrorKind::InvalidProfile, "profile has no parts");
    }
    for (int n : parts) {
        if (n < 1) {
            throw GraphError(GraphErrorKind::InvalidProfile,
                             "part sizes must be positive, got " + std::to_string(n));
        }
    }
    original_index_.resize(parts.size());
    std::iota(original_index_.begin(), original_index_.end(), 0);
    std::stable_sort(original_index_.begin(), original_index_.end(),
                     [&](int a, int b) { return parts[a] > parts[b]; });
    parts_.reserve(parts.size());
    for (int i : original_index_) parts_.push_back(parts[i]);
    order_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    if (order_ > kMaxVertices) {
        throw GraphError(GraphErrorKind::InvalidProfile,
                         "order " + std::to_string(order_) + " exceeds the supported maximum of " +
                             std::to_string(kMaxVertices));
    }
}

PartProfile PartProfile::balanced(int k, int n) {
    if (k < 1) throw GraphError(GraphErrorKind::InvalidProfile, "k must be positive");
    return PartProfile(std::vector<int>(k, n));
}

bool PartProfile::is_balanced() const noexcept {
    return parts_.front() == parts_.back();
}

bool PartProfile::was_reordered() const noexcept {
    for (std::size_t i = 0; i < original_index_.size(); ++i) {
        if (original_index_[i] != static_cast<int>(i)) return true;
    }
    return false;
}

int PartProfile::part_begin(int i) const {
    if (i < 0 || i > k()) throw std::out_of_range("part index");
    return std::accumulate(parts_.begin(), parts_.begin() + i, 0);
}

std::string PartProfile::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

std::string to_string(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

EdgeSet::EdgeSet(std::initializer_list<Edge> edges) {
    for (const Edge& e : edges) add(e);
}

EdgeSet::EdgeSet(std::span<const Edge> edges) {
    for (const Edge& e : edges) add(e);
}

void EdgeSet::add(Edge e) {
    if (e.u == e.v) {
        throw GraphError(GraphErrorKind::IntraPartEdge, "loop at vertex " + std::to_string(e.u));
    }
    if (contains(e)) {
        throw GraphError(GraphErrorKind::DuplicateEdge, "duplicate edge " + to_string(e));
    }
    edges_.push_back(e);
}

bool EdgeSet::contains(Edge e) const {
    return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

namespace {

std::vector<int> contiguous_parts(const PartProfile& profile) {
    std::vector<int> part_of;
    part_of.reserve(profile.order());
    for (int i = 0; i < profile.k(); ++i) {
        part_of.insert(part_of.end(), profile[i], i);
    }
    return part_of;
}

}  // namespace

KGraph::KGraph(PartProfile profile, std::vector<Bits> rows)
    : profile_(std::move(profile)), part_of_(contiguous_parts(profile_)), rows_(std::move(rows)) {
    int total = 0;
    for (Bits r : rows_) total += std::popcount(r);
    edge_count_ = total / 2;
}

KGraph::KGraph(PartProfile profile, std::span<const Edge> edges)
    : profile_(std::move(profile)),
      part_of_(contiguous_parts(profile_)),
      rows_(profile_.order(), 0) {
    const int p = order();
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= p) {
            throw GraphError(GraphErrorKind::VertexOutOfRange,
                             "edge " + to_string(e) + " out of range for order " + std::to_string(p));
        }
        if (part_of_[e.u] == part_of_[e.v]) {
            throw GraphError(GraphErrorKind::IntraPartEdge,
                             "edge " + to_string(e) + " joins two vertices of part " +
                                 std::to_string(part_of_[e.u] + 1));
        }
        if ((rows_[e.u] >> e.v) & 1U) {
            throw GraphError(GraphErrorKind::DuplicateEdge, "duplicate edge " + to_string(e));
        }
        rows_[e.u] |= bit(e.v);
        rows_[e.v] |= bit(e.u);
        ++edge_count_;
    }
}

Vertex KGraph::check(Vertex v) const {
    if (v < 0 || v >= order()) {
        throw GraphError(GraphErrorKind::VertexOutOfRange,
                         "vertex " + std::to_string(v) + " out of range for order " +
                             std::to_string(order()));
    }
    return v;
}

Bits KGraph::part_mask(int i) const {
    const int begin = profile_.part_begin(i);
    const int n = profile_[i];
    const Bits block = n == 64 ? ~Bits{0} : (Bits{1} << n) - 1;
    return block << begin;
}

Bits KGraph::all_vertices() const noexcept {
    const int p = order();
    return p == 64 ? ~Bits{0} : (Bits{1} << p) - 1;
}

std::vector<Edge> KGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        Bits higher = rows_[u] & ~((bit(u) << 1) - 1);
        while (higher) {
            Vertex v = std::countr_zero(higher);
            higher &= higher - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

KGraph complete_kpartite(const PartProfile& profile) {
    const int p = profile.order();
    const Bits all = p == 64 ? ~Bits{0} : (Bits{1} << p) - 1;
    std::vector<Bits> rows(p);
    int begin = 0;
    for (int i = 0; i < profile.k(); ++i) {
        const int n = profile[i];
        const Bits own = (n == 64 ? ~Bits{0} : (Bits{1} << n) - 1) << begin;
        for (int v = begin; v < begin + n; ++v) rows[v] = all & ~own;
        begin += n;
    }
    return KGraph(profile, std::move(rows));
}

KGraph delete_edges(const KGraph& g, const EdgeSet& del) {
    std::vector<Bits> rows(g.rows().begin(), g.rows().end());
    for (const Edge& e : del) {
        if (e.u < 0 || e.v >= g.order()) {
            throw GraphError(GraphErrorKind::VertexOutOfRange,
                             "cannot delete " + to_string(e) + ": vertex out of range");
        }
        if (g.part_of(e.u) == g.part_of(e.v)) {
            throw GraphError(GraphErrorKind::IntraPartEdge,
                             "cannot delete " + to_string(e) + ": both ends in the same part");
        }
        if (!((rows[e.u] >> e.v) & 1U)) {
            throw GraphError(GraphErrorKind::EdgeNotPresent,
                             "cannot delete " + to_string(e) + ": edge not present");
        }
        rows[e.u] &= ~bit(e.v);
        rows[e.v] &= ~bit(e.u);
    }
    return KGraph(g.profile(), std::move(rows));
}

InducedSubgraph induced_subgraph(const KGraph& g, std::span<const Vertex> keep) {
    Bits kept = 0;
    for (Vertex v : keep) {
        if (v < 0 || v >= g.order()) {
            throw GraphError(GraphErrorKind::VertexOutOfRange,
                             "vertex " + std::to_string(v) + " out of range");
        }
        kept |= bit(v);
    }
    if (!kept) throw GraphError(GraphErrorKind::InvalidProfile, "induced subgraph on no vertices");

    // Group survivors by part; PartProfile's stable sort fixes the part order,
    // and the contiguous labelling follows it.
    std::vector<std::vector<Vertex>> groups;
    std::vector<int> sizes;
    for (int i = 0; i < g.profile().k(); ++i) {
        std::vector<Vertex> members;
        Bits m = g.part_mask(i) & kept;
        while (m) {
            members.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        if (!members.empty()) {
            sizes.push_back(static_cast<int>(members.size()));
            groups.push_back(std::move(members));
        }
    }
    PartProfile profile(sizes);
    std::vector<Vertex> original;
    for (int slot : profile.original_index()) {
        original.insert(original.end(), groups[slot].begin(), groups[slot].end());
    }

    std::vector<Edge> edges;
    for (std::size_t a = 0; a < original.size(); ++a) {
        for (std::size_t b = a + 1; b < original.size(); ++b) {
            if (g.adjacent(original[a], original[b])) {
                edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
            }
        }
    }
    return {KGraph(std::move(profile), edges), std::move(original)};
}

std::vector<Edge> missing_edges(const KGraph& g) {
    const KGraph full = complete_kpartite(g.profile());
    std::vector<Edge> out;
    for (Vertex u = 0; u < g.order(); ++u) {
        Bits gone = full.row(u) & ~g.row(u);
        gone &= ~((bit(u) << 1) - 1);
        while (gone) {
            Vertex v = std::countr_zero(gone);
            gone &= gone - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

}  // namespace kpan

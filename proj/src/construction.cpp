#include "kpan/construction.hpp"

#include <algorithm>
#include <stdexcept>

#include "kpan/thresholds.hpp"

namespace kpan {

std::string_view to_string(ConstructionStrategy s) {
    switch (s) {
        case ConstructionStrategy::BipartiteCore: return "bipartite_core";
        case ConstructionStrategy::VertexSplice: return "vertex_splice";
        case ConstructionStrategy::PathClosure: return "path_closure";
        case ConstructionStrategy::PathReroute: return "path_reroute";
        case ConstructionStrategy::TwoVertexInsertion: return "two_vertex_insertion";
        case ConstructionStrategy::PosaSearch: return "posa_search";
        case ConstructionStrategy::SearchFallback: return "search_fallback";
    }
    return "?";
}

CycleCertificate splice_through_vertex(const CycleCertificate& cycle, Vertex w, Edge e,
                                       const KGraph& g) {
    if (auto defect = certificate_defect(g, CycleCertificate{cycle.cycle, std::nullopt})) {
        throw std::invalid_argument("splice input is not a cycle of g: " + *defect);
    }
    const auto& c = cycle.cycle;
    const int len = static_cast<int>(c.size());
    if (w < 0 || w >= g.order()) throw std::invalid_argument("splice vertex out of range");
    if (std::find(c.begin(), c.end(), w) != c.end()) {
        throw std::invalid_argument("vertex " + std::to_string(w) + " already lies on the cycle");
    }
    const auto pos_u = std::find(c.begin(), c.end(), e.u);
    const auto pos_v = std::find(c.begin(), c.end(), e.v);
    if (pos_u == c.end() || pos_v == c.end()) {
        throw std::invalid_argument("edge " + to_string(e) + " does not join two cycle vertices");
    }
    if (!g.adjacent(e.u, e.v)) {
        throw std::invalid_argument("edge " + to_string(e) + " is not an edge of g");
    }
    int ia = static_cast<int>(pos_u - c.begin());
    int ib = static_cast<int>(pos_v - c.begin());
    if (ia > ib) std::swap(ia, ib);
    const Vertex pred_a = c[(ia + len - 1) % len];
    const Vertex pred_b = c[ib - 1];
    for (Vertex need : {pred_a, pred_b}) {
        if (!g.adjacent(w, need)) {
            throw std::invalid_argument("vertex " + std::to_string(w) + " is not adjacent to " +
                                        std::to_string(need) + ", the cycle predecessor of an end of " +
                                        to_string(e));
        }
    }

    CycleCertificate out;
    out.cycle.reserve(len + 1);
    out.cycle.insert(out.cycle.end(), c.begin(), c.begin() + ia);
    out.cycle.push_back(w);
    for (int i = ib - 1; i >= ia; --i) out.cycle.push_back(c[i]);
    out.cycle.insert(out.cycle.end(), c.begin() + ib, c.end());
    return out;
}

namespace {

struct Budgeted {
    std::uint64_t budget;
    std::uint64_t spent = 0;

    std::uint64_t left() const { return budget > spent ? budget - spent : 0; }
};

std::vector<Vertex> members(Bits m) {
    std::vector<Vertex> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

std::optional<ConstructionResult> finish(const KGraph& g, std::vector<Vertex> cycle,
                                         ConstructionStrategy strategy, const Budgeted& b) {
    CycleCertificate cert{std::move(cycle), std::nullopt};
    if (cert.length() != g.order() || !is_valid_certificate(g, cert)) return std::nullopt;
    return ConstructionResult{std::move(cert), strategy, b.spent};
}

std::optional<ConstructionResult> fallback(const KGraph& g, ConstructionStrategy strategy,
                                           Budgeted& b) {
    SearchResult r = find_hamiltonian_cycle(g, b.left());
    b.spent += r.expansions;
    if (!r.found()) return std::nullopt;
    return ConstructionResult{std::move(*r.certificate), strategy, b.spent};
}

/// Subgraph of g keeping only edges with exactly one end in `side`.
KGraph cross_subgraph(const KGraph& g, Bits side) {
    std::vector<Edge> keep;
    for (const Edge& e : g.edges()) {
        const bool a = (side >> e.u) & 1U;
        const bool b = (side >> e.v) & 1U;
        if (a != b) keep.push_back(e);
    }
    return KGraph(g.profile(), keep);
}

std::optional<ConstructionResult> even_half(const KGraph& g, Budgeted& b) {
    const KGraph core = cross_subgraph(g, g.part_mask(0));
    SearchResult r = find_hamiltonian_cycle(core, b.left());
    b.spent += r.expansions;
    if (r.found()) {
        if (auto done = finish(g, r.certificate->cycle, ConstructionStrategy::BipartiteCore, b)) {
            return done;
        }
    }
    return fallback(g, ConstructionStrategy::SearchFallback, b);
}

/// One OddHalf attempt around hub w, which sees all of V1.
std::optional<ConstructionResult> odd_half_at(const KGraph& g, Vertex w, Budgeted& b) {
    const Bits v1 = g.part_mask(0);
    const Bits rest = g.all_vertices() & ~v1;

    std::vector<Vertex> others = members(g.all_vertices() & ~bit(w));
    const InducedSubgraph sub = induced_subgraph(g, others);
    Bits sub_v1 = 0;
    for (std::size_t i = 0; i < sub.original.size(); ++i) {
        if ((v1 >> sub.original[i]) & 1U) sub_v1 |= bit(static_cast<Vertex>(i));
    }
    const KGraph core = cross_subgraph(sub.graph, sub_v1);
    auto lift = [&](const std::vector<Vertex>& local) {
        std::vector<Vertex> out;
        out.reserve(local.size());
        for (Vertex v : local) out.push_back(sub.original[v]);
        return out;
    };

    SearchResult cyc = find_hamiltonian_cycle(core, b.left());
    b.spent += cyc.expansions;
    if (cyc.found()) {
        const CycleCertificate base{lift(cyc.certificate->cycle), std::nullopt};
        // Any edge of G-w with both ends outside V1 can take w.
        for (const Edge& e : g.edges()) {
            if (e.u == w || e.v == w) continue;
            if (!((rest >> e.u) & 1U) || !((rest >> e.v) & 1U)) continue;
            try {
                CycleCertificate spliced = splice_through_vertex(base, w, e, g);
                if (auto done = finish(g, std::move(spliced.cycle), ConstructionStrategy::VertexSplice, b)) {
                    return done;
                }
            } catch (const std::invalid_argument&) {
            }
        }
        return std::nullopt;
    }
    if (cyc.status != SearchStatus::Absent) return std::nullopt;

    PathResult pr = find_hamiltonian_path(core, b.left());
    b.spent += pr.expansions;
    if (pr.status != SearchStatus::Found) return std::nullopt;
    std::vector<Vertex> path = lift(pr.path);
    if (!((v1 >> path.front()) & 1U)) std::reverse(path.begin(), path.end());
    const int len = static_cast<int>(path.size());
    const Vertex last = path.back();
    if (g.adjacent(w, last) && g.adjacent(w, path.front())) {
        path.push_back(w);
        return finish(g, std::move(path), ConstructionStrategy::PathClosure, b);
    }
    // last, path[j], path[j-1], ..., path[0], w, path[j+1], ..., path[len-2]
    for (int j = 1; j + 2 < len; ++j) {
        if (!g.adjacent(last, path[j]) || !g.adjacent(w, path[j + 1]) || !g.adjacent(w, path.front())) {
            continue;
        }
        std::vector<Vertex> cycle{last};
        for (int i = j; i >= 0; --i) cycle.push_back(path[i]);
        cycle.push_back(w);
        for (int i = j + 1; i <= len - 2; ++i) cycle.push_back(path[i]);
        if (auto done = finish(g, std::move(cycle), ConstructionStrategy::PathReroute, b)) return done;
    }
    return std::nullopt;
}

std::optional<ConstructionResult> odd_half(const KGraph& g, Budgeted& b) {
    if (g.order() < 5) return fallback(g, ConstructionStrategy::SearchFallback, b);
    const Bits v1 = g.part_mask(0);
    for (Vertex w : members(g.all_vertices() & ~v1)) {
        if ((g.row(w) & v1) != v1) continue;
        if (auto done = odd_half_at(g, w, b)) return done;
        if (b.left() == 0) return std::nullopt;
    }
    return fallback(g, ConstructionStrategy::SearchFallback, b);
}

/// Places x and y into a cycle on all other vertices. Gaps listed in
/// `virtual_gaps` are edges the core cycle used but g lacks; each must be
/// broken by an insertion.
std::optional<std::vector<Vertex>> insert_pair(const KGraph& g, const std::vector<Vertex>& c,
                                               Vertex x, Vertex y, const EdgeSet& virtual_edges) {
    const int len = static_cast<int>(c.size());
    auto at = [&](int i) { return c[((i % len) + len) % len]; };
    auto gap_virtual = [&](int i) { return virtual_edges.contains(Edge(at(i), at(i + 1))); };
    auto fits = [&](Vertex z, int i) { return g.adjacent(z, at(i)) && g.adjacent(z, at(i + 1)); };
    std::vector<int> virt;
    for (int i = 0; i < len; ++i) {
        if (gap_virtual(i)) virt.push_back(i);
    }
    auto covered_by = [&](std::initializer_list<int> gaps) {
        return std::all_of(virt.begin(), virt.end(), [&](int v) {
            return std::find(gaps.begin(), gaps.end(), v) != gaps.end();
        });
    };
    auto walk_from = [&](int i, std::initializer_list<Vertex> head, int resume) {
        std::vector<Vertex> out(head);
        for (int s = resume; s < i + len; ++s) out.push_back(at(s));
        return out;
    };

    // x and y in two different gaps.
    for (int i = 0; i < len; ++i) {
        for (int j = 0; j < len; ++j) {
            if (i == j || !covered_by({i, j})) continue;
            for (auto [a, bb] : {std::pair{x, y}, std::pair{y, x}}) {
                if (!fits(a, i) || !fits(bb, j)) continue;
                std::vector<Vertex> out;
                for (int s = 0; s < len; ++s) {
                    out.push_back(at(s));
                    if (s == i) out.push_back(a);
                    if (s == j) out.push_back(bb);
                }
                return out;
            }
        }
    }
    // x, y consecutively in one gap.
    if (g.adjacent(x, y)) {
        for (int i = 0; i < len; ++i) {
            if (!covered_by({i})) continue;
            for (auto [a, bb] : {std::pair{x, y}, std::pair{y, x}}) {
                if (g.adjacent(at(i), a) && g.adjacent(bb, at(i + 1))) {
                    return walk_from(i, {at(i), a, bb}, i + 1);
                }
            }
        }
    }
    // c1, a, c3, c2, b, c4: a sees only one side, b re-routes around c2 c3.
    if (len >= 4) {
        for (int i = 0; i < len; ++i) {
            if (gap_virtual(i + 1) || !covered_by({i, (i + 2) % len})) continue;
            for (auto [a, bb] : {std::pair{x, y}, std::pair{y, x}}) {
                if (g.adjacent(a, at(i)) && g.adjacent(a, at(i + 2)) && g.adjacent(bb, at(i + 1)) &&
                    g.adjacent(bb, at(i + 3))) {
                    return walk_from(i, {at(i), a, at(i + 2), at(i + 1), bb}, i + 3);
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<ConstructionResult> even_half_minus_one(const KGraph& g, Budgeted& b) {
    const PartProfile& prof = g.profile();
    if (prof[1] < prof[0]) return fallback(g, ConstructionStrategy::PosaSearch, b);
    const int n = prof[0];
    if (n < 2) return fallback(g, ConstructionStrategy::SearchFallback, b);

    const Bits core_mask = g.part_mask(0) | g.part_mask(1);
    const std::vector<Vertex> extra = members(g.all_vertices() & ~core_mask);
    const Vertex x = extra.at(0);
    const Vertex y = extra.at(1);

    std::vector<Edge> present;
    std::vector<Edge> removed;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = n; v < 2 * n; ++v) {
            (g.adjacent(u, v) ? present : removed).emplace_back(u, v);
        }
    }

    // Restore at most two removed V1-V2 edges so the core cycle exists; each
    // restored edge the cycle uses must then be broken by x or y.
    auto attempt = [&](const EdgeSet& restored) -> std::optional<ConstructionResult> {
        std::vector<Edge> edges = present;
        edges.insert(edges.end(), restored.begin(), restored.end());
        const KGraph core(PartProfile{n, n}, edges);
        SearchResult r = find_hamiltonian_cycle(core, b.left());
        b.spent += r.expansions;
        if (!r.found()) return std::nullopt;
        auto cycle = insert_pair(g, r.certificate->cycle, x, y, restored);
        if (!cycle) return std::nullopt;
        return finish(g, std::move(*cycle), ConstructionStrategy::TwoVertexInsertion, b);
    };

    if (auto done = attempt(EdgeSet{})) return done;
    const int m = static_cast<int>(removed.size());
    for (int i = 0; i < m; ++i) {
        if (auto done = attempt(EdgeSet{removed[i]})) return done;
    }
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (auto done = attempt(EdgeSet{removed[i], removed[j]})) return done;
        }
    }
    return fallback(g, ConstructionStrategy::SearchFallback, b);
}

}  // namespace

std::optional<ConstructionResult> ham_by_construction(const KGraph& g, std::uint64_t budget) {
    const PartProfile& prof = g.profile();
    if (prof.k() < 3) throw std::invalid_argument("construction needs at least three parts");
    const CaseTag tag = classify_case(prof);
    if (tag != CaseTag::EvenHalf && tag != CaseTag::OddHalf && tag != CaseTag::EvenHalfMinus1) {
        throw std::invalid_argument("no construction for case " + std::string(to_string(tag)));
    }
    const std::int64_t need = chorded_threshold(prof);
    if (g.edge_count() < need) {
        throw std::invalid_argument("graph has " + std::to_string(g.edge_count()) +
                                    " edges, below the threshold " + std::to_string(need));
    }
    Budgeted b{budget};
    switch (tag) {
        case CaseTag::EvenHalf: return even_half(g, b);
        case CaseTag::OddHalf: return odd_half(g, b);
        default: return even_half_minus_one(g, b);
    }
}

}  // namespace kpan

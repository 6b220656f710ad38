// Brute-force reference implementations used only by tests. They share no
// code with the library search: cycles are found by trying every vertex
// subset and every ordering of it.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include "kpan/graph.hpp"

namespace oracle {

using kpan::KGraph;
using kpan::Vertex;

inline bool adj(const KGraph& g, Vertex a, Vertex b) {
    return ((g.row(a) >> b) & 1U) != 0;
}

/// Independent certificate check: distinct in-range vertices, closed walk
/// over edges, optional chord joining non-consecutive vertices.
inline bool valid_cycle(const KGraph& g, const std::vector<Vertex>& c,
                        const std::vector<Vertex>* chord = nullptr) {
    const int t = static_cast<int>(c.size());
    if (t < 3) return false;
    std::vector<bool> seen(g.order(), false);
    for (Vertex v : c) {
        if (v < 0 || v >= g.order() || seen[v]) return false;
        seen[v] = true;
    }
    for (int i = 0; i < t; ++i) {
        if (!adj(g, c[i], c[(i + 1) % t])) return false;
    }
    if (chord) {
        if (chord->size() != 2) return false;
        const auto ia = std::find(c.begin(), c.end(), (*chord)[0]) - c.begin();
        const auto ib = std::find(c.begin(), c.end(), (*chord)[1]) - c.begin();
        if (ia == t || ib == t || ia == ib) return false;
        const auto d = std::abs(ia - ib);
        if (d == 1 || d == t - 1) return false;
        if (!adj(g, (*chord)[0], (*chord)[1])) return false;
    }
    return true;
}

struct CycleFacts {
    bool cycle = false;
    bool chorded = false;
};

/// Whether g has a t-cycle and a chorded t-cycle, by permutation enumeration.
inline CycleFacts cycle_facts(const KGraph& g, int t) {
    CycleFacts out;
    const int p = g.order();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << p); ++s) {
        if (std::popcount(s) != t) continue;
        std::vector<Vertex> vs;
        for (Vertex v = 0; v < p; ++v) {
            if ((s >> v) & 1U) vs.push_back(v);
        }
        // vs[0] stays first; permute the rest.
        do {
            bool closed = true;
            for (int i = 0; i < t && closed; ++i) closed = adj(g, vs[i], vs[(i + 1) % t]);
            if (!closed) continue;
            out.cycle = true;
            for (int i = 0; i < t && !out.chorded; ++i) {
                for (int j = i + 2; j < t; ++j) {
                    if (i == 0 && j == t - 1) continue;
                    if (adj(g, vs[i], vs[j])) {
                        out.chorded = true;
                        break;
                    }
                }
            }
            if (out.chorded) return out;
        } while (std::next_permutation(vs.begin() + 1, vs.end()));
    }
    return out;
}

inline bool hamiltonian(const KGraph& g) {
    return cycle_facts(g, g.order()).cycle;
}

/// Number of unordered vertex pairs lying in different parts.
inline std::int64_t cross_pairs(const std::vector<int>& parts) {
    std::vector<int> label;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (int j = 0; j < parts[i]; ++j) label.push_back(static_cast<int>(i));
    }
    std::int64_t count = 0;
    for (std::size_t a = 0; a < label.size(); ++a) {
        for (std::size_t b = a + 1; b < label.size(); ++b) count += label[a] != label[b];
    }
    return count;
}

/// Pascal-triangle binomial, independent of the library's.
inline std::uint64_t choose(int n, int k) {
    std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return k < 0 || k > n ? 0 : c[n][k];
}

/// Random subgraph of K(profile): each cross edge kept with probability `keep`.
inline KGraph random_graph(const kpan::PartProfile& profile, std::mt19937_64& rng, double keep) {
    const KGraph full = kpan::complete_kpartite(profile);
    std::bernoulli_distribution coin(keep);
    std::vector<kpan::Edge> edges;
    for (const kpan::Edge& e : full.edges()) {
        if (coin(rng)) edges.push_back(e);
    }
    return KGraph(profile, edges);
}

/// Random profile of order in [lo, hi] with at least `kmin` parts.
inline kpan::PartProfile random_profile(std::mt19937_64& rng, int lo, int hi, int kmin = 2) {
    for (;;) {
        const int p = std::uniform_int_distribution<int>(lo, hi)(rng);
        std::vector<int> parts;
        int left = p;
        while (left > 0) {
            const int s = std::uniform_int_distribution<int>(1, left)(rng);
            parts.push_back(s);
            left -= s;
        }
        if (static_cast<int>(parts.size()) >= kmin) return kpan::PartProfile(parts);
    }
}

}  // namespace oracle

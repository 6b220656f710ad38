#include "kpan/conditions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include <boost/rational.hpp>

#include "kpan/thresholds.hpp"

namespace kpan {

using Rational = boost::rational<std::int64_t>;

std::string_view to_string(ConditionId id) {
    switch (id) {
        case ConditionId::Ore: return "ore";
        case ConditionId::Dirac: return "dirac";
        case ConditionId::Posa: return "posa";
        case ConditionId::MoonMoser: return "moon_moser";
        case ConditionId::ChenJacobsonDegreeSum: return "chen_jacobson_degree_sum";
        case ConditionId::ChenJacobsonMinDegree: return "chen_jacobson_min_degree";
        case ConditionId::EdgeGeneral: return "edges_general";
        case ConditionId::EdgeBipartite: return "edges_balanced_bipartite";
        case ConditionId::EdgeTripartite: return "edges_balanced_tripartite";
        case ConditionId::EdgeBalanced: return "edges_balanced_kpartite";
        case ConditionId::EdgeKPartite: return "edges_kpartite";
        case ConditionId::BondyDensity: return "bondy_density";
    }
    return "?";
}

std::string_view to_string(Conclusion c) {
    switch (c) {
        case Conclusion::Hamiltonian: return "hamiltonian";
        case Conclusion::Pancyclic: return "pancyclic";
        case Conclusion::Bipancyclic: return "bipancyclic";
        case Conclusion::ChordedPancyclic: return "chorded_pancyclic";
    }
    return "?";
}

std::string_view to_string(DensityException e) {
    switch (e) {
        case DensityException::CompleteBalancedBipartite: return "complete_balanced_bipartite";
        case DensityException::TriangularPrism: return "triangular_prism";
    }
    return "?";
}

namespace {

ConditionReport not_applicable(ConditionId id, Conclusion c, std::string why) {
    ConditionReport r;
    r.condition = id;
    r.applicable = false;
    r.satisfied = false;
    r.conclusion = c;
    r.bound = std::move(why);
    return r;
}

std::string rational_text(const Rational& q) {
    std::ostringstream os;
    os << q.numerator();
    if (q.denominator() != 1) os << '/' << q.denominator();
    return os.str();
}

/// Smallest-degree-sum nonadjacent pair, restricted to cross-part pairs when
/// `cross_only`. Ties go to the lexicographically first pair.
std::optional<PairWitness> weakest_pair(const KGraph& g, bool cross_only) {
    std::optional<PairWitness> best;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (g.adjacent(u, v)) continue;
            if (cross_only && g.part_of(u) == g.part_of(v)) continue;
            const int s = g.degree(u) + g.degree(v);
            if (!best || s < best->degree_sum) best = PairWitness{u, v, s};
        }
    }
    return best;
}

VertexWitness weakest_vertex(const KGraph& g) {
    VertexWitness best{0, g.degree(0)};
    for (Vertex v = 1; v < g.order(); ++v) {
        if (g.degree(v) < best.degree) best = VertexWitness{v, g.degree(v)};
    }
    return best;
}

ConditionReport edge_report(ConditionId id, Conclusion c, const KGraph& g,
                            std::int64_t required, std::string bound) {
    ConditionReport r;
    r.condition = id;
    r.conclusion = c;
    r.bound = std::move(bound);
    r.satisfied = g.edge_count() >= required;
    if (!r.satisfied) {
        r.witness = EdgeDeficit{required, g.edge_count(), required - g.edge_count()};
    }
    return r;
}

bool balanced_bipartite_profile(const PartProfile& prof) {
    return prof.k() == 2 && prof[0] == prof[1];
}

}  // namespace

ConditionReport check_ore(const KGraph& g) {
    const int p = g.order();
    if (p < 3) return not_applicable(ConditionId::Ore, Conclusion::Hamiltonian, "order below 3");
    ConditionReport r;
    r.condition = ConditionId::Ore;
    r.conclusion = Conclusion::Hamiltonian;
    r.bound = "d(u)+d(v) >= " + std::to_string(p) + " for nonadjacent u, v";
    const auto pair = weakest_pair(g, false);
    r.satisfied = !pair || pair->degree_sum >= p;
    if (!r.satisfied) r.witness = *pair;
    return r;
}

ConditionReport check_dirac(const KGraph& g) {
    const int p = g.order();
    if (p < 3) return not_applicable(ConditionId::Dirac, Conclusion::Hamiltonian, "order below 3");
    ConditionReport r;
    r.condition = ConditionId::Dirac;
    r.conclusion = Conclusion::Hamiltonian;
    r.bound = "d(v) >= " + rational_text(Rational(p, 2)) + " for every v";
    const VertexWitness low = weakest_vertex(g);
    r.satisfied = 2 * low.degree >= p;
    if (!r.satisfied) r.witness = low;
    return r;
}

ConditionReport check_posa(const KGraph& g) {
    const int p = g.order();
    if (p < 3) return not_applicable(ConditionId::Posa, Conclusion::Hamiltonian, "order below 3");
    ConditionReport r;
    r.condition = ConditionId::Posa;
    r.conclusion = Conclusion::Hamiltonian;
    r.bound = "#{v : d(v) <= r} < r for 1 <= r < " + rational_text(Rational(p, 2));
    r.satisfied = true;
    for (int rr = 1; 2 * rr < p; ++rr) {
        std::vector<Vertex> low;
        for (Vertex v = 0; v < p; ++v) {
            if (g.degree(v) <= rr) low.push_back(v);
        }
        if (static_cast<int>(low.size()) >= rr) {
            r.satisfied = false;
            r.witness = PosaWitness{rr, std::move(low)};
            break;
        }
    }
    return r;
}

ConditionReport check_moon_moser(const KGraph& g) {
    const PartProfile& prof = g.profile();
    if (!balanced_bipartite_profile(prof)) {
        return not_applicable(ConditionId::MoonMoser, Conclusion::Hamiltonian,
                              "needs a balanced bipartite profile");
    }
    const int n = prof[0];
    ConditionReport r;
    r.condition = ConditionId::MoonMoser;
    r.conclusion = Conclusion::Hamiltonian;
    r.bound = "d(u)+d(v) > " + std::to_string(n) + " for nonadjacent u, v in different parts";
    const auto pair = weakest_pair(g, true);
    r.satisfied = !pair || pair->degree_sum > n;
    if (!r.satisfied) r.witness = *pair;
    return r;
}

std::vector<ConditionReport> check_chen_jacobson(const KGraph& g) {
    const PartProfile& prof = g.profile();
    const int k = prof.k();
    if (k < 3 || !prof.is_balanced()) {
        const std::string why = "needs a balanced profile with k >= 3";
        return {not_applicable(ConditionId::ChenJacobsonDegreeSum, Conclusion::Hamiltonian, why),
                not_applicable(ConditionId::ChenJacobsonMinDegree, Conclusion::Hamiltonian, why)};
    }
    const std::int64_t n = prof[0];
    // Degree-sum bound (k - 4/(k+2)) n for even k, (k - 2/(k+1)) n for odd k;
    // the degree bound is (k/2 - 2/(k+2)) n resp. (k/2 - 1/(k+1)) n.
    const Rational kk(k);
    const Rational sum_bound =
        (k % 2 == 0 ? kk - Rational(4, k + 2) : kk - Rational(2, k + 1)) * Rational(n);
    const Rational degree_bound =
        (k % 2 == 0 ? Rational(k, 2) - Rational(2, k + 2) : Rational(k, 2) - Rational(1, k + 1)) *
        Rational(n);

    ConditionReport sum;
    sum.condition = ConditionId::ChenJacobsonDegreeSum;
    sum.conclusion = Conclusion::Hamiltonian;
    sum.bound = "d(u)+d(v) > " + rational_text(sum_bound) +
                " for nonadjacent u, v in different parts";
    const auto pair = weakest_pair(g, true);
    sum.satisfied = !pair || Rational(pair->degree_sum) > sum_bound;
    if (!sum.satisfied) sum.witness = *pair;

    ConditionReport deg;
    deg.condition = ConditionId::ChenJacobsonMinDegree;
    deg.conclusion = Conclusion::Hamiltonian;
    deg.bound = "d(v) > " + rational_text(degree_bound) + " for every v";
    const VertexWitness low = weakest_vertex(g);
    deg.satisfied = Rational(low.degree) > degree_bound;
    if (!deg.satisfied) deg.witness = low;
    return {sum, deg};
}

std::vector<ConditionReport> check_edge_thresholds(const KGraph& g) {
    const PartProfile& prof = g.profile();
    const std::int64_t p = g.order();
    const int k = prof.k();
    std::vector<ConditionReport> out;
    if (p >= 3) {
        const std::int64_t twice = p * p - 3 * p + 6;
        out.push_back(edge_report(ConditionId::EdgeGeneral, Conclusion::Pancyclic, g,
                                  (twice + 1) / 2,
                                  "||G|| >= " + rational_text(Rational(twice, 2))));
    }
    if (balanced_bipartite_profile(prof) && p >= 4) {
        const std::int64_t n = prof[0];
        out.push_back(edge_report(ConditionId::EdgeBipartite, Conclusion::Bipancyclic, g,
                                  n * n - n + 2, "||G|| >= n^2-n+2 = " + std::to_string(n * n - n + 2)));
    }
    if (k == 3 && prof.is_balanced() && prof[0] >= 2) {
        const std::int64_t n = prof[0];
        const std::int64_t need = 3 * n * n - 2 * n + 2;
        out.push_back(edge_report(ConditionId::EdgeTripartite, Conclusion::Hamiltonian, g, need,
                                  "||G|| >= 3n^2-2n+2 = " + std::to_string(need)));
    }
    if (k >= 3 && prof.is_balanced()) {
        const std::int64_t need = balanced_threshold(k, prof[0]);
        out.push_back(edge_report(ConditionId::EdgeBalanced, Conclusion::ChordedPancyclic, g, need,
                                  "||G|| >= ((k^2-k)n^2-2n(k-1)+4)/2 = " + std::to_string(need)));
    }
    if (k >= 3 && classify_case(prof) != CaseTag::Inadmissible) {
        const std::int64_t need = chorded_threshold(prof);
        out.push_back(edge_report(ConditionId::EdgeKPartite, Conclusion::ChordedPancyclic, g, need,
                                  "||G|| >= ||K|| - (p-n1-2) = " + std::to_string(need)));
    }
    return out;
}

bool is_complete_balanced_bipartite(const KGraph& g) {
    const int p = g.order();
    if (p < 2 || p % 2 != 0) return false;
    const int half = p / 2;
    if (std::int64_t{g.edge_count()} * 4 != std::int64_t{p} * p) return false;
    for (Vertex v = 0; v < p; ++v) {
        if (g.degree(v) != half) return false;
    }
    // Two-colour from vertex 0; a half-regular graph with p^2/4 edges is
    // complete bipartite exactly when the colouring succeeds.
    std::vector<int> colour(p, -1);
    std::vector<Vertex> stack{0};
    colour[0] = 0;
    while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        Bits nb = g.row(u);
        while (nb) {
            const Vertex v = std::countr_zero(nb);
            nb &= nb - 1;
            if (colour[v] == -1) {
                colour[v] = 1 - colour[u];
                stack.push_back(v);
            } else if (colour[v] == colour[u]) {
                return false;
            }
        }
    }
    return std::count(colour.begin(), colour.end(), 0) == half;
}

bool is_triangular_prism(const KGraph& g) {
    if (g.order() != 6 || g.edge_count() != 9) return false;
    for (Vertex v = 0; v < 6; ++v) {
        if (g.degree(v) != 3) return false;
    }
    int triangles = 0;
    for (Vertex a = 0; a < 6; ++a) {
        for (Vertex b = a + 1; b < 6; ++b) {
            for (Vertex c = b + 1; c < 6; ++c) {
                if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) ++triangles;
            }
        }
    }
    if (triangles != 2) return false;

    // Reference prism: triangles {0,1,2}, {3,4,5} and the matching i -- i+3.
    constexpr std::array<std::array<int, 2>, 9> prism{
        {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}};
    std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
    do {
        const bool all = std::all_of(prism.begin(), prism.end(), [&](const auto& e) {
            return g.adjacent(perm[e[0]], perm[e[1]]);
        });
        if (all) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

ConditionReport check_bondy_density(const KGraph& g) {
    const std::int64_t p = g.order();
    ConditionReport r;
    r.condition = ConditionId::BondyDensity;
    r.conclusion = Conclusion::ChordedPancyclic;
    r.bound = "||G|| >= p^2/4 = " + rational_text(Rational(p * p, 4)) +
              ", G not K_{p/2,p/2} or K3xK2";
    const std::int64_t m = g.edge_count();
    if (4 * m < p * p) {
        const std::int64_t need = (p * p + 3) / 4;
        r.satisfied = false;
        r.witness = EdgeDeficit{need, m, need - m};
        return r;
    }
    if (is_complete_balanced_bipartite(g)) {
        r.satisfied = false;
        r.witness = DensityException::CompleteBalancedBipartite;
        return r;
    }
    if (is_triangular_prism(g)) {
        r.satisfied = false;
        r.witness = DensityException::TriangularPrism;
        return r;
    }
    r.satisfied = true;
    return r;
}

}  // namespace kpan

#include "kpan/witnesses.hpp"

#include <stdexcept>

#include "kpan/thresholds.hpp"

namespace kpan {

std::string_view to_string(WitnessFamily f) {
    switch (f) {
        case WitnessFamily::Tightness: return "tightness";
        case WitnessFamily::Remark1: return "remark1";
        case WitnessFamily::Remark2: return "remark2";
        case WitnessFamily::Remark3: return "remark3";
    }
    return "?";
}

KGraph tightness_witness(const PartProfile& profile) {
    if (max_deletions(profile) < 0) {
        throw std::invalid_argument("profile " + profile.to_string() + " has no deletion budget");
    }
    const KGraph full = complete_kpartite(profile);
    // Vertex 0 lies in the largest part, so its degree p - n1 is minimum.
    Bits drop = full.row(0);
    drop &= drop - 1;  // keep the lowest neighbour
    EdgeSet del;
    while (drop) {
        const Vertex v = std::countr_zero(drop);
        drop &= drop - 1;
        del.add(Edge(0, v));
    }
    return delete_edges(full, del);
}

namespace {

/// G(a, b, 2) minus edges from the first `count` vertices of V1 to the first
/// vertex of V2.
KGraph star_removed(int a, int b, int count) {
    const PartProfile profile{a, b, 2};
    const Vertex u = a;
    EdgeSet del;
    for (Vertex v = 0; v < count; ++v) del.add(Edge(v, u));
    return delete_edges(complete_kpartite(profile), del);
}

}  // namespace

KGraph remark_family_1(int a) {
    if (a < 5) throw std::invalid_argument("remark family 1 needs a >= 5, got " + std::to_string(a));
    return star_removed(a, a - 2, a - 2);
}

KGraph remark_family_2(int a) {
    if (a < 3) throw std::invalid_argument("remark family 2 needs a >= 3, got " + std::to_string(a));
    return star_removed(a, a - 1, a - 1);
}

KGraph remark_family_3(int a) {
    if (a < 1) throw std::invalid_argument("remark family 3 needs a >= 1, got " + std::to_string(a));
    const int n = 4 * a;
    const PartProfile profile{n, n, 2};
    auto u = [&](int block, int i) { return (block - 1) * a + (i - 1); };
    auto v = [&](int block, int i) { return n + (block - 1) * a + (i - 1); };
    EdgeSet del;
    for (int i = 1; i <= a; ++i) {
        del.add(Edge(u(1, i), v(1, i)));
        del.add(Edge(u(2, i), v(2, i)));
        del.add(Edge(u(1, i), v(2, i)));
        del.add(Edge(u(2, i), v(1, i)));
    }
    return delete_edges(complete_kpartite(profile), del);
}

WitnessSpec witness_spec(WitnessFamily family, std::variant<PartProfile, int> parameter) {
    WitnessSpec spec{family, parameter, {}};
    if (family == WitnessFamily::Tightness) {
        const auto* profile = std::get_if<PartProfile>(&parameter);
        if (!profile) throw std::invalid_argument("tightness witness takes a profile");
        spec.expected.edge_count = chorded_threshold(*profile) - 1;
        spec.expected.hamiltonian = false;
        return spec;
    }
    const auto* a = std::get_if<int>(&parameter);
    if (!a) throw std::invalid_argument("remark families take an integer parameter");
    spec.expected.hamiltonian = true;
    switch (family) {
        case WitnessFamily::Remark1:
            spec.expected.edge_count = chorded_threshold(PartProfile{*a, *a - 2, 2});
            spec.expected.posa_failure_r = *a - 1;
            break;
        case WitnessFamily::Remark2:
            spec.expected.edge_count = chorded_threshold(PartProfile{*a, *a - 1, 2});
            spec.expected.posa_failure_r = *a;
            break;
        default:
            spec.expected.edge_count = complete_edge_count(PartProfile{4 * *a, 4 * *a, 2}) - 4 * *a;
            spec.expected.posa_failure_r = 4 * *a;
            break;
    }
    return spec;
}

KGraph build_witness(const WitnessSpec& spec) {
    switch (spec.family) {
        case WitnessFamily::Tightness: return tightness_witness(std::get<PartProfile>(spec.parameter));
        case WitnessFamily::Remark1: return remark_family_1(std::get<int>(spec.parameter));
        case WitnessFamily::Remark2: return remark_family_2(std::get<int>(spec.parameter));
        case WitnessFamily::Remark3: return remark_family_3(std::get<int>(spec.parameter));
    }
    throw std::invalid_argument("unknown witness family");
}

}  // namespace kpan

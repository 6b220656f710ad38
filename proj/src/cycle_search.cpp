#include "kpan/cycle_search.hpp"

#include <bit>
#include <stdexcept>

namespace kpan {

std::string_view to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Absent: return "absent";
        case SearchStatus::BudgetExceeded: return "budget_exceeded";
    }
    return "?";
}

std::string_view to_string(PancyclicityMode m) {
    switch (m) {
        case PancyclicityMode::Pancyclic: return "pancyclic";
        case PancyclicityMode::Bipancyclic: return "bipancyclic";
        case PancyclicityMode::Chorded: return "chorded";
    }
    return "?";
}

namespace {

struct BudgetExhausted {};

/// Backtracking enumerator for cycles of one fixed length.
///
/// The cycle is anchored at its smallest vertex `start`; only larger vertices
/// may follow. For spanning cycles every unvisited vertex must keep two
/// usable neighbours, otherwise the branch is cut.
class CycleWalker {
public:
    CycleWalker(const KGraph& g, int t, std::uint64_t budget, bool dedupe,
                const std::function<bool(std::span<const Vertex>)>& visit)
        : rows_(g.rows()), p_(g.order()), t_(t), budget_(budget), dedupe_(dedupe), visit_(visit) {
        path_.resize(t);
    }

    SearchStatus run() {
        try {
            for (Vertex s = 0; s + t_ <= p_; ++s) {
                start_ = s;
                allowed_ = ~((bit(s) << 1) - 1) & mask(p_);
                if (popcount(allowed_) < t_ - 1) break;
                path_[0] = s;
                if (extend(s, 1, bit(s))) return SearchStatus::Found;
            }
        } catch (const BudgetExhausted&) {
            return SearchStatus::BudgetExceeded;
        }
        return SearchStatus::Absent;
    }

    std::uint64_t expansions() const noexcept { return expansions_; }

private:
    static Bits mask(int n) { return n == 64 ? ~Bits{0} : (Bits{1} << n) - 1; }

    // Returns true when the visitor asked to stop.
    bool extend(Vertex cur, int depth, Bits used) {
        if (++expansions_ > budget_) throw BudgetExhausted{};
        if (depth == t_) {
            if (!((rows_[cur] >> start_) & 1U)) return false;
            if (dedupe_ && path_[1] > path_[t_ - 1]) return false;
            return !visit_(std::span<const Vertex>(path_.data(), t_));
        }
        const Bits free = allowed_ & ~used;
        if (popcount(free) < t_ - depth) return false;
        if (depth > 1 && !(rows_[start_] & free)) return false;  // no way back
        if (t_ == p_ && depth > 1 && !spanning_feasible(cur, free)) return false;

        Bits next = rows_[cur] & free;
        if (depth == t_ - 1) next &= rows_[start_];
        while (next) {
            const Vertex v = std::countr_zero(next);
            next &= next - 1;
            path_[depth] = v;
            if (extend(v, depth + 1, used | bit(v))) return true;
        }
        return false;
    }

    bool spanning_feasible(Vertex cur, Bits free) const {
        const Bits ends = bit(cur) | bit(start_);
        Bits rest = free;
        while (rest) {
            const Vertex w = std::countr_zero(rest);
            rest &= rest - 1;
            if (popcount(rows_[w] & (free | ends)) < 2) return false;
        }
        return true;
    }

    std::span<const Bits> rows_;
    int p_;
    int t_;
    std::uint64_t budget_;
    bool dedupe_;
    const std::function<bool(std::span<const Vertex>)>& visit_;
    std::vector<Vertex> path_;
    Vertex start_ = 0;
    Bits allowed_ = 0;
    std::uint64_t expansions_ = 0;
};

void check_length(const KGraph& g, int t, int lowest) {
    if (t < lowest || t > g.order()) {
        throw std::invalid_argument("cycle length " + std::to_string(t) + " outside [" +
                                    std::to_string(lowest) + ", " + std::to_string(g.order()) +
                                    "]");
    }
}

std::optional<Edge> first_chord(const KGraph& g, std::span<const Vertex> cycle) {
    const int t = static_cast<int>(cycle.size());
    Bits on_cycle = 0;
    for (Vertex v : cycle) on_cycle |= bit(v);
    for (int i = 0; i < t; ++i) {
        const Vertex v = cycle[i];
        const Bits sides = bit(cycle[(i + 1) % t]) | bit(cycle[(i + t - 1) % t]);
        const Bits chords = g.row(v) & on_cycle & ~sides;
        if (chords) return Edge(v, std::countr_zero(chords));
    }
    return std::nullopt;
}

SearchResult walk(const KGraph& g, int t, std::uint64_t budget, bool chorded) {
    SearchResult result;
    const std::function<bool(std::span<const Vertex>)> visit = [&](std::span<const Vertex> c) {
        std::optional<Edge> chord;
        if (chorded) {
            chord = first_chord(g, c);
            if (!chord) return true;
        }
        result.certificate = CycleCertificate{{c.begin(), c.end()}, chord};
        return false;
    };
    CycleWalker walker(g, t, budget, chorded, visit);
    result.status = walker.run();
    result.expansions = walker.expansions();
    return result;
}

}  // namespace

SearchResult find_hamiltonian_cycle(const KGraph& g, std::uint64_t budget) {
    if (g.order() < 3) throw std::invalid_argument("hamiltonian search needs order >= 3");
    return walk(g, g.order(), budget, false);
}

SearchResult find_cycle_of_length(const KGraph& g, int t, std::uint64_t budget) {
    check_length(g, t, 3);
    return walk(g, t, budget, false);
}

SearchResult find_chorded_cycle_of_length(const KGraph& g, int t, std::uint64_t budget) {
    check_length(g, t, 4);
    return walk(g, t, budget, true);
}

SearchStatus enumerate_cycles_of_length(const KGraph& g, int t,
                                        const std::function<bool(std::span<const Vertex>)>& visit,
                                        std::uint64_t budget, std::uint64_t* expansions) {
    check_length(g, t, 3);
    CycleWalker walker(g, t, budget, true, visit);
    const SearchStatus status = walker.run();
    if (expansions) *expansions = walker.expansions();
    return status;
}

namespace {

class PathWalker {
public:
    PathWalker(const KGraph& g, std::uint64_t budget)
        : rows_(g.rows()), p_(g.order()), budget_(budget), path_(g.order()) {}

    PathResult run() {
        PathResult result;
        const Bits all = p_ == 64 ? ~Bits{0} : (Bits{1} << p_) - 1;
        try {
            for (Vertex s = 0; s < p_; ++s) {
                path_[0] = s;
                if (extend(s, 1, all & ~bit(s))) {
                    result.status = SearchStatus::Found;
                    result.path = path_;
                    break;
                }
            }
        } catch (const BudgetExhausted&) {
            result.status = SearchStatus::BudgetExceeded;
        }
        result.expansions = expansions_;
        return result;
    }

private:
    bool extend(Vertex cur, int depth, Bits free) {
        if (++expansions_ > budget_) throw BudgetExhausted{};
        if (depth == p_) return true;
        // A vertex with one usable neighbour can only be the final vertex.
        int dead_ends = 0;
        Bits rest = free;
        while (rest) {
            const Vertex w = std::countr_zero(rest);
            rest &= rest - 1;
            const int usable = popcount(rows_[w] & (free | bit(cur)));
            if (usable == 0) return false;
            if (usable == 1 && ++dead_ends > 1) return false;
        }
        Bits next = rows_[cur] & free;
        while (next) {
            const Vertex v = std::countr_zero(next);
            next &= next - 1;
            path_[depth] = v;
            if (extend(v, depth + 1, free & ~bit(v))) return true;
        }
        return false;
    }

    std::span<const Bits> rows_;
    int p_;
    std::uint64_t budget_;
    std::vector<Vertex> path_;
    std::uint64_t expansions_ = 0;
};

}  // namespace

PathResult find_hamiltonian_path(const KGraph& g, std::uint64_t budget) {
    return PathWalker(g, budget).run();
}

namespace {

bool is_balanced_bipartite(const KGraph& g) {
    return g.profile().k() == 2 && g.profile()[0] == g.profile()[1];
}

}  // namespace

PancyclicityReport pancyclicity_report(const KGraph& g, PancyclicityMode mode,
                                       std::uint64_t budget, bool all_lengths) {
    const int p = g.order();
    int first = 3;
    int step = 1;
    switch (mode) {
        case PancyclicityMode::Pancyclic:
            if (p < 3) throw std::invalid_argument("pancyclicity needs order >= 3");
            break;
        case PancyclicityMode::Bipancyclic:
            if (p < 4 || !is_balanced_bipartite(g)) {
                throw std::invalid_argument("bipancyclicity applies to balanced bipartite graphs of order >= 4");
            }
            first = 4;
            step = 2;
            break;
        case PancyclicityMode::Chorded:
            if (p < 4) throw std::invalid_argument("chorded pancyclicity needs order >= 4");
            first = 4;
            break;
    }

    PancyclicityReport report;
    report.mode = mode;
    report.verdict = true;
    for (int t = first; t <= p; t += step) {
        SearchResult r = mode == PancyclicityMode::Chorded ? find_chorded_cycle_of_length(g, t, budget)
                                                           : find_cycle_of_length(g, t, budget);
        report.expansions += r.expansions;
        if (r.status == SearchStatus::BudgetExceeded) report.decided = false;
        const bool ok = r.found();
        report.per_length.emplace(t, std::move(r));
        if (!ok) {
            report.verdict = false;
            if (!all_lengths) break;
        }
    }
    report.decided = report.verdict;
    for (const auto& [t, r] : report.per_length) {
        if (r.status == SearchStatus::Absent) report.decided = true;
    }
    return report;
}

}  // namespace kpan

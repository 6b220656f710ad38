#include "kpan/verify.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "kpan/conditions.hpp"
#include "kpan/interchange.hpp"
#include "kpan/log.hpp"
#include "kpan/thresholds.hpp"

namespace kpan {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view to_string(GraphCheck c) {
    switch (c) {
        case GraphCheck::ChordedPancyclic: return "chorded_pancyclic";
        case GraphCheck::Hamiltonian: return "hamiltonian";
        case GraphCheck::Construction: return "construction";
    }
    return "?";
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t binomial_prefix_sum(std::uint64_t n, std::uint64_t m) {
    constexpr auto top = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    for (std::uint64_t j = 0; j <= m; ++j) {
        const std::uint64_t c = binomial(n, j);
        if (c == top || total > top - c) return top;
        total += c;
    }
    return total;
}

std::vector<std::uint32_t> colex_unrank(std::uint64_t rank, std::uint32_t size) {
    std::vector<std::uint32_t> out(size);
    for (std::uint32_t i = size; i-- > 0;) {
        // Largest c with C(c, i+1) <= rank.
        std::uint32_t c = i;
        while (binomial(c + 1, i + 1) <= rank) ++c;
        out[i] = c;
        rank -= binomial(c, i + 1);
    }
    return out;
}

void validate_plan(const VerifyPlan& plan) {
    const PartProfile& prof = plan.profile;
    if (prof.k() < 3) throw PlanError("verification needs k >= 3, got " + prof.to_string());
    if (classify_case(prof) == CaseTag::Inadmissible) {
        throw PlanError("profile " + prof.to_string() + " has n1 > p/2; no graph in it is hamiltonian");
    }
    if (plan.workers == 0) throw PlanError("workers must be at least 1");
    if (plan.mode == VerifyMode::Exhaustive) {
        const auto edges = static_cast<std::uint64_t>(complete_edge_count(prof));
        const auto depth = static_cast<std::uint64_t>(max_deletions(prof));
        const std::uint64_t count = binomial_prefix_sum(edges, depth);
        if (count > plan.cap) {
            throw PlanError("exhaustive enumeration of " + prof.to_string() + " needs " +
                            std::to_string(count) + " graphs, above the cap of " +
                            std::to_string(plan.cap));
        }
    }
}

VerifyRecord check_graph(const KGraph& g, std::vector<Edge> deleted, const VerifyPlan& plan) {
    VerifyRecord rec;
    rec.deleted = std::move(deleted);
    rec.edge_count = g.edge_count();
    rec.meets_threshold = g.edge_count() >= chorded_threshold(g.profile());
    if (!rec.meets_threshold) return rec;

    if (plan.checks.contains(GraphCheck::ChordedPancyclic) && g.order() >= 4) {
        PancyclicityReport report = pancyclicity_report(g, PancyclicityMode::Chorded, plan.budget);
        rec.expansions += report.expansions;
        for (const auto& [t, r] : report.per_length) {
            if (r.certificate && (r.certificate->length() != t || !r.certificate->chord ||
                                  !is_valid_certificate(g, *r.certificate))) {
                rec.invalid_certificate = true;
            }
        }
        if (!report.verdict) (report.decided ? rec.counterexample : rec.undecided) = true;
        rec.chorded = std::move(report);
    }
    if (plan.checks.contains(GraphCheck::Hamiltonian) && g.order() >= 3) {
        SearchResult r = find_hamiltonian_cycle(g, plan.budget);
        rec.expansions += r.expansions;
        if (r.status == SearchStatus::Absent) rec.counterexample = true;
        if (r.status == SearchStatus::BudgetExceeded) rec.undecided = true;
        if (r.certificate && (r.certificate->length() != g.order() ||
                              !is_valid_certificate(g, *r.certificate))) {
            rec.invalid_certificate = true;
        }
        rec.hamiltonian = std::move(r);
    }
    const CaseTag tag = classify_case(g.profile());
    if (plan.checks.contains(GraphCheck::Construction) &&
        (tag == CaseTag::EvenHalf || tag == CaseTag::OddHalf || tag == CaseTag::EvenHalfMinus1)) {
        rec.construction_ran = true;
        rec.construction = ham_by_construction(g, plan.budget);
        if (rec.construction) {
            rec.expansions += rec.construction->expansions;
            if (rec.construction->cycle.length() != g.order() ||
                !is_valid_certificate(g, rec.construction->cycle)) {
                rec.invalid_certificate = true;
            }
        } else {
            rec.construction_failed = true;
        }
    }
    return rec;
}

namespace {

struct Tally {
    VerifySummary summary;

    void add(const VerifyRecord& rec, const KGraph& base) {
        auto& s = summary;
        ++s.graphs_checked;
        if (rec.meets_threshold) ++s.asserted;
        if (rec.undecided) ++s.undecided;
        if (rec.invalid_certificate) ++s.invalid_certificates;
        if (rec.construction_failed) ++s.construction_failures;
        s.max_expansions = std::max(s.max_expansions, rec.expansions);
        if (rec.chorded) {
            for (const auto& [t, r] : rec.chorded->per_length) {
                if (r.certificate) ++s.certificates;
            }
        }
        if (rec.hamiltonian && rec.hamiltonian->certificate) ++s.certificates;
        if (rec.construction) {
            ++s.certificates;
            ++s.strategies[std::string(to_string(rec.construction->strategy))];
        }
        if (rec.counterexample) {
            ++s.counterexamples;
            EdgeSet del(rec.deleted);
            const json doc = graph_to_json(delete_edges(base, del));
            logger()->error("counterexample in {}: {}", s.profile.to_string(), doc.dump());
            s.counterexample_graphs.push_back(doc);
        }
    }
};

/// Evaluates ranks [0, total) in blocks; within a block the ranks are split
/// into contiguous slices, one per worker, and merged back in rank order.
template <typename MakeDeletion>
VerifySummary drive(const VerifyPlan& plan, std::uint64_t total, const MakeDeletion& deletion_for,
                    const RecordSink& sink) {
    const auto started = std::chrono::steady_clock::now();
    const KGraph base = complete_kpartite(plan.profile);

    Tally tally;
    tally.summary.profile = plan.profile;
    tally.summary.mode = plan.mode;
    tally.summary.expected_graphs = total;

    const unsigned workers = std::max(1U, plan.workers);
    const std::uint64_t block = 1024ULL * workers;
    std::vector<VerifyRecord> buffer;
    for (std::uint64_t lo = 0; lo < total; lo += block) {
        const std::uint64_t hi = std::min(total, lo + block);
        buffer.assign(hi - lo, VerifyRecord{});
        auto work = [&](std::uint64_t from, std::uint64_t to) {
            for (std::uint64_t rank = from; rank < to; ++rank) {
                std::vector<Edge> del = deletion_for(rank);
                const KGraph g = delete_edges(base, EdgeSet(del));
                VerifyRecord rec = check_graph(g, std::move(del), plan);
                rec.rank = rank;
                buffer[rank - lo] = std::move(rec);
            }
        };
        if (workers == 1) {
            work(lo, hi);
        } else {
            const std::uint64_t span = hi - lo;
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w) {
                const std::uint64_t from = lo + span * w / workers;
                const std::uint64_t to = lo + span * (w + 1) / workers;
                if (from < to) pool.emplace_back(work, from, to);
            }
        }
        for (const VerifyRecord& rec : buffer) {
            tally.add(rec, base);
            if (sink) sink(rec);
            if (rec.counterexample && plan.fail_fast) {
                tally.summary.aborted = true;
                break;
            }
        }
        if (tally.summary.aborted) break;
    }
    tally.summary.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return tally.summary;
}

std::vector<Edge> complete_edges(const PartProfile& profile) {
    return complete_kpartite(profile).edges();
}

}  // namespace

VerifySummary exhaustive_verify(const VerifyPlan& plan, const RecordSink& sink) {
    if (plan.mode != VerifyMode::Exhaustive) throw PlanError("plan is not exhaustive");
    validate_plan(plan);
    const std::vector<Edge> edges = complete_edges(plan.profile);
    const auto depth = static_cast<std::uint64_t>(max_deletions(plan.profile));
    // Rank offsets of each deletion-set size.
    std::vector<std::uint64_t> offsets{0};
    for (std::uint64_t j = 0; j <= depth; ++j) {
        offsets.push_back(offsets.back() + binomial(edges.size(), j));
    }
    auto deletion_for = [&](std::uint64_t rank) {
        const auto size = static_cast<std::uint32_t>(
            std::upper_bound(offsets.begin(), offsets.end(), rank) - offsets.begin() - 1);
        std::vector<Edge> del;
        for (std::uint32_t i : colex_unrank(rank - offsets[size], size)) del.push_back(edges[i]);
        return del;
    };
    return drive(plan, offsets.back(), deletion_for, sink);
}

VerifySummary random_verify(const VerifyPlan& plan, const RecordSink& sink) {
    if (plan.mode != VerifyMode::Random) throw PlanError("plan is not random");
    validate_plan(plan);
    const std::vector<Edge> edges = complete_edges(plan.profile);
    const auto depth = static_cast<int>(max_deletions(plan.profile));
    const int m = static_cast<int>(edges.size());

    // Samples are drawn up front on one generator so the stream does not
    // depend on the worker count.
    std::mt19937_64 rng(plan.seed);
    std::vector<std::vector<Edge>> samples;
    samples.reserve(plan.samples);
    for (std::uint64_t i = 0; i < plan.samples; ++i) {
        const int size = std::uniform_int_distribution<int>(0, std::min(depth, m))(rng);
        // Floyd's algorithm: a uniform size-subset of 0..m-1.
        std::set<int> chosen;
        for (int j = m - size; j < m; ++j) {
            const int t = std::uniform_int_distribution<int>(0, j)(rng);
            if (!chosen.insert(t).second) chosen.insert(j);
        }
        std::vector<Edge> del;
        for (int idx : chosen) del.push_back(edges[idx]);
        samples.push_back(std::move(del));
    }
    auto deletion_for = [&](std::uint64_t rank) { return samples[rank]; };
    return drive(plan, samples.size(), deletion_for, sink);
}

VerifySummary run_plan(const VerifyPlan& plan, const RecordSink& sink) {
    return plan.mode == VerifyMode::Exhaustive ? exhaustive_verify(plan, sink)
                                               : random_verify(plan, sink);
}

namespace {

ordered_json search_json(const SearchResult& r) {
    ordered_json out;
    out["status"] = to_string(r.status);
    if (r.certificate) out["cycle"] = r.certificate->cycle;
    return out;
}

}  // namespace

ordered_json record_to_json(const VerifyRecord& rec) {
    ordered_json out;
    out["deleted"] = edges_to_json(rec.deleted);
    out["edges"] = rec.edge_count;
    ordered_json checks = ordered_json::object();
    if (!rec.meets_threshold) checks["skipped"] = "below_threshold";
    if (rec.chorded) {
        ordered_json c;
        c["verdict"] = rec.chorded->verdict;
        ordered_json lengths = ordered_json::object();
        for (const auto& [t, r] : rec.chorded->per_length) {
            lengths[std::to_string(t)] =
                r.certificate ? ordered_json(certificate_to_json(*r.certificate))
                              : ordered_json{{"status", to_string(r.status)}};
        }
        c["certificates"] = std::move(lengths);
        checks["chorded_pancyclic"] = std::move(c);
    }
    if (rec.hamiltonian) checks["hamiltonian"] = search_json(*rec.hamiltonian);
    if (rec.construction_ran) {
        ordered_json c;
        c["ok"] = rec.construction.has_value();
        if (rec.construction) {
            c["strategy"] = to_string(rec.construction->strategy);
            c["cycle"] = rec.construction->cycle.cycle;
        }
        checks["construction"] = std::move(c);
    }
    out["checks"] = std::move(checks);
    out["expansions"] = rec.expansions;
    return out;
}

std::string summary_csv_header() {
    return "profile,graphs_checked,failures,max_expansions,wall_seconds";
}

std::string summary_csv_row(const VerifySummary& s) {
    std::ostringstream os;
    os << '"' << s.profile.to_string() << "\"," << s.graphs_checked << ','
       << (s.counterexamples + s.undecided + s.invalid_certificates + s.construction_failures) << ','
       << s.max_expansions << ',' << s.wall_seconds;
    return os.str();
}

ordered_json summary_to_json(const VerifySummary& s) {
    ordered_json out;
    out["profile"] = s.profile.parts();
    out["mode"] = s.mode == VerifyMode::Exhaustive ? "exhaustive" : "random";
    out["expected_graphs"] = s.expected_graphs;
    out["graphs_checked"] = s.graphs_checked;
    out["asserted"] = s.asserted;
    out["counterexamples"] = s.counterexamples;
    out["undecided"] = s.undecided;
    out["invalid_certificates"] = s.invalid_certificates;
    out["construction_failures"] = s.construction_failures;
    out["certificates"] = s.certificates;
    out["max_expansions"] = s.max_expansions;
    out["strategies"] = s.strategies;
    out["counterexample_graphs"] = s.counterexample_graphs;
    out["aborted"] = s.aborted;
    out["ok"] = s.ok();
    return out;
}

std::vector<VerifyPlan> plans_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("plans") || !doc["plans"].is_array()) {
        throw PlanError("config needs a \"plans\" array");
    }
    std::vector<VerifyPlan> plans;
    for (const json& item : doc["plans"]) {
        VerifyPlan plan;
        try {
            plan.profile = PartProfile(item.at("parts").get<std::vector<int>>());
            const std::string mode = item.value("mode", "exhaustive");
            if (mode == "exhaustive") {
                plan.mode = VerifyMode::Exhaustive;
            } else if (mode == "random") {
                plan.mode = VerifyMode::Random;
            } else {
                throw PlanError("unknown mode \"" + mode + "\"");
            }
            plan.samples = item.value("samples", std::uint64_t{0});
            plan.seed = item.value("seed", std::uint64_t{0});
            plan.budget = item.value("budget", kDefaultBudget);
            plan.workers = item.value("workers", 1U);
            plan.cap = item.value("cap", kDefaultEnumerationCap);
            plan.fail_fast = item.value("fail_fast", false);
            if (item.contains("checks")) {
                plan.checks.clear();
                for (const auto& name : item["checks"].get<std::vector<std::string>>()) {
                    bool known = false;
                    for (GraphCheck c : {GraphCheck::ChordedPancyclic, GraphCheck::Hamiltonian,
                                         GraphCheck::Construction}) {
                        if (to_string(c) == name) {
                            plan.checks.insert(c);
                            known = true;
                        }
                    }
                    if (!known) throw PlanError("unknown check \"" + name + "\"");
                }
            }
        } catch (const json::exception& e) {
            throw PlanError(std::string("bad plan entry: ") + e.what());
        }
        plans.push_back(std::move(plan));
    }
    return plans;
}

std::vector<TightnessRow> tightness_suite(const std::vector<PartProfile>& profiles,
                                          std::uint64_t budget) {
    std::vector<TightnessRow> rows;
    for (const PartProfile& prof : profiles) {
        TightnessRow row;
        row.profile = prof;
        const KGraph g = tightness_witness(prof);
        row.edges = g.edge_count();
        row.expected_edges = chorded_threshold(prof) - 1;
        row.hamiltonian = find_hamiltonian_cycle(g, budget).status;
        row.ok = row.edges == row.expected_edges && row.hamiltonian == SearchStatus::Absent;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<PosaGapRow> posa_gap_suite(const std::vector<std::pair<WitnessFamily, int>>& cases,
                                       std::uint64_t budget) {
    std::vector<PosaGapRow> rows;
    for (const auto& [family, a] : cases) {
        PosaGapRow row;
        row.family = family;
        row.a = a;
        const WitnessSpec spec = witness_spec(family, a);
        const KGraph g = build_witness(spec);
        row.edges = g.edge_count();
        row.threshold = chorded_threshold(g.profile());
        row.expected_r = spec.expected.posa_failure_r.value_or(0);
        const ConditionReport posa = check_posa(g);
        if (!posa.satisfied && posa.witness) {
            row.posa_failure_r = std::get<PosaWitness>(*posa.witness).r;
        }
        SearchResult ham = find_hamiltonian_cycle(g, budget);
        row.hamiltonian = ham.status;
        row.cycle = ham.certificate;
        row.ok = row.edges >= row.threshold && row.edges == spec.expected.edge_count &&
                 row.posa_failure_r == row.expected_r && ham.found() &&
                 is_valid_certificate(g, *ham.certificate);
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

void partitions(int remaining, int max_part, std::vector<int>& cur,
                const std::function<void(const std::vector<int>&)>& visit) {
    if (remaining == 0) {
        visit(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions(remaining - part, part, cur, visit);
        cur.pop_back();
    }
}

}  // namespace

CrosscheckSummary formula_crosscheck(int kmax, int nmax, int pmax) {
    CrosscheckSummary out;
    auto record = [&](const std::string& identity, const std::string& instance, bool ok,
                      bool exception = false) {
        ++out.checked;
        if (!ok) ++out.failed;
        if (!ok || exception) out.findings.push_back({identity, instance, ok, exception});
    };
    auto kn = [](std::int64_t k, std::int64_t n) {
        return "k=" + std::to_string(k) + ",n=" + std::to_string(n);
    };

    for (std::int64_t n = 1; n <= nmax; ++n) {
        record("balanced_threshold(3,n) = 3n^2-2n+2", kn(3, n),
               balanced_threshold(3, n) == 3 * n * n - 2 * n + 2);
        record("balanced_threshold(2,n) = n^2-n+2", kn(2, n), balanced_threshold(2, n) == n * n - n + 2);
        const PartProfile pair{static_cast<int>(n), static_cast<int>(n)};
        if (max_deletions(pair) >= 0) {
            record("chorded_threshold((n,n)) = n^2-n+2", kn(2, n), chorded_threshold(pair) == n * n - n + 2);
        }
    }
    for (std::int64_t k = 2; k <= kmax; ++k) {
        for (std::int64_t n = 1; n <= nmax; ++n) {
            const PartProfile prof = PartProfile::balanced(static_cast<int>(k), static_cast<int>(n));
            if (prof.order() > kMaxVertices || max_deletions(prof) < 0) continue;
            record("chorded_threshold([n]*k) = balanced_threshold(k,n)", kn(k, n),
                   chorded_threshold(prof) == balanced_threshold(k, n));
            if (k < 3) continue;
            // (k^2-k)n^2 - 2n(k-1) = (k-1)n(nk-2)
            const std::int64_t lhs = (k * k - k) * n * n - 2 * n * (k - 1);
            record("(k^2-k)n^2-2n(k-1) = (k-1)n(kn-2)", kn(k, n), lhs == (k - 1) * n * (n * k - 2));
            // 2 * lhs > (kn-2)(kn+2) fails exactly for the listed small cases,
            // where the +4 version still holds.
            const bool listed = (k == 4 && n == 1) || (k == 3 && (n == 1 || n == 2));
            const bool strict = 2 * lhs > (k * n - 2) * (k * n + 2);
            const bool with_four = 2 * (lhs + 4) > (k * n - 2) * (k * n + 2);
            if (listed) {
                record("(k^2-k)n^2-2n(k-1) > (kn-2)(kn+2)/2 fails only at listed cases", kn(k, n),
                       !strict && with_four, true);
            } else {
                record("(k^2-k)n^2-2n(k-1) > (kn-2)(kn+2)/2", kn(k, n), strict);
            }
        }
    }
    std::vector<int> cur;
    for (int p = 2; p <= pmax; ++p) {
        partitions(p, p, cur, [&](const std::vector<int>& parts) {
            if (parts.size() < 2) return;
            const PartProfile prof(parts);
            if (max_deletions(prof) < 0) return;
            const std::string name = "(" + prof.to_string() + ")";
            const std::int64_t threshold = chorded_threshold(prof);
            record("chorded_threshold = complete_edge_count - max_deletions", name,
                   threshold == complete_edge_count(prof) - max_deletions(prof));
            if (prof.k() >= 3 && classify_case(prof) != CaseTag::Inadmissible) {
                const std::int64_t pp = prof.order();
                record("chorded_threshold >= p^2/4", name, 4 * threshold >= pp * pp);
            }
        });
    }
    return out;
}

}  // namespace kpan

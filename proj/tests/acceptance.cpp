// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "kpan/cli.hpp"
#include "kpan/construction.hpp"
#include "kpan/cycle_search.hpp"
#include "kpan/thresholds.hpp"
#include "kpan/verify.hpp"
#include "kpan/witnesses.hpp"
#include "oracle.hpp"

using namespace kpan;
namespace fs = std::filesystem;

namespace {

const std::vector<PartProfile> kGrid{{1, 1, 1, 1}, {2, 2, 2}, {3, 2, 2}, {2, 2, 2, 2},
                                     {3, 3, 3},    {4, 4, 2}, {5, 3, 2}};

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (!pass) detail << "; ";
            else detail.str("");
            pass = false;
            detail << what;
        }
    }
};

int failures = 0;

void report(int n, const std::string& title, Outcome& o, double seconds) {
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << "  ("
              << o.detail.str() << ", " << std::fixed;
    std::cout.precision(2);
    std::cout << seconds << "s)" << std::endl;
    if (!o.pass) ++failures;
}

template <typename F>
void criterion(int n, const std::string& title, F&& body) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(n, title, o, s);
}

std::uint64_t expected_count(const PartProfile& prof) {
    const int m = static_cast<int>(oracle::cross_pairs(prof.parts()));
    std::uint64_t total = 0;
    for (int j = 0; j <= max_deletions(prof); ++j) total += oracle::choose(m, j);
    return total;
}

bool chorded_certificates_complete(const KGraph& g, const VerifyRecord& r) {
    if (!r.chorded || !r.chorded->verdict) return false;
    for (int t = 4; t <= g.order(); ++t) {
        const auto it = r.chorded->per_length.find(t);
        if (it == r.chorded->per_length.end() || !it->second.certificate) return false;
        const CycleCertificate& c = *it->second.certificate;
        if (c.length() != t || !c.chord) return false;
        const std::vector<Vertex> chord{c.chord->u, c.chord->v};
        if (!oracle::valid_cycle(g, c.cycle, &chord)) return false;
    }
    return true;
}

KGraph graph_of(const PartProfile& prof, const std::vector<Edge>& deleted) {
    return delete_edges(complete_kpartite(prof), EdgeSet(deleted));
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

int main() {
    criterion(1, "exhaustive verification of the main theorem", [](Outcome& o) {
        std::uint64_t graphs = 0;
        for (const PartProfile& prof : kGrid) {
            VerifyPlan plan;
            plan.profile = prof;
            std::uint64_t complete = 0;
            const VerifySummary s = exhaustive_verify(plan, [&](const VerifyRecord& r) {
                const KGraph g = graph_of(prof, r.deleted);
                if (r.meets_threshold && chorded_certificates_complete(g, r) && r.hamiltonian &&
                    r.hamiltonian->certificate && oracle::valid_cycle(g, r.hamiltonian->certificate->cycle))
                    ++complete;
            });
            const std::uint64_t want = expected_count(prof);
            o.require(s.graphs_checked == want, prof.to_string() + " checked " +
                                                    std::to_string(s.graphs_checked) + " want " +
                                                    std::to_string(want));
            o.require(complete == want, prof.to_string() + " certified " + std::to_string(complete));
            o.require(s.counterexamples == 0, prof.to_string() + " counterexamples");
            o.require(s.ok(), prof.to_string() + " summary not ok");
            graphs += s.graphs_checked;
        }
        o.require(expected_count({2, 2, 2}) == 79 && expected_count({3, 2, 2}) == 137, "reference counts");
        if (o.pass) o.detail << graphs << " graphs over 7 profiles, 0 counterexamples";
    });

    criterion(2, "tightness witnesses", [](Outcome& o) {
        for (const TightnessRow& row : tightness_suite(kGrid)) {
            const std::int64_t want = chorded_threshold(row.profile) - 1;
            o.require(row.ok && row.edges == want && row.hamiltonian == SearchStatus::Absent,
                      row.profile.to_string());
            o.require(!oracle::hamiltonian(tightness_witness(row.profile)),
                      row.profile.to_string() + " hamiltonian by brute force");
        }
        if (o.pass) o.detail << kGrid.size() << " profiles at threshold-1, none hamiltonian";
    });

    criterion(3, "Posa-gap families", [](Outcome& o) {
        std::vector<std::pair<WitnessFamily, int>> cases;
        std::map<WitnessFamily, std::function<int(int)>> expected_r{
            {WitnessFamily::Remark1, [](int a) { return a - 1; }},
            {WitnessFamily::Remark2, [](int a) { return a; }},
            {WitnessFamily::Remark3, [](int a) { return 4 * a; }}};
        for (int a : {5, 6, 7}) cases.emplace_back(WitnessFamily::Remark1, a);
        for (int a : {3, 4, 5}) cases.emplace_back(WitnessFamily::Remark2, a);
        for (int a : {1, 2}) cases.emplace_back(WitnessFamily::Remark3, a);
        const auto rows = posa_gap_suite(cases);
        o.require(rows.size() == cases.size(), "row count");
        for (const PosaGapRow& row : rows) {
            const std::string tag = std::string(to_string(row.family)) + " a=" + std::to_string(row.a);
            o.require(row.ok, tag);
            o.require(row.edges >= row.threshold, tag + " below threshold");
            o.require(row.posa_failure_r == expected_r[row.family](row.a), tag + " r");
            o.require(row.hamiltonian == SearchStatus::Found && row.cycle &&
                          oracle::valid_cycle(build_witness(witness_spec(row.family, row.a)), row.cycle->cycle),
                      tag + " cycle");
        }
        if (o.pass) o.detail << rows.size() << " family members";
    });

    criterion(4, "formula identities", [](Outcome& o) {
        for (std::int64_t n = 1; n <= 8; ++n) {
            o.require(balanced_threshold(3, n) == 3 * n * n - 2 * n + 2, "k=3 n=" + std::to_string(n));
            o.require(balanced_threshold(2, n) == n * n - n + 2, "k=2 n=" + std::to_string(n));
            for (int k = 2; k <= 8; ++k) {
                const PartProfile prof(std::vector<int>(k, static_cast<int>(n)));
                const std::string tag = "k=" + std::to_string(k) + " n=" + std::to_string(n);
                const std::int64_t by_pairs = oracle::cross_pairs(prof.parts());
                o.require(balanced_threshold(k, n) == by_pairs - max_deletions(prof), "pairs " + tag);
                if (max_deletions(prof) < 0) {
                    // Only (1,1): no deletion budget, so the threshold is undefined there.
                    bool rejected = false;
                    try {
                        (void)chorded_threshold(prof);
                    } catch (const std::domain_error&) {
                        rejected = true;
                    }
                    o.require(rejected && k == 2 && n == 1, "no-budget profile " + tag);
                    continue;
                }
                o.require(balanced_threshold(k, n) == chorded_threshold(prof), tag);
                if (k == 2) o.require(chorded_threshold(prof) == n * n - n + 2, "(n,n) n=" + std::to_string(n));
            }
        }
        const CrosscheckSummary x = formula_crosscheck(8, 8, 16);
        o.require(x.ok(), "crosscheck failed=" + std::to_string(x.failed));
        if (o.pass) o.detail << x.checked << " crosscheck identities";
    });

    criterion(5, "exception graphs", [](Outcome& o) {
        const KGraph k33 = complete_kpartite({3, 3});
        o.require(k33.edge_count() == 9 && 4 * k33.edge_count() == k33.order() * k33.order(), "K33 size");
        o.require(find_hamiltonian_cycle(k33).found() && oracle::hamiltonian(k33), "K33 hamiltonian");
        o.require(find_cycle_of_length(k33, 5).status == SearchStatus::Absent && !oracle::cycle_facts(k33, 5).cycle,
                  "K33 5-cycle");
        o.require(!pancyclicity_report(k33, PancyclicityMode::Pancyclic).verdict, "K33 pancyclic");

        const KGraph prism(PartProfile(std::vector<int>(6, 1)),
                           {Edge{0, 1}, Edge{1, 2}, Edge{0, 2}, Edge{3, 4}, Edge{4, 5}, Edge{3, 5}, Edge{0, 3},
                            Edge{1, 4}, Edge{2, 5}});
        o.require(prism.edge_count() == 9, "prism size");
        o.require(find_hamiltonian_cycle(prism).found(), "prism hamiltonian");
        o.require(pancyclicity_report(prism, PancyclicityMode::Pancyclic).verdict, "prism pancyclic");
        int squares = 0;
        int chorded = 0;
        const SearchStatus st = enumerate_cycles_of_length(prism, 4, [&](std::span<const Vertex> c) {
            ++squares;
            if (oracle::adj(prism, c[0], c[2]) || oracle::adj(prism, c[1], c[3])) ++chorded;
            return true;
        });
        o.require(st != SearchStatus::BudgetExceeded && squares == 3 && chorded == 0, "prism squares");
        o.require(!oracle::cycle_facts(prism, 4).chorded, "prism chorded 4-cycle by brute force");
        o.require(!pancyclicity_report(prism, PancyclicityMode::Chorded).verdict, "prism chorded pancyclic");
        if (o.pass) o.detail << "K33 lacks C5; prism has " << squares << " chordless 4-cycles";
    });

    criterion(6, "search agrees with brute force", [](Outcome& o) {
        std::mt19937_64 rng(20261018);
        int comparisons = 0;
        for (int i = 0; i < 200; ++i) {
            const PartProfile prof = oracle::random_profile(rng, 3, 8);
            const double keep = std::uniform_real_distribution<double>(0.3, 1.0)(rng);
            const KGraph g = oracle::random_graph(prof, rng, keep);
            for (int t = 3; t <= g.order(); ++t) {
                const oracle::CycleFacts f = oracle::cycle_facts(g, t);
                const SearchResult c = find_cycle_of_length(g, t);
                o.require(c.status != SearchStatus::BudgetExceeded, "budget");
                o.require(c.found() == f.cycle, "cycle t=" + std::to_string(t) + " graph " + std::to_string(i));
                if (c.found()) o.require(oracle::valid_cycle(g, c.certificate->cycle), "cycle certificate");
                ++comparisons;
                if (t < 4) continue;
                const SearchResult h = find_chorded_cycle_of_length(g, t);
                o.require(h.found() == f.chorded, "chorded t=" + std::to_string(t) + " graph " + std::to_string(i));
                if (h.found()) {
                    const std::vector<Vertex> chord{h.certificate->chord->u, h.certificate->chord->v};
                    o.require(oracle::valid_cycle(g, h.certificate->cycle, &chord), "chorded certificate");
                }
                ++comparisons;
            }
        }
        if (o.pass) o.detail << comparisons << " comparisons on 200 graphs";
    });

    criterion(7, "constructive algorithms", [](Outcome& o) {
        std::map<std::string, std::uint64_t> strategies;
        std::uint64_t constructed = 0;
        std::uint64_t splices = 0;
        for (const PartProfile& prof : {PartProfile{5, 3, 2}, PartProfile{3, 2, 2}, PartProfile{4, 4, 2}}) {
            VerifyPlan plan;
            plan.profile = prof;
            plan.checks = {GraphCheck::Hamiltonian};
            exhaustive_verify(plan, [&](const VerifyRecord& r) {
                const KGraph g = graph_of(prof, r.deleted);
                const auto built = ham_by_construction(g);
                const bool ok = built && built->cycle.length() == g.order() &&
                                oracle::valid_cycle(g, built->cycle.cycle) && is_valid_certificate(g, built->cycle);
                o.require(ok, "construction " + prof.to_string() + " rank " + std::to_string(r.rank));
                if (built) ++strategies[std::string(to_string(built->strategy))];
                ++constructed;

                // Every legal splice into a spanning cycle of G-w.
                for (Vertex w = 0; w < g.order(); ++w) {
                    std::vector<Vertex> keep;
                    for (Vertex v = 0; v < g.order(); ++v) {
                        if (v != w) keep.push_back(v);
                    }
                    const InducedSubgraph sub = induced_subgraph(g, keep);
                    SearchResult core = find_hamiltonian_cycle(sub.graph);
                    if (!core.found()) continue;
                    CycleCertificate cycle = *core.certificate;
                    for (Vertex& v : cycle.cycle) v = sub.original[v];
                    for (const Edge& e : g.edges()) {
                        if (e.u == w || e.v == w) continue;
                        CycleCertificate out;
                        try {
                            out = splice_through_vertex(cycle, w, e, g);
                        } catch (const std::invalid_argument&) {
                            continue;
                        }
                        ++splices;
                        o.require(out.length() == g.order() && oracle::valid_cycle(g, out.cycle) &&
                                      is_valid_certificate(g, out),
                                  "splice " + prof.to_string());
                    }
                }
            });
        }
        o.require(splices > 0, "no splice exercised");
        if (o.pass) {
            o.detail << constructed << " constructions (";
            bool first = true;
            for (const auto& [name, count] : strategies) {
                o.detail << (first ? "" : " ") << name << "=" << count;
                first = false;
            }
            o.detail << "), " << splices << " splices validated";
        }
    });

    criterion(8, "verify output is deterministic", [](Outcome& o) {
        setenv("KPAN_LOG", "quiet", 1);
        const fs::path dir = fs::temp_directory_path() / "kpan_acceptance_determinism";
        fs::remove_all(dir);
        fs::create_directories(dir);
        const std::vector<std::vector<std::string>> runs{
            {"verify", "--parts", "3,2,2", "--mode", "exhaustive"},
            {"verify", "--parts", "5,3,2", "--mode", "random", "--samples", "300", "--seed", "11"}};
        int compared = 0;
        for (std::size_t i = 0; i < runs.size(); ++i) {
            std::string reference;
            for (const char* workers : {"1", "1", "2", "3", "3", "8"}) {
                const fs::path out = dir / ("run" + std::to_string(i) + "_" + workers + ".jsonl");
                std::vector<std::string> args = runs[i];
                args.insert(args.end(), {"--workers", workers, "--out", out.string()});
                std::ostringstream sout;
                std::ostringstream serr;
                o.require(cli::run(args, sout, serr) == cli::kExitOk, "exit code: " + serr.str());
                const std::string bytes = slurp(out);
                if (reference.empty()) reference = bytes;
                o.require(!bytes.empty() && bytes == reference, "run " + std::to_string(i) + " workers " + workers);
                ++compared;
            }
        }
        fs::remove_all(dir);
        if (o.pass) o.detail << compared << " runs byte-identical";
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}

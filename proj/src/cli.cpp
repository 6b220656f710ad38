#include "kpan/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "kpan/conditions.hpp"
#include "kpan/construction.hpp"
#include "kpan/cycle_search.hpp"
#include "kpan/interchange.hpp"
#include "kpan/log.hpp"
#include "kpan/thresholds.hpp"
#include "kpan/verify.hpp"
#include "kpan/witnesses.hpp"

namespace kpan::cli {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

/// Input problems that map to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class AtomicFile {
public:
    explicit AtomicFile(std::string path)
        : path_(std::move(path)), temp_(path_ + ".tmp." + std::to_string(::getpid())) {
        stream_.open(temp_, std::ios::binary | std::ios::trunc);
        if (!stream_) throw InputError("cannot write " + temp_);
    }
    AtomicFile(const AtomicFile&) = delete;
    AtomicFile& operator=(const AtomicFile&) = delete;
    ~AtomicFile() {
        if (!committed_) {
            stream_.close();
            std::error_code ec;
            std::filesystem::remove(temp_, ec);
        }
    }

    std::ostream& stream() { return stream_; }

    void commit() {
        stream_.flush();
        if (!stream_) throw InputError("write to " + temp_ + " failed");
        stream_.close();
        std::filesystem::rename(temp_, path_);
        committed_ = true;
    }

private:
    std::string path_;
    std::string temp_;
    std::ofstream stream_;
    bool committed_ = false;
};

PartProfile parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != item.size()) throw InputError("bad part size \"" + item + "\" in \"" + text + "\"");
        parts.push_back(value);
    }
    PartProfile profile(parts);
    if (profile.was_reordered()) {
        logger()->warn("parts {} reordered to {}", text, profile.to_string());
    }
    return profile;
}

KGraph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    KGraph g = parse_graph(text);
    if (g.profile().was_reordered()) {
        logger()->warn("parts of {} reordered to {}; vertices relabelled", path,
                       g.profile().to_string());
    }
    return g;
}

std::string join(const std::vector<Vertex>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(vs[i]);
    }
    return s;
}

// threshold / classify

int cmd_threshold(const std::string& parts, bool as_json, std::ostream& out) {
    const PartProfile prof = parse_parts(parts);
    if (prof.k() < 2) throw InputError("a k-partite profile needs at least two parts");
    const ThresholdSheet sheet = threshold_sheet(prof);
    if (as_json) {
        ordered_json doc;
        doc["parts"] = prof.parts();
        doc["complete"] = sheet.complete_edges;
        doc["max_deletions"] = sheet.max_deletions;
        doc["threshold"] = sheet.threshold ? json(*sheet.threshold) : json(nullptr);
        doc["min_degree_complete"] = sheet.min_degree_complete;
        doc["case"] = to_string(sheet.case_tag);
        doc["vacuous"] = sheet.vacuous;
        out << doc.dump() << '\n';
    } else {
        out << "complete=" << sheet.complete_edges << " max_deletions=" << sheet.max_deletions
            << " threshold=" << (sheet.threshold ? std::to_string(*sheet.threshold) : "none")
            << " case=" << to_string(sheet.case_tag) << '\n';
    }
    return kExitOk;
}

int cmd_classify(const std::string& parts, bool as_json, std::ostream& out) {
    const PartProfile prof = parse_parts(parts);
    if (prof.k() < 2) throw InputError("a k-partite profile needs at least two parts");
    const CaseTag tag = classify_case(prof);
    if (as_json) {
        ordered_json doc;
        doc["parts"] = prof.parts();
        doc["case"] = to_string(tag);
        out << doc.dump() << '\n';
    } else {
        out << to_string(tag) << '\n';
    }
    return kExitOk;
}

// check

ordered_json witness_json(const ConditionWitness& w) {
    ordered_json doc;
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PairWitness>) {
                doc = {{"kind", "pair"}, {"u", x.u}, {"v", x.v}, {"degree_sum", x.degree_sum}};
            } else if constexpr (std::is_same_v<T, VertexWitness>) {
                doc = {{"kind", "vertex"}, {"v", x.v}, {"degree", x.degree}};
            } else if constexpr (std::is_same_v<T, PosaWitness>) {
                doc = {{"kind", "posa"}, {"r", x.r}, {"vertices", x.vertices}};
            } else if constexpr (std::is_same_v<T, EdgeDeficit>) {
                doc = {{"kind", "edge_deficit"},
                       {"required", x.required},
                       {"actual", x.actual},
                       {"deficit", x.deficit}};
            } else {
                doc = {{"kind", "exception"}, {"graph", to_string(x)}};
            }
        },
        w);
    return doc;
}

std::string witness_text(const ConditionWitness& w) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PairWitness>) {
                return "pair " + std::to_string(x.u) + "," + std::to_string(x.v) +
                       " degree_sum=" + std::to_string(x.degree_sum);
            } else if constexpr (std::is_same_v<T, VertexWitness>) {
                return "vertex " + std::to_string(x.v) + " degree=" + std::to_string(x.degree);
            } else if constexpr (std::is_same_v<T, PosaWitness>) {
                return "r=" + std::to_string(x.r) + " vertices=" + join(x.vertices);
            } else if constexpr (std::is_same_v<T, EdgeDeficit>) {
                return "edges=" + std::to_string(x.actual) + " required=" + std::to_string(x.required) +
                       " deficit=" + std::to_string(x.deficit);
            } else {
                return std::string("exception ") + std::string(to_string(x));
            }
        },
        w);
}

std::vector<ConditionReport> run_condition(const KGraph& g, const std::string& name,
                                           std::uint64_t budget) {
    if (name == "ore") return {check_ore(g)};
    if (name == "dirac") return {check_dirac(g)};
    if (name == "posa") return {check_posa(g)};
    if (name == "moonmoser") return {check_moon_moser(g)};
    if (name == "chenjacobson") return check_chen_jacobson(g);
    if (name == "edges") return check_edge_thresholds(g);
    // bondy: the density test presupposes a hamiltonian graph.
    if (g.order() >= 3 && find_hamiltonian_cycle(g, budget).found()) return {check_bondy_density(g)};
    ConditionReport r;
    r.condition = ConditionId::BondyDensity;
    r.applicable = false;
    r.conclusion = Conclusion::ChordedPancyclic;
    r.bound = "graph is not hamiltonian";
    return {r};
}

int cmd_check(const std::string& path, const std::string& condition, bool assert_mode,
              bool as_json, std::uint64_t budget, std::ostream& out) {
    const KGraph g = load_graph(path);
    const std::vector<ConditionReport> reports = run_condition(g, condition, budget);
    bool failed = false;
    ordered_json doc = ordered_json::array();
    for (const ConditionReport& r : reports) {
        if (r.applicable && !r.satisfied) failed = true;
        if (as_json) {
            ordered_json item;
            item["condition"] = to_string(r.condition);
            item["applicable"] = r.applicable;
            item["satisfied"] = r.satisfied;
            item["conclusion"] = to_string(r.conclusion);
            item["bound"] = r.bound;
            item["witness"] = r.witness ? witness_json(*r.witness) : ordered_json(nullptr);
            doc.push_back(std::move(item));
        } else {
            out << to_string(r.condition) << ": ";
            if (!r.applicable) {
                out << "not applicable (" << r.bound << ")\n";
                continue;
            }
            out << (r.satisfied ? "holds" : "fails");
            if (r.witness) out << " at " << witness_text(*r.witness);
            out << " [" << r.bound << "]";
            if (r.satisfied) out << " => " << to_string(r.conclusion);
            out << '\n';
        }
    }
    if (reports.empty() && !as_json) out << condition << ": not applicable to this profile\n";
    if (as_json) out << doc.dump() << '\n';
    return assert_mode && failed ? kExitRefuted : kExitOk;
}

// search

ordered_json result_json(const SearchResult& r) {
    ordered_json doc;
    doc["status"] = to_string(r.status);
    doc["certificate"] =
        r.certificate ? ordered_json(certificate_to_json(*r.certificate)) : ordered_json(nullptr);
    doc["expansions"] = r.expansions;
    return doc;
}

void print_result(const std::string& label, const SearchResult& r, std::ostream& out) {
    out << label << ": " << to_string(r.status);
    if (r.certificate) {
        out << " cycle=" << join(r.certificate->cycle);
        if (r.certificate->chord) out << " chord=" << to_string(*r.certificate->chord);
    }
    out << " expansions=" << r.expansions << '\n';
}

int search_exit(SearchStatus s) {
    return s == SearchStatus::Found ? kExitOk : kExitRefuted;
}

struct SearchRequest {
    bool ham = false;
    std::optional<int> cycle;
    std::optional<int> chorded;
    bool pancyclic = false;
    bool bipancyclic = false;
    bool chorded_pancyclic = false;
};

int cmd_search(const std::string& path, const SearchRequest& req, std::uint64_t budget,
               bool as_json, std::ostream& out) {
    const int chosen = int{req.ham} + int{req.cycle.has_value()} + int{req.chorded.has_value()} +
                       int{req.pancyclic} + int{req.bipancyclic} + int{req.chorded_pancyclic};
    if (chosen != 1) {
        throw InputError(
            "choose exactly one of --ham, --cycle, --chorded, --pancyclic, --bipancyclic, "
            "--chorded-pancyclic");
    }
    const KGraph g = load_graph(path);
    std::optional<SearchResult> single;
    std::string label;
    if (req.ham) {
        single = find_hamiltonian_cycle(g, budget);
        label = "hamiltonian";
    } else if (req.cycle) {
        single = find_cycle_of_length(g, *req.cycle, budget);
        label = "cycle " + std::to_string(*req.cycle);
    } else if (req.chorded) {
        single = find_chorded_cycle_of_length(g, *req.chorded, budget);
        label = "chorded cycle " + std::to_string(*req.chorded);
    }
    if (single) {
        if (as_json) {
            out << result_json(*single).dump() << '\n';
        } else {
            print_result(label, *single, out);
        }
        return search_exit(single->status);
    }

    const PancyclicityMode mode = req.pancyclic     ? PancyclicityMode::Pancyclic
                                  : req.bipancyclic ? PancyclicityMode::Bipancyclic
                                                    : PancyclicityMode::Chorded;
    const PancyclicityReport report = pancyclicity_report(g, mode, budget);
    const SearchStatus overall = report.verdict    ? SearchStatus::Found
                                 : report.decided ? SearchStatus::Absent
                                                  : SearchStatus::BudgetExceeded;
    if (as_json) {
        ordered_json doc;
        doc["mode"] = to_string(mode);
        doc["verdict"] = report.verdict;
        doc["status"] = to_string(overall);
        ordered_json lengths = ordered_json::object();
        for (const auto& [t, r] : report.per_length) lengths[std::to_string(t)] = result_json(r);
        doc["lengths"] = std::move(lengths);
        doc["expansions"] = report.expansions;
        out << doc.dump() << '\n';
    } else {
        for (const auto& [t, r] : report.per_length) print_result("length " + std::to_string(t), r, out);
        out << to_string(mode) << ": " << (report.verdict ? "yes" : "no") << " ("
            << to_string(overall) << ")\n";
    }
    return search_exit(overall);
}

// witness

int cmd_witness(const std::optional<std::string>& tight, const std::optional<int>& remark,
                const std::optional<int>& a, const std::optional<std::string>& out_path,
                std::ostream& out) {
    if (tight.has_value() == remark.has_value()) throw InputError("choose one of --tight or --remark");
    if (remark && !a) throw InputError("--remark needs --a");
    const WitnessFamily family = tight          ? WitnessFamily::Tightness
                                 : *remark == 1 ? WitnessFamily::Remark1
                                 : *remark == 2 ? WitnessFamily::Remark2
                                                : WitnessFamily::Remark3;
    const WitnessSpec spec = tight ? witness_spec(family, parse_parts(*tight)) : witness_spec(family, *a);
    const KGraph g = build_witness(spec);
    const std::string text = serialize_graph(g) + "\n";
    if (out_path) {
        write_file_atomically(*out_path, text);
    } else {
        out << text;
    }
    logger()->info("{} witness: {} edges, hamiltonian expected: {}", to_string(spec.family),
                   g.edge_count(), spec.expected.hamiltonian ? "yes" : "no");
    return kExitOk;
}

// verify

struct VerifyArgs {
    std::optional<std::string> parts;
    std::string mode = "exhaustive";
    std::optional<std::uint64_t> samples;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;
    unsigned workers = 1;
    std::uint64_t cap = kDefaultEnumerationCap;
    std::optional<std::string> out;
    std::optional<std::string> summary;
    std::optional<std::string> config;
    bool fail_fast = false;
};

std::vector<VerifyPlan> plans_for(const VerifyArgs& args) {
    if (args.config) {
        if (args.parts) throw InputError("--parts and --config are exclusive");
        std::ifstream in(*args.config);
        if (!in) throw InputError("cannot read " + *args.config);
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::parse_error& e) {
            throw InputError(std::string("malformed config: ") + e.what());
        }
        return plans_from_json(doc);
    }
    if (!args.parts) throw InputError("verify needs --parts or --config");
    VerifyPlan plan;
    plan.profile = parse_parts(*args.parts);
    if (args.mode == "exhaustive") {
        plan.mode = VerifyMode::Exhaustive;
        if (args.samples) throw InputError("--samples only applies to random mode");
    } else {
        plan.mode = VerifyMode::Random;
        if (!args.samples) throw InputError("random mode needs --samples");
        plan.samples = *args.samples;
    }
    plan.seed = args.seed;
    plan.budget = args.budget;
    plan.workers = args.workers;
    plan.cap = args.cap;
    plan.fail_fast = args.fail_fast;
    return {plan};
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
    const std::vector<VerifyPlan> plans = plans_for(args);
    for (const VerifyPlan& plan : plans) validate_plan(plan);

    std::optional<AtomicFile> records_file;
    if (args.out) records_file.emplace(*args.out);
    std::ostream& records = records_file ? records_file->stream() : out;

    std::ostringstream csv;
    csv << summary_csv_header() << '\n';
    bool ok = true;
    for (const VerifyPlan& plan : plans) {
        const VerifySummary s = run_plan(plan, [&](const VerifyRecord& rec) {
            records << record_to_json(rec).dump() << '\n';
        });
        csv << summary_csv_row(s) << '\n';
        logger()->info("{}: {} graphs, {} asserted, {} counterexamples, {} undecided",
                       s.profile.to_string(), s.graphs_checked, s.asserted, s.counterexamples,
                       s.undecided);
        if (!s.ok()) {
            ok = false;
            logger()->error("verification of {} failed: {}", s.profile.to_string(),
                            summary_to_json(s).dump());
        }
    }
    if (records_file) records_file->commit();

    if (args.summary) {
        write_file_atomically(*args.summary, csv.str());
    } else if (args.out) {
        out << csv.str();
    } else {
        // Records already occupy stdout.
        logger()->info("summary\n{}", csv.str());
    }
    return ok ? kExitOk : kExitRefuted;
}

// crosscheck

int cmd_crosscheck(int kmax, int nmax, int pmax, bool as_json, std::ostream& out) {
    const CrosscheckSummary s = formula_crosscheck(kmax, nmax, pmax);
    if (as_json) {
        ordered_json doc;
        doc["checked"] = s.checked;
        doc["failed"] = s.failed;
        ordered_json findings = ordered_json::array();
        for (const CrosscheckFinding& f : s.findings) {
            findings.push_back({{"identity", f.identity},
                                {"instance", f.instance},
                                {"ok", f.ok},
                                {"expected_exception", f.expected_exception}});
        }
        doc["findings"] = std::move(findings);
        out << doc.dump() << '\n';
    } else {
        for (const CrosscheckFinding& f : s.findings) {
            out << (f.ok ? "note" : "FAIL") << ": " << f.identity << " at " << f.instance
                << (f.expected_exception ? " (listed exception)" : "") << '\n';
        }
        out << "checked=" << s.checked << " failed=" << s.failed << '\n';
    }
    return s.ok() ? kExitOk : kExitRefuted;
}

}  // namespace

void write_file_atomically(const std::string& path, const std::string& content) {
    AtomicFile file(path);
    file.stream() << content;
    file.commit();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    configure_logging();

    CLI::App app{"k-partite hamiltonicity and chorded pancyclicity toolkit", "kpan"};
    app.require_subcommand(1);
    bool as_json = false;

    std::string parts;
    auto* threshold = app.add_subcommand("threshold", "edge thresholds of a profile");
    threshold->add_option("parts", parts, "comma-separated part sizes")->required();
    threshold->add_flag("--json", as_json);

    auto* classify = app.add_subcommand("classify", "case tag of a profile");
    classify->add_option("parts", parts, "comma-separated part sizes")->required();
    classify->add_flag("--json", as_json);

    std::string graph_path;
    std::string condition;
    bool assert_mode = false;
    std::uint64_t budget = kDefaultBudget;
    auto* check = app.add_subcommand("check", "test a sufficient condition");
    check->add_option("--graph", graph_path, "graph file")->required();
    check->add_option("--condition", condition)
        ->required()
        ->check(CLI::IsMember({"ore", "dirac", "posa", "moonmoser", "chenjacobson", "edges", "bondy"}));
    check->add_flag("--assert", assert_mode, "exit 1 when an applicable condition fails");
    check->add_flag("--json", as_json);
    check->add_option("--budget", budget, "node-expansion cap for the bondy pre-check");

    SearchRequest req;
    auto* search = app.add_subcommand("search", "cycle searches");
    search->add_option("--graph", graph_path, "graph file")->required();
    search->add_flag("--ham", req.ham);
    search->add_option("--cycle", req.cycle, "cycle length");
    search->add_option("--chorded", req.chorded, "chorded cycle length");
    search->add_flag("--pancyclic", req.pancyclic);
    search->add_flag("--bipancyclic", req.bipancyclic);
    search->add_flag("--chorded-pancyclic", req.chorded_pancyclic);
    search->add_option("--budget", budget, "node-expansion cap per search");
    search->add_flag("--json", as_json);

    std::optional<std::string> tight;
    std::optional<int> remark;
    std::optional<int> a;
    std::optional<std::string> witness_out;
    auto* witness = app.add_subcommand("witness", "build an extremal or remark graph");
    witness->add_option("--tight", tight, "profile of the tightness witness");
    witness->add_option("--remark", remark, "remark family")->check(CLI::Range(1, 3));
    witness->add_option("--a", a, "family parameter");
    witness->add_option("--out", witness_out, "output file");

    VerifyArgs vargs;
    auto* verify = app.add_subcommand("verify", "exhaustive or sampled theorem verification");
    verify->add_option("--parts", vargs.parts, "comma-separated part sizes");
    verify->add_option("--mode", vargs.mode)->check(CLI::IsMember({"exhaustive", "random"}));
    verify->add_option("--samples", vargs.samples);
    verify->add_option("--seed", vargs.seed);
    verify->add_option("--budget", vargs.budget);
    verify->add_option("--workers", vargs.workers)->check(CLI::Range(1U, 1024U));
    verify->add_option("--cap", vargs.cap, "largest exhaustive enumeration allowed");
    verify->add_option("--out", vargs.out, "JSONL record file");
    verify->add_option("--summary", vargs.summary, "CSV summary file");
    verify->add_option("--config", vargs.config, "JSON file with a plans list");
    verify->add_flag("--fail-fast", vargs.fail_fast);

    int kmax = 8;
    int nmax = 8;
    int pmax = 16;
    auto* crosscheck = app.add_subcommand("crosscheck", "threshold formula identities");
    crosscheck->add_option("--kmax", kmax)->check(CLI::Range(2, 64));
    crosscheck->add_option("--nmax", nmax)->check(CLI::Range(1, 64));
    crosscheck->add_option("--pmax", pmax)->check(CLI::Range(2, 64));
    crosscheck->add_flag("--json", as_json);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "kpan: error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*threshold) return cmd_threshold(parts, as_json, out);
        if (*classify) return cmd_classify(parts, as_json, out);
        if (*check) return cmd_check(graph_path, condition, assert_mode, as_json, budget, out);
        if (*search) return cmd_search(graph_path, req, budget, as_json, out);
        if (*witness) return cmd_witness(tight, remark, a, witness_out, out);
        if (*verify) return cmd_verify(vargs, out);
        if (*crosscheck) return cmd_crosscheck(kmax, nmax, pmax, as_json, out);
    } catch (const std::exception& e) {
        err << "kpan: error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace kpan::cli

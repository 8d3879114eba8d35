// Command-line front end: instance generation, single-instance solving, and
// the experiment harness with its CSV reports.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "borda/election.hpp"
#include "borda/exact.hpp"
#include "borda/experiment.hpp"
#include "borda/gen.hpp"
#include "borda/greedy.hpp"
#include "borda/io.hpp"
#include "borda/matrix.hpp"

namespace {

using namespace borda;

constexpr int kExitSuccess = 0;
constexpr int kExitFailure = 1;   // greedy Failure / exact Unsat
constexpr int kExitUnknown = 2;   // budget exhausted
constexpr int kExitBadInput = 3;  // malformed file or arguments

struct Options {
    std::uint64_t seed = 1;
    std::string out;
    int workers = 0;
    std::uint64_t budget_nodes = Budget{}.max_nodes;
    // Unset means: 60 s for single solves, node-limited (0) for experiments,
    // where racy Timeout rows would break CSV byte-reproducibility.
    std::int64_t budget_ms = -1;
    // Empty means the subcommand default: last for gen, worst for experiment.
    std::string target;

    // gen
    std::string model = "uniform";
    int m = 8;
    int p = 16;
    int count = 1;
    std::int64_t urn_a = -1;
    int k = 36;

    // solve
    std::string file;
    std::string algorithm = "reverse";
    int n = 0;
    std::string tie = "minfill";
    bool trace = false;

    // experiment
    std::vector<int> m_list{4, 8, 16};
    std::vector<int> p_list{4, 8, 16, 32, 64, 128};
    int instances = 100;
    bool timing = false;
    bool full_grid = false;
    std::string summary_out;

    // report
    std::string in;
};

std::string ballots_json(const VoteMatrix& a) {
    Election e;
    e.m = a.m;
    e.distinguished = a.distinguished;
    e.votes = to_ballots(a);
    return to_json(e);
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty())
        std::cout << text << "\n";
    else
        write_file(opt.out, text + "\n");
}

ScoreProfile load_profile(const std::string& path) {
    LoadedInstance inst = load_instance_file(path);
    if (!inst.profile.divisible_sum)
        std::cerr << "warning: score total is not divisible by m(m-1)/2; "
                     "profile cannot come from whole votes\n";
    return inst.profile;
}

void print_greedy_trace(const GreedyOutcome& outcome) {
    std::cout << "iter,column,score,column_sum\n";
    for (const Placement& pl : outcome.trace)
        std::cout << pl.iter << ',' << pl.column << ',' << pl.score << ',' << pl.column_sum << "\n";
}

int cmd_gen(const Options& opt) {
    std::vector<std::pair<std::string, std::string>> files;  // name, payload
    const auto stamp = [&](int idx, int m, int p, const std::string& payload) {
        files.emplace_back(opt.model + "_m" + std::to_string(m) + "_p" + std::to_string(p) + "_" +
                               std::to_string(idx) + ".json",
                           payload);
    };

    if (opt.model == "uniform" || opt.model == "urn") {
        for (int idx = 0; idx < opt.count; ++idx) {
            Election e = opt.model == "uniform"
                             ? uniform_election(opt.m, opt.p, opt.seed + idx)
                             : urn_election(opt.m, opt.p, opt.urn_a, opt.seed + idx);
            if (opt.target == "worst") {
                const ScoreProfile t = tally(e);
                int best = 1;
                for (int i = 2; i <= e.m; ++i)
                    if (t.score(i) < t.score(best)) best = i;
                e.distinguished = best;
            }
            stamp(idx, opt.m, opt.p, to_json(e));
        }
    } else if (opt.model == "prop1") {
        stamp(0, opt.m, 2, to_json(prop1_instance(opt.m)));
    } else if (opt.model == "thm2") {
        const ScoreProfile prof = thm2_instance(opt.k);
        stamp(0, prof.m, 2 * opt.k, to_json(prof));
    } else {
        throw ValidationError("unknown model: " + opt.model);
    }

    if (opt.out.empty()) {
        for (const auto& [name, payload] : files) std::cout << payload << "\n";
    } else {
        std::filesystem::create_directories(opt.out);
        for (const auto& [name, payload] : files) {
            const std::string path = (std::filesystem::path(opt.out) / name).string();
            write_file(path, payload + "\n");
            std::cerr << "wrote " << path << "\n";
        }
    }
    return kExitSuccess;
}

int cmd_solve(const Options& opt) {
    const ScoreProfile profile = load_profile(opt.file);
    const Budget budget{opt.budget_nodes, opt.budget_ms < 0 ? Budget{}.max_ms : opt.budget_ms};

    if (opt.algorithm == "reverse") {
        const ReverseResult res = reverse(profile);
        std::cout << "n = " << res.n << "\n";
        if (opt.trace) {
            for (const auto& row : res.score_trace) {
                for (std::size_t i = 0; i < row.size(); ++i)
                    std::cout << (i ? "," : "") << row[i];
                std::cout << "\n";
            }
        }
        emit(opt, ballots_json(res.votes));
        return kExitSuccess;
    }
    if (opt.algorithm == "lslg" || opt.algorithm == "lsla") {
        if (opt.n < 1) throw ValidationError(opt.algorithm + " requires --n >= 1");
        const TiePolicy tie = opt.tie == "index" ? TiePolicy::IndexOrder : TiePolicy::MinFill;
        const GreedyOutcome outcome = opt.algorithm == "lslg"
                                          ? lslg(profile, opt.n, opt.trace)
                                          : lsla(profile, opt.n, tie, opt.trace);
        if (opt.trace) print_greedy_trace(outcome);
        if (!outcome.success()) {
            std::cout << "Failure\n";
            return kExitFailure;
        }
        std::cout << "Success\n";
        emit(opt, ballots_json(convert_to_votes(*outcome.matrix)));
        return kExitSuccess;
    }
    if (opt.algorithm == "exact") {
        const OptimalityReport rep = minimum_manipulators(profile, budget);
        std::cout << "n_reverse = " << rep.n_reverse << "\n";
        if (rep.known())
            std::cout << "n_optimal = " << *rep.n_optimal << "\n";
        else
            std::cout << "n_optimal = unknown\n";
        std::cout << "proof = " << proof_name(rep.proof) << "\n"
                  << "reverse_optimal = " << rep.reverse_optimal << "\n"
                  << "lslg_optimal = " << rep.lslg_optimal << "\n"
                  << "lsla_optimal = " << rep.lsla_optimal() << " (minfill=" << rep.lsla_minfill_optimal
                  << ", index=" << rep.lsla_index_optimal << ")\n"
                  << "nodes = " << rep.nodes << "\n"
                  << "elapsed_ms = " << rep.elapsed_ms << "\n";
        if (rep.dominance_violation)
            std::cerr << "WARNING: REVERSE succeeded where LSLA failed at both n and n-1\n";
        return rep.known() ? kExitSuccess : kExitUnknown;
    }
    throw ValidationError("unknown algorithm: " + opt.algorithm);
}

int cmd_experiment(Options opt) {
    ExperimentConfig config;
    if (opt.full_grid) {
        opt.m_list = {4, 8, 16, 32, 64, 128};
        opt.p_list = {4, 8, 16, 32, 64, 128};
        opt.instances = 1000;
        std::cerr << "full grid selected: 36 cells x 1000 instances per model; "
                     "typically a few minutes, longer if many instances hit the budget\n";
    }
    config.m_list = opt.m_list;
    config.p_list = opt.p_list;
    config.instances_per_cell = opt.instances;
    config.model = model_from_name(opt.model);
    config.urn_a = opt.urn_a;
    config.seed = opt.seed;
    config.target = opt.target == "last" ? TargetPolicy::Last : TargetPolicy::Worst;
    config.budget.max_nodes = opt.budget_nodes;
    config.budget.max_ms = opt.budget_ms < 0 ? 0 : opt.budget_ms;
    config.workers = opt.workers;
    config.timing = opt.timing;

    const ExperimentResult result = run_experiment(config, &std::cerr);

    const std::string csv_path =
        opt.out.empty() ? std::string(model_name(config.model)) + "_instances.csv" : opt.out;
    write_file(csv_path, instance_csv(config, result.rows));
    std::cerr << "wrote " << csv_path << "\n";
    if (!opt.summary_out.empty()) {
        write_file(opt.summary_out, summary_csv(result.summary));
        std::cerr << "wrote " << opt.summary_out << "\n";
    }
    std::cout << "root seed: " << config.seed << "\n" << render_summary(result.summary);
    return kExitSuccess;
}

int cmd_report(const Options& opt) {
    std::ifstream in(opt.in);
    if (!in) throw ValidationError("cannot open file: " + opt.in);
    const std::vector<InstanceRow> rows = read_instance_csv(in);
    const SummaryTable table = summarize(rows);
    std::cout << render_summary(table);
    if (!opt.out.empty()) write_file(opt.out, summary_csv(table));
    return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum-coalition manipulation of unweighted Borda elections"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--seed", opt.seed, "root seed; all randomness derives from it");
    app.add_option("--out", opt.out, "output file (or directory for gen batches)");
    app.add_option("--workers", opt.workers, "worker threads (0 = hardware concurrency)");
    app.add_option("--budget-nodes", opt.budget_nodes, "exact-search node limit (0 = unlimited)");
    app.add_option("--budget-ms", opt.budget_ms, "exact-search time limit in ms (0 = unlimited)");
    app.add_option("--target", opt.target,
                   "distinguished candidate policy: last|worst (gen defaults to last, "
                   "experiment to worst)")
        ->check(CLI::IsMember({"last", "worst"}));
    app.fallthrough();

    CLI::App* gen = app.add_subcommand("gen", "generate election or profile files");
    gen->add_option("--model", opt.model, "uniform|urn|prop1|thm2")
        ->check(CLI::IsMember({"uniform", "urn", "prop1", "thm2"}));
    gen->add_option("--m", opt.m, "number of candidates");
    gen->add_option("--p", opt.p, "number of non-manipulator votes");
    gen->add_option("--count", opt.count, "instances to generate (seed advances per instance)");
    gen->add_option("--urn-a", opt.urn_a, "urn strength (default m!)");
    gen->add_option("--k", opt.k, "scale of the thm2 family (divisible by 36)");

    CLI::App* solve = app.add_subcommand("solve", "run one algorithm on one instance file");
    solve->add_option("file", opt.file, "election or profile JSON")->required();
    solve->add_option("--algorithm", opt.algorithm, "reverse|lslg|lsla|exact")
        ->check(CLI::IsMember({"reverse", "lslg", "lsla", "exact"}));
    solve->add_option("--n", opt.n, "coalition size for lslg/lsla");
    solve->add_option("--tie", opt.tie, "lsla tie policy: minfill|index")
        ->check(CLI::IsMember({"minfill", "index"}));
    solve->add_flag("--trace", opt.trace, "print per-placement trace (or score table for reverse)");

    CLI::App* exact = app.add_subcommand("exact", "determine the optimal coalition size");
    exact->add_option("file", opt.file, "election or profile JSON")->required();

    CLI::App* experiment = app.add_subcommand("experiment", "run a generation/solve grid");
    experiment->add_option("--model", opt.model, "uniform|urn")
        ->check(CLI::IsMember({"uniform", "urn"}));
    experiment->add_option("--m-list", opt.m_list, "candidate counts")->delimiter(',');
    experiment->add_option("--p-list", opt.p_list, "voter counts")->delimiter(',');
    experiment->add_option("--instances", opt.instances, "instances per (m,p) cell");
    experiment->add_option("--urn-a", opt.urn_a, "urn strength (default m!)");
    experiment->add_flag("--timing", opt.timing,
                         "record real per-instance wall times (CSV no longer byte-reproducible)");
    experiment->add_flag("--full-grid", opt.full_grid,
                         "m,p in {4..128}, 1000 instances per cell");
    experiment->add_option("--summary-csv", opt.summary_out, "also write the summary table as CSV");

    CLI::App* report = app.add_subcommand("report", "aggregate a per-instance CSV into a table");
    report->add_option("--in", opt.in, "per-instance CSV")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_gen(opt);
        if (solve->parsed()) return cmd_solve(opt);
        if (exact->parsed()) {
            opt.algorithm = "exact";
            return cmd_solve(opt);
        }
        if (experiment->parsed()) return cmd_experiment(opt);
        if (report->parsed()) return cmd_report(opt);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}

#pragma once

#include <iosfwd>

#include "borda/exact.hpp"

namespace borda {

enum class VoteModel { Uniform, Urn };
enum class TargetPolicy { Last, Worst };

const char* model_name(VoteModel m);
VoteModel model_from_name(const std::string& name);

struct ExperimentConfig {
    std::vector<int> m_list{4, 8, 16};
    std::vector<int> p_list{4, 8, 16, 32, 64, 128};
    int instances_per_cell = 100;
    VoteModel model = VoteModel::Uniform;
    std::int64_t urn_a = -1;  // -1: a = m!
    std::uint64_t seed = 1;
    // Targeting the worst-off candidate reproduces the reference optimal-found
    // rates; targeting the last candidate makes most instances near-trivial.
    TargetPolicy target = TargetPolicy::Worst;
    // Node-limited by default so identical seeds give byte-identical CSVs;
    // a wall-clock limit would make Timeout rows racy.
    Budget budget{10'000'000, 0};
    int workers = 0;    // 0: hardware concurrency
    bool timing = false;  // write real per-row elapsed_ms (breaks byte-stability)

    void validate() const;
};

struct InstanceRow {
    std::string id;
    int m = 0;
    int p = 0;
    VoteModel model = VoteModel::Uniform;
    OptimalityReport report;
};

struct SummaryRow {
    int m = 0;
    long long instances = 0;  // known-optimum instances only
    long long reverse_optimal = 0;
    long long lslg_optimal = 0;
    long long lsla_optimal = 0;
    long long lslg_beat_lsla = 0;
    long long unknown = 0;  // excluded from the count columns
    long long dominance_violations = 0;
};

struct SummaryTable {
    std::vector<SummaryRow> rows;  // one per m, ascending

    SummaryRow totals() const;
    long long unknown_total() const;
    long long dominance_violations_total() const;
};

struct ExperimentResult {
    std::vector<InstanceRow> rows;
    SummaryTable summary;
    long long generated = 0;
    long long distinct = 0;
    double wall_ms = 0.0;
};

// Generates the grid, drops duplicate elections (same vote multiset), runs
// the optimality pipeline on every distinct instance across a worker pool,
// and aggregates. Output order is deterministic regardless of scheduling.
ExperimentResult run_experiment(const ExperimentConfig& config, std::ostream* log = nullptr);

// Per-instance CSV with a root-seed header comment. Schema:
// instance_id,m,p,model,n_reverse,n_optimal,proof,rev_opt,lslg_opt,lsla_opt,nodes,elapsed_ms
extern const char* const kInstanceCsvHeader;
std::string instance_csv(const ExperimentConfig& config, const std::vector<InstanceRow>& rows);
std::vector<InstanceRow> read_instance_csv(std::istream& in);

SummaryTable summarize(const std::vector<InstanceRow>& rows);
std::string render_summary(const SummaryTable& table);
std::string summary_csv(const SummaryTable& table);

}  // namespace borda

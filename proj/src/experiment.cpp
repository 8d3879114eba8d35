#include "borda/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "borda/election.hpp"
#include "borda/gen.hpp"

namespace borda {

const char* const kInstanceCsvHeader =
    "instance_id,m,p,model,n_reverse,n_optimal,proof,rev_opt,lslg_opt,lsla_opt,nodes,elapsed_ms";

const char* model_name(VoteModel m) { return m == VoteModel::Uniform ? "uniform" : "urn"; }

VoteModel model_from_name(const std::string& name) {
    if (name == "uniform") return VoteModel::Uniform;
    if (name == "urn") return VoteModel::Urn;
    throw ValidationError("unknown vote model: " + name);
}

void ExperimentConfig::validate() const {
    if (m_list.empty() || p_list.empty()) throw ValidationError("experiment: empty m or p list");
    for (int m : m_list)
        if (m < 2) throw ValidationError("experiment: every m must be at least 2");
    for (int p : p_list)
        if (p < 1) throw ValidationError("experiment: every p must be at least 1");
    if (instances_per_cell < 1) throw ValidationError("experiment: instances per cell must be >= 1");
    budget.validate();
}

namespace {

// Vote-multiset key: order of votes does not matter for identity.
std::string canonical_key(const Election& e) {
    std::vector<std::vector<int>> rows;
    rows.reserve(e.votes.size());
    for (const Vote& v : e.votes) rows.push_back(v.ranking);
    std::sort(rows.begin(), rows.end());
    std::string key;
    for (const auto& r : rows) {
        for (int c : r) {
            key += std::to_string(c);
            key += ',';
        }
        key += ';';
    }
    return key;
}

int pick_target(const ScoreProfile& tallied, TargetPolicy policy) {
    if (policy == TargetPolicy::Last) return tallied.m;
    int best = 1;
    for (int i = 2; i <= tallied.m; ++i)
        if (tallied.score(i) < tallied.score(best)) best = i;
    return best;
}

struct Task {
    std::string id;
    int m = 0;
    int p = 0;
    ScoreProfile profile;
};

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config, std::ostream* log) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();

    ExperimentResult result;
    std::vector<Task> tasks;
    std::uint64_t instance_index = 0;
    for (int m : config.m_list) {
        for (int p : config.p_list) {
            std::unordered_set<std::string> seen;
            for (int idx = 0; idx < config.instances_per_cell; ++idx) {
                const std::uint64_t seed = config.seed + instance_index;
                ++instance_index;
                Election e = config.model == VoteModel::Uniform
                                 ? uniform_election(m, p, seed)
                                 : urn_election(m, p, config.urn_a, seed);
                ++result.generated;
                if (!seen.insert(canonical_key(e)).second) continue;  // duplicate draw
                ++result.distinct;
                ScoreProfile profile = tally(e);
                if (config.target == TargetPolicy::Worst) {
                    e.distinguished = pick_target(profile, config.target);
                    profile = tally(e);
                }
                Task t;
                t.id = std::string(model_name(config.model)) + "_m" + std::to_string(m) + "_p" +
                       std::to_string(p) + "_" + std::to_string(idx);
                t.m = m;
                t.p = p;
                t.profile = std::move(profile);
                tasks.push_back(std::move(t));
            }
        }
    }
    if (log)
        *log << "generated " << result.generated << " instances, " << result.distinct
             << " distinct; solving with budget " << config.budget.max_nodes << " nodes\n";

    std::vector<InstanceRow> rows(tasks.size());
    std::atomic<std::size_t> next{0};
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers =
        config.workers > 0 ? static_cast<unsigned>(config.workers) : hw;

    const auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            InstanceRow row;
            row.id = tasks[i].id;
            row.m = tasks[i].m;
            row.p = tasks[i].p;
            row.model = config.model;
            row.report = minimum_manipulators(tasks[i].profile, config.budget);
            rows[i] = std::move(row);
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    result.rows = std::move(rows);
    result.summary = summarize(result.rows);
    result.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               start)
                         .count();
    if (log) {
        *log << render_summary(result.summary);
        *log << "wall time: " << std::fixed << std::setprecision(1) << result.wall_ms / 1000.0
             << " s\n";
    }
    return result;
}

std::string instance_csv(const ExperimentConfig& config, const std::vector<InstanceRow>& rows) {
    std::ostringstream out;
    out << "# root_seed=" << config.seed << " model=" << model_name(config.model)
        << " instances_per_cell=" << config.instances_per_cell << "\n";
    out << kInstanceCsvHeader << "\n";
    for (const InstanceRow& r : rows) {
        const OptimalityReport& rep = r.report;
        out << r.id << ',' << r.m << ',' << r.p << ',' << model_name(r.model) << ','
            << rep.n_reverse << ',';
        if (rep.known())
            out << *rep.n_optimal;
        else
            out << "NA";
        out << ',' << proof_name(rep.proof) << ',' << int(rep.reverse_optimal) << ','
            << int(rep.lslg_optimal) << ',' << int(rep.lsla_optimal()) << ',' << rep.nodes << ','
            << (config.timing ? static_cast<long long>(std::llround(rep.elapsed_ms)) : 0LL) << "\n";
    }
    return out.str();
}

std::vector<InstanceRow> read_instance_csv(std::istream& in) {
    std::vector<InstanceRow> rows;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!have_header) {
            if (line != kInstanceCsvHeader)
                throw ValidationError("instance CSV schema mismatch; expected header: " +
                                      std::string(kInstanceCsvHeader));
            have_header = true;
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) f.push_back(field);
        if (f.size() != 12) throw ValidationError("instance CSV row has " + std::to_string(f.size()) +
                                                  " fields, expected 12: " + line);
        try {
            InstanceRow r;
            r.id = f[0];
            r.m = std::stoi(f[1]);
            r.p = std::stoi(f[2]);
            r.model = model_from_name(f[3]);
            r.report.n_reverse = std::stoi(f[4]);
            if (f[5] != "NA") r.report.n_optimal = std::stoi(f[5]);
            r.report.proof = proof_from_name(f[6]);
            r.report.reverse_optimal = f[7] == "1";
            r.report.lslg_optimal = f[8] == "1";
            // combined flag round-trips through the minfill slot
            r.report.lsla_minfill_optimal = f[9] == "1";
            r.report.nodes = std::stoull(f[10]);
            r.report.elapsed_ms = std::stod(f[11]);
            rows.push_back(std::move(r));
        } catch (const std::invalid_argument&) {
            throw ValidationError("instance CSV row has a malformed field: " + line);
        } catch (const std::out_of_range&) {
            throw ValidationError("instance CSV row has an out-of-range field: " + line);
        }
    }
    return rows;
}

SummaryRow SummaryTable::totals() const {
    SummaryRow t;
    for (const SummaryRow& r : rows) {
        t.instances += r.instances;
        t.reverse_optimal += r.reverse_optimal;
        t.lslg_optimal += r.lslg_optimal;
        t.lsla_optimal += r.lsla_optimal;
        t.lslg_beat_lsla += r.lslg_beat_lsla;
        t.unknown += r.unknown;
        t.dominance_violations += r.dominance_violations;
    }
    return t;
}

long long SummaryTable::unknown_total() const { return totals().unknown; }
long long SummaryTable::dominance_violations_total() const { return totals().dominance_violations; }

SummaryTable summarize(const std::vector<InstanceRow>& rows) {
    std::map<int, SummaryRow> by_m;
    for (const InstanceRow& r : rows) {
        SummaryRow& s = by_m[r.m];
        s.m = r.m;
        if (r.report.dominance_violation) ++s.dominance_violations;
        if (!r.report.known()) {
            ++s.unknown;
            continue;
        }
        ++s.instances;
        if (r.report.reverse_optimal) ++s.reverse_optimal;
        if (r.report.lslg_optimal) ++s.lslg_optimal;
        if (r.report.lsla_optimal()) ++s.lsla_optimal;
        if (r.report.lslg_optimal && !r.report.lsla_optimal()) ++s.lslg_beat_lsla;
    }
    SummaryTable table;
    for (auto& [m, row] : by_m) table.rows.push_back(row);
    return table;
}

namespace {

std::string percent(long long num, long long den) {
    if (den == 0) return "-";
    std::ostringstream out;
    out << std::fixed << std::setprecision(1) << 100.0 * static_cast<double>(num) / den;
    return out.str();
}

}  // namespace

std::string render_summary(const SummaryTable& table) {
    std::ostringstream out;
    const int w = 10;
    out << std::setw(6) << "m" << std::setw(w) << "#inst" << std::setw(w) << "REVERSE"
        << std::setw(w) << "LSLG" << std::setw(w) << "LSLA" << std::setw(16) << "LSLG beat LSLA"
        << "\n";
    for (const SummaryRow& r : table.rows)
        out << std::setw(6) << r.m << std::setw(w) << r.instances << std::setw(w)
            << r.reverse_optimal << std::setw(w) << r.lslg_optimal << std::setw(w) << r.lsla_optimal
            << std::setw(16) << r.lslg_beat_lsla << "\n";
    const SummaryRow t = table.totals();
    out << std::setw(6) << "Total" << std::setw(w) << t.instances << std::setw(w)
        << t.reverse_optimal << std::setw(w) << t.lslg_optimal << std::setw(w) << t.lsla_optimal
        << std::setw(16) << t.lslg_beat_lsla << "\n";
    out << std::setw(6) << "%" << std::setw(w) << "" << std::setw(w)
        << percent(t.reverse_optimal, t.instances) << std::setw(w)
        << percent(t.lslg_optimal, t.instances) << std::setw(w)
        << percent(t.lsla_optimal, t.instances) << std::setw(16)
        << percent(t.lslg_beat_lsla, t.instances) << "\n";
    if (t.unknown > 0) out << "undetermined (excluded from counts): " << t.unknown << "\n";
    for (const SummaryRow& r : table.rows)
        if (r.lsla_optimal < r.reverse_optimal)
            out << "NOTE: LSLA found fewer optima than REVERSE at m=" << r.m << "\n";
    if (t.dominance_violations > 0)
        out << "WARNING: REVERSE succeeded where LSLA failed at both n and n-1 on "
            << t.dominance_violations << " instance(s)\n";
    return out.str();
}

std::string summary_csv(const SummaryTable& table) {
    std::ostringstream out;
    out << "m,instances,reverse_opt,lslg_opt,lsla_opt,lslg_beat_lsla,unknown\n";
    for (const SummaryRow& r : table.rows)
        out << r.m << ',' << r.instances << ',' << r.reverse_optimal << ',' << r.lslg_optimal << ','
            << r.lsla_optimal << ',' << r.lslg_beat_lsla << ',' << r.unknown << "\n";
    const SummaryRow t = table.totals();
    out << "total," << t.instances << ',' << t.reverse_optimal << ',' << t.lslg_optimal << ','
        << t.lsla_optimal << ',' << t.lslg_beat_lsla << ',' << t.unknown << "\n";
    return out.str();
}

}  // namespace borda

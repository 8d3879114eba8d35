#include "borda/exact.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "borda/election.hpp"
#include "borda/greedy.hpp"

namespace borda {

void Budget::validate() const {
    if (max_nodes == 0 && max_ms == 0)
        throw ValidationError("budget: node and time limits cannot both be zero");
}

int lower_bound(const ScoreProfile& profile) {
    const int m = profile.m;
    if (m == 1) return 0;
    const int d = profile.distinguished;
    const Score sd = profile.score(d);
    Score smax = 0;
    for (int i = 1; i <= m; ++i)
        if (i != d) smax = std::max(smax, profile.score(i));
    const Score competing_total = profile.total() - sd;

    const auto ok = [&](Score n) {
        const Score reach = sd + n * (m - 1);
        if (reach < smax) return false;  // some competing gap is negative
        const Score gap_sum = (m - 1) * reach - competing_total;
        return 2 * gap_sum >= n * (m - 1) * (m - 2);
    };

    // Closed-form starting point for both monotone conditions, then settle
    // exactly by stepping.
    const auto ceil_div = [](Score a, Score b) { return a <= 0 ? Score{0} : (a + b - 1) / b; };
    Score n = std::max(ceil_div(smax - sd, m - 1),
                       ceil_div(2 * competing_total - 2 * (m - 1) * sd, static_cast<Score>(m) * (m - 1)));
    while (!ok(n)) ++n;
    while (n > 0 && ok(n - 1)) --n;
    return static_cast<int>(n);
}

namespace {

using Clock = std::chrono::steady_clock;

class Searcher {
public:
    Searcher(const ScoreProfile& profile, int n, const Budget& budget)
        : profile_(profile), n_(n), budget_(budget) {}

    FeasibilityResult run() {
        const auto start = Clock::now();
        start_ = start;
        FeasibilityResult res;

        const int m = profile_.m;
        const GapVector gv = gaps(profile_, n_);
        bool infeasible = false;
        for (int i = 1; i <= m; ++i) {
            if (i == profile_.distinguished) continue;
            if (gv.gap(i) < 0) infeasible = true;
            col_id_.push_back(i);
        }
        std::sort(col_id_.begin(), col_id_.end(), [&](int a, int b) {
            if (gv.gap(a) != gv.gap(b)) return gv.gap(a) < gv.gap(b);
            return a < b;
        });
        for (int id : col_id_) gap_.push_back(gv.gap(id));

        cols_ = static_cast<int>(col_id_.size());
        values_ = std::max(m - 1, 1);  // competing values 0..m-2
        avail_.assign(values_, n_);
        cnt_.assign(cols_, std::vector<int>(values_, 0));

        Outcome out = infeasible ? Outcome::Exhausted : search_column(0);
        res.nodes = nodes_;
        res.elapsed_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        switch (out) {
            case Outcome::Found:
                res.status = Feasibility::Sat;
                res.witness = build_witness();
                break;
            case Outcome::Exhausted:
                res.status = Feasibility::Unsat;
                break;
            case Outcome::Aborted:
                res.status = Feasibility::Timeout;
                break;
        }
        return res;
    }

private:
    enum class Outcome { Found, Exhausted, Aborted };

    // Budget tick per explored branch.
    bool tick() {
        ++nodes_;
        if (budget_.max_nodes > 0 && nodes_ > budget_.max_nodes) return false;
        if (budget_.max_ms > 0 && (nodes_ & 0xfff) == 0) {
            const auto ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
            if (ms > budget_.max_ms) return false;
        }
        return true;
    }

    Outcome search_column(int j) {
        if (j == cols_) {
            solution_ = cnt_;  // snapshot before the recursion unwinds
            return Outcome::Found;
        }
        if (!remaining_feasible(j)) return Outcome::Exhausted;
        const bool lex = j > 0 && gap_[j] == gap_[j - 1];
        return fill_level(j, values_ - 1, n_, gap_[j], lex);
    }

    // Choose cnt_[j][k] with values processed in descending order. cap_left
    // is the column's remaining sum budget, slots_left its remaining size.
    // While lex_tight, the count row must not drop below the previous
    // equal-gap column's row.
    Outcome fill_level(int j, int k, int slots_left, Score cap_left, bool lex_tight) {
        if (k == 0) {
            const int t = slots_left;  // zeros absorb the rest
            if (t > avail_[0]) return Outcome::Exhausted;
            if (lex_tight && t < cnt_[j - 1][0]) return Outcome::Exhausted;
            if (!tick()) return Outcome::Aborted;
            cnt_[j][k] = t;
            avail_[0] -= t;
            Outcome out = search_column(j + 1);
            avail_[0] += t;
            cnt_[j][k] = 0;
            return out;
        }

        // Count and minimal sum of available values below k, for completion
        // bounds: cum_cnt[i], cum_sum[i] cover values 0..i.
        int smaller = 0;
        for (int v = 0; v < k; ++v) smaller += avail_[v];

        int t_min = std::max(0, slots_left - smaller);
        if (lex_tight) t_min = std::max(t_min, cnt_[j - 1][k]);
        Score t_max = std::min<Score>({static_cast<Score>(avail_[k]), static_cast<Score>(slots_left),
                                       cap_left / k});

        for (int t = t_min; t <= t_max; ++t) {
            // Cheapest completion of the remaining slots with smaller values.
            const int q = slots_left - t;
            const Score cap_rest = cap_left - static_cast<Score>(k) * t;
            if (min_sum_below(k, q) > cap_rest) continue;
            if (!tick()) return Outcome::Aborted;
            cnt_[j][k] = t;
            avail_[k] -= t;
            const bool tight = lex_tight && t == cnt_[j - 1][k];
            Outcome out = fill_level(j, k - 1, q, cap_rest, tight);
            avail_[k] += t;
            cnt_[j][k] = 0;
            if (out != Outcome::Exhausted) return out;
        }
        return Outcome::Exhausted;
    }

    // Sum of the q smallest available values strictly below value k.
    Score min_sum_below(int k, int q) const {
        Score sum = 0;
        for (int v = 0; v < k && q > 0; ++v) {
            const int take = std::min(avail_[v], q);
            sum += static_cast<Score>(v) * take;
            q -= take;
        }
        return sum;  // q > 0 cannot happen when t_min was respected
    }

    // Prefix bound over the columns j.. (ascending gaps).
    bool remaining_feasible(int j) const {
        Score gap_acc = 0;
        Score val_acc = 0;
        int taken = 0;
        int v = 0;
        int at_v = 0;  // how many of value v already taken
        for (int r = 1; r <= cols_ - j; ++r) {
            gap_acc += gap_[j + r - 1];
            int need = r * n_ - taken;
            while (need > 0) {
                const int free_here = avail_[v] - at_v;
                const int take = std::min(free_here, need);
                val_acc += static_cast<Score>(v) * take;
                at_v += take;
                taken += take;
                need -= take;
                if (at_v == avail_[v]) {
                    ++v;
                    at_v = 0;
                }
            }
            if (val_acc > gap_acc) return false;
        }
        return true;
    }

    ColumnMatrix build_witness() const {
        ColumnMatrix b;
        b.m = profile_.m;
        b.n = n_;
        b.distinguished = profile_.distinguished;
        b.columns.resize(profile_.m);
        b.columns[b.distinguished - 1].assign(n_, profile_.m - 1);
        for (int j = 0; j < cols_; ++j) {
            auto& col = b.columns[col_id_[j] - 1];
            for (int k = values_ - 1; k >= 0; --k)
                col.insert(col.end(), solution_[j][k], k);
        }
        return b;
    }

    const ScoreProfile& profile_;
    int n_;
    Budget budget_;
    int cols_ = 0;
    int values_ = 0;
    std::vector<int> col_id_;
    std::vector<Score> gap_;
    std::vector<int> avail_;
    std::vector<std::vector<int>> cnt_;
    std::vector<std::vector<int>> solution_;
    std::uint64_t nodes_ = 0;
    Clock::time_point start_;
};

}  // namespace

FeasibilityResult exists_manipulation(const ScoreProfile& profile, int n, const Budget& budget) {
    budget.validate();
    if (n < 1) throw ValidationError("exists_manipulation: coalition size must be at least 1");
    return Searcher(profile, n, budget).run();
}

const char* proof_name(Proof p) {
    switch (p) {
        case Proof::GreedyWitness: return "greedy_witness";
        case Proof::Observation1: return "observation1";
        case Proof::NegativeGap: return "negative_gap";
        case Proof::ExactUnsat: return "exact_unsat";
        case Proof::ExactSat: return "exact_sat";
        case Proof::Timeout: return "timeout";
    }
    return "unknown";
}

Proof proof_from_name(const std::string& name) {
    for (Proof p : {Proof::GreedyWitness, Proof::Observation1, Proof::NegativeGap, Proof::ExactUnsat,
                    Proof::ExactSat, Proof::Timeout})
        if (name == proof_name(p)) return p;
    throw ValidationError("unknown proof kind: " + name);
}

OptimalityReport minimum_manipulators(const ScoreProfile& profile, const Budget& budget) {
    budget.validate();
    OptimalityReport rep;
    rep.n_reverse = reverse(profile).n;
    const int nr = rep.n_reverse;

    if (nr == 0) {
        // d already wins; the empty manipulation is trivially optimal and
        // every algorithm "finds" it.
        rep.n_optimal = 0;
        rep.proof = Proof::GreedyWitness;
        rep.reverse_optimal = true;
        rep.lslg_optimal = true;
        rep.lsla_minfill_optimal = true;
        rep.lsla_index_optimal = true;
        return rep;
    }

    const bool lslg_at_nr = lslg(profile, nr).success();
    const bool mf_at_nr = lsla(profile, nr, TiePolicy::MinFill).success();
    const bool ix_at_nr = lsla(profile, nr, TiePolicy::IndexOrder).success();
    bool lslg_below = false, mf_below = false, ix_below = false;
    if (nr >= 2) {
        lslg_below = lslg(profile, nr - 1).success();
        mf_below = lsla(profile, nr - 1, TiePolicy::MinFill).success();
        ix_below = lsla(profile, nr - 1, TiePolicy::IndexOrder).success();
    }
    rep.dominance_violation = !(mf_at_nr || ix_at_nr) && !(mf_below || ix_below);

    const auto conclude = [&](int n_opt, Proof proof) {
        rep.n_optimal = n_opt;
        rep.proof = proof;
        rep.reverse_optimal = n_opt == nr;
        rep.lslg_optimal = n_opt == nr ? lslg_at_nr : lslg_below;
        rep.lsla_minfill_optimal = n_opt == nr ? mf_at_nr : mf_below;
        rep.lsla_index_optimal = n_opt == nr ? ix_at_nr : ix_below;
    };

    if (lslg_below || mf_below || ix_below) {
        conclude(nr - 1, Proof::GreedyWitness);
        return rep;
    }
    if (lower_bound(profile) > nr - 1) {
        const GapVector g = gaps(profile, nr - 1);
        bool negative = false;
        for (int i = 1; i <= profile.m; ++i)
            if (i != profile.distinguished && g.gap(i) < 0) negative = true;
        conclude(nr, negative ? Proof::NegativeGap : Proof::Observation1);
        return rep;
    }

    const FeasibilityResult fr = exists_manipulation(profile, nr - 1, budget);
    rep.nodes = fr.nodes;
    rep.elapsed_ms = fr.elapsed_ms;
    switch (fr.status) {
        case Feasibility::Sat:
            conclude(nr - 1, Proof::ExactSat);
            break;
        case Feasibility::Unsat:
            conclude(nr, Proof::ExactUnsat);
            break;
        case Feasibility::Timeout:
            rep.proof = Proof::Timeout;
            break;
    }
    return rep;
}

}  // namespace borda

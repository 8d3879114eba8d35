#include "borda/greedy.hpp"

#include <algorithm>
#include <numeric>

#include "borda/election.hpp"

namespace borda {

ScorePool::ScorePool(int m, int n) {
    if (m < 2) throw ValidationError("score pool: need at least 2 candidates");
    if (n < 1) throw ValidationError("score pool: need at least 1 manipulator");
    count_.assign(m - 1, n);  // values 0..m-2
    total_ = (m - 1) * n;
}

int ScorePool::largest() const {
    for (int v = static_cast<int>(count_.size()) - 1; v >= 0; --v)
        if (count_[v] > 0) return v;
    throw std::logic_error("score pool: largest() on empty pool");
}

int ScorePool::choose(Score remaining_gap) const {
    if (empty()) throw std::logic_error("score pool: choose() on empty pool");
    const int top = std::min<Score>(remaining_gap, static_cast<int>(count_.size()) - 1);
    for (int v = top; v >= 0; --v)
        if (count_[v] > 0) return v;
    return largest();  // nothing fits
}

void ScorePool::remove(int value) {
    if (value < 0 || value >= static_cast<int>(count_.size()) || count_[value] == 0)
        throw std::logic_error("score pool: removing absent value " + std::to_string(value));
    --count_[value];
    --total_;
}

int choose_score(Score remaining_gap, const ScorePool& pool) {
    return pool.choose(remaining_gap);
}

ReverseResult reverse(const ScoreProfile& profile) {
    const int m = profile.m;
    const int d = profile.distinguished;
    std::vector<Score> totals = profile.scores;

    ReverseResult res;
    res.score_trace.push_back(totals);

    std::vector<std::vector<int>> rows;
    std::vector<int> order(m);
    for (;;) {
        const Score best = *std::max_element(totals.begin(), totals.end());
        if (best <= totals[d - 1]) break;

        // d first, then competing candidates by increasing current total,
        // ties by index.
        std::iota(order.begin(), order.end(), 1);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (a == d) return true;
            if (b == d) return false;
            if (totals[a - 1] != totals[b - 1]) return totals[a - 1] < totals[b - 1];
            return a < b;
        });
        std::vector<int> row(m);
        for (int k = 0; k < m; ++k) {
            row[order[k] - 1] = m - (k + 1);
            totals[order[k] - 1] += m - (k + 1);
        }
        rows.push_back(std::move(row));
        res.score_trace.push_back(totals);
    }

    res.n = static_cast<int>(rows.size());
    res.votes.m = m;
    res.votes.n = res.n;
    res.votes.distinguished = d;
    res.votes.entries.reserve(static_cast<std::size_t>(res.n) * m);
    for (const auto& row : rows)
        res.votes.entries.insert(res.votes.entries.end(), row.begin(), row.end());
    return res;
}

namespace {

ColumnMatrix empty_matrix(int m, int n, int d) {
    ColumnMatrix b;
    b.m = m;
    b.n = n;
    b.distinguished = d;
    b.columns.resize(m);
    b.columns[d - 1].assign(n, m - 1);
    return b;
}

GreedyOutcome finish(ColumnMatrix&& b, const ScoreProfile& profile, std::vector<Placement>&& trace) {
    const int d = profile.distinguished;
    const Score d_total = profile.score(d) + b.column_sum(d);
    bool ok = true;
    for (int i = 1; i <= profile.m && ok; ++i)
        if (i != d && profile.score(i) + b.column_sum(i) > d_total) ok = false;

    GreedyOutcome out;
    out.trace = std::move(trace);
    out.status = ok ? GreedyStatus::Success : GreedyStatus::Failure;
    if (ok) out.matrix = std::move(b);
    return out;
}

}  // namespace

GreedyOutcome lslg(const ScoreProfile& profile, int n, bool record_trace) {
    if (n < 1) throw ValidationError("lslg: coalition size must be at least 1");
    const int m = profile.m;
    const int d = profile.distinguished;

    ColumnMatrix b = empty_matrix(m, n, d);
    ScorePool pool(m, n);
    std::vector<Score> totals = profile.scores;  // s(V,i) + sum(B[i])
    std::vector<int> fill(m, 0);

    std::vector<Placement> trace;
    int iter = 0;
    while (!pool.empty()) {
        const int s = pool.largest();
        pool.remove(s);
        // Ties in the running total go to the highest candidate index; the
        // published split against the averaging greedy depends on this.
        int c = 0;
        for (int i = 1; i <= m; ++i) {
            if (i == d || fill[i - 1] >= n) continue;
            if (c == 0 || totals[i - 1] <= totals[c - 1]) c = i;
        }
        b.columns[c - 1].push_back(s);
        totals[c - 1] += s;
        ++fill[c - 1];
        ++iter;
        if (record_trace) trace.push_back({iter, c, s, b.column_sum(c)});
    }
    return finish(std::move(b), profile, std::move(trace));
}

GreedyOutcome lsla(const ScoreProfile& profile, int n, TiePolicy tie_policy, bool record_trace) {
    if (n < 1) throw ValidationError("lsla: coalition size must be at least 1");
    const int m = profile.m;
    const int d = profile.distinguished;

    ColumnMatrix b = empty_matrix(m, n, d);
    ScorePool pool(m, n);
    const GapVector g = gaps(profile, n);
    std::vector<Score> placed(m, 0);  // sum(B[i]) for competing columns
    std::vector<int> fill(m, 0);

    std::vector<Placement> trace;
    int iter = 0;
    while (!pool.empty()) {
        // Column with the highest average desired score among unfilled
        // competing columns; averages compared exactly by cross-multiplying.
        int c = 0;
        Score c_rem = 0;
        int c_slots = 0;
        for (int i = 1; i <= m; ++i) {
            if (i == d || fill[i - 1] >= n) continue;
            const Score rem = g.gap(i) - placed[i - 1];
            const int slots = n - fill[i - 1];
            if (c == 0) {
                c = i, c_rem = rem, c_slots = slots;
                continue;
            }
            const Score lhs = rem * c_slots, rhs = c_rem * slots;
            bool better = lhs > rhs;
            if (lhs == rhs && tie_policy == TiePolicy::MinFill)
                better = fill[i - 1] < fill[c - 1];
            if (better) c = i, c_rem = rem, c_slots = slots;
        }

        const int s = pool.choose(g.gap(c) - placed[c - 1]);
        pool.remove(s);
        b.columns[c - 1].push_back(s);
        placed[c - 1] += s;
        ++fill[c - 1];
        ++iter;
        if (record_trace) trace.push_back({iter, c, s, placed[c - 1]});
    }
    return finish(std::move(b), profile, std::move(trace));
}

}  // namespace borda

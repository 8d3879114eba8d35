#include "borda/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "borda/election.hpp"

namespace borda {

namespace {

// Structural part of the ColumnMatrix invariants: column sizes, global value
// counts, and column d pinned to m-1's. Returns a diagnostic or empty.
std::string structural_problem(const ColumnMatrix& b) {
    const int m = b.m, n = b.n, d = b.distinguished;
    if (m < 1 || n < 0) return "bad dimensions";
    if (d < 1 || d > m) return "distinguished column out of range";
    if (static_cast<int>(b.columns.size()) != m) return "wrong number of columns";
    std::vector<int> value_count(m, 0);
    for (int i = 1; i <= m; ++i) {
        const auto& col = b.columns[i - 1];
        if (static_cast<int>(col.size()) != n)
            return "column " + std::to_string(i) + " holds " + std::to_string(col.size()) +
                   " elements, expected " + std::to_string(n);
        for (int v : col) {
            if (v < 0 || v >= m) return "value out of range in column " + std::to_string(i);
            ++value_count[v];
            if (i == d && v != m - 1)
                return "distinguished column contains a value other than m-1";
        }
    }
    for (int v = 0; v < m; ++v)
        if (value_count[v] != n)
            return "value " + std::to_string(v) + " appears " + std::to_string(value_count[v]) +
                   " times, expected " + std::to_string(n);
    return {};
}

bool try_augment(const OccurrenceGraph& g, int value, std::vector<bool>& visited,
                 std::vector<int>& match_col) {
    for (int j = 0; j < g.m; ++j) {
        if (g.count[value][j] == 0 || visited[j]) continue;
        visited[j] = true;
        if (match_col[j] < 0 || try_augment(g, match_col[j], visited, match_col)) {
            match_col[j] = value;
            return true;
        }
    }
    return false;
}

}  // namespace

OccurrenceGraph OccurrenceGraph::from_columns(const ColumnMatrix& b) {
    OccurrenceGraph g;
    g.m = b.m;
    g.count.assign(b.m, std::vector<int>(b.m, 0));
    for (int i = 0; i < b.m; ++i)
        for (int v : b.columns[i]) ++g.count[v][i];
    return g;
}

std::vector<int> perfect_matching(const OccurrenceGraph& g) {
    std::vector<int> match_col(g.m, -1);  // column index -> matched value
    for (int v = 0; v < g.m; ++v) {
        std::vector<bool> visited(g.m, false);
        if (!try_augment(g, v, visited, match_col))
            throw std::logic_error("perfect_matching: no matching in a regular occurrence graph");
    }
    std::vector<int> match(g.m);  // value -> column, 1-based
    for (int j = 0; j < g.m; ++j) match[match_col[j]] = j + 1;
    return match;
}

VoteMatrix convert_to_votes(const ColumnMatrix& b) {
    if (auto problem = structural_problem(b); !problem.empty())
        throw ValidationError("convert_to_votes: " + problem);

    OccurrenceGraph g = OccurrenceGraph::from_columns(b);
    VoteMatrix a;
    a.m = b.m;
    a.n = b.n;
    a.distinguished = b.distinguished;
    a.entries.resize(static_cast<std::size_t>(b.n) * b.m);
    for (int r = 0; r < b.n; ++r) {
        const std::vector<int> match = perfect_matching(g);
        for (int v = 0; v < b.m; ++v) {
            a.at(r, match[v]) = v;
            --g.count[v][match[v] - 1];
        }
    }
    return a;
}

bool validate_column_matrix(const ColumnMatrix& b, const ScoreProfile& profile, int n) {
    if (b.m != profile.m || b.n != n || b.distinguished != profile.distinguished) return false;
    if (!structural_problem(b).empty()) return false;
    const GapVector g = gaps(profile, n);
    for (int i = 1; i <= b.m; ++i)
        if (b.column_sum(i) > g.gap(i)) return false;
    return true;
}

std::vector<Vote> to_ballots(const VoteMatrix& a) {
    std::vector<Vote> ballots;
    ballots.reserve(a.n);
    for (int r = 0; r < a.n; ++r) {
        Vote v;
        v.ranking.resize(a.m);
        std::iota(v.ranking.begin(), v.ranking.end(), 1);
        std::sort(v.ranking.begin(), v.ranking.end(), [&](int x, int y) {
            if (a.at(r, x) != a.at(r, y)) return a.at(r, x) > a.at(r, y);
            return x < y;
        });
        ballots.push_back(std::move(v));
    }
    return ballots;
}

}  // namespace borda

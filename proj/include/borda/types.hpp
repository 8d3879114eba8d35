#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace borda {

using Score = std::int64_t;

// Bad input from a caller or a file. Internal inconsistencies (things that
// cannot happen on valid input) throw std::logic_error instead.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A strict ranking of all m candidates, best first. Candidates are 1-based.
// The candidate at 1-based position k receives score m - k.
struct Vote {
    std::vector<int> ranking;

    int size() const { return static_cast<int>(ranking.size()); }
    bool is_permutation() const;
};

struct Election {
    int m = 0;
    std::vector<Vote> votes;
    int distinguished = 0;  // candidate d, 1..m

    // Throws ValidationError naming the first offending vote, if any.
    void validate() const;
};

// Per-candidate Borda totals of the non-manipulator votes. Every algorithm in
// the library depends only on this, not on the underlying votes.
struct ScoreProfile {
    int m = 0;
    std::vector<Score> scores;  // indexed by candidate - 1
    int distinguished = 0;
    std::optional<int> voter_count;
    // Necessary condition for the scores to come from real votes: the total
    // must be divisible by m(m-1)/2. Profiles failing it are still accepted;
    // callers may warn.
    bool divisible_sum = true;

    static ScoreProfile from_scores(int m, std::vector<Score> scores, int distinguished,
                                    std::optional<int> voter_count = std::nullopt);

    Score score(int candidate) const { return scores[candidate - 1]; }
    Score total() const;
};

// Per-candidate slack for a fixed coalition size n: how much score column i
// may still absorb before candidate i overtakes d's achievable total.
// gaps[d-1] is always n*(m-1). Negative entries are legal and mean that no
// n-manipulation exists.
struct GapVector {
    int n = 0;
    std::vector<Score> gaps;  // indexed by candidate - 1

    Score gap(int candidate) const { return gaps[candidate - 1]; }
};

// n manipulator ballots in score form: entry (r, i) is the score manipulator
// r gives candidate i. Every row is a permutation of {0..m-1} and column d
// holds only m-1 (the manipulators rank d first).
struct VoteMatrix {
    int m = 0;
    int n = 0;
    int distinguished = 0;
    std::vector<int> entries;  // row-major, n x m

    int at(int row, int candidate) const { return entries[static_cast<std::size_t>(row) * m + candidate - 1]; }
    int& at(int row, int candidate) { return entries[static_cast<std::size_t>(row) * m + candidate - 1]; }
    Score column_sum(int candidate) const;
};

// Relaxation of VoteMatrix with the row structure dropped: per-candidate
// multisets of assigned scores. Column d is fixed to n copies of m-1; every
// value in {0..m-1} appears exactly n times overall.
struct ColumnMatrix {
    int m = 0;
    int n = 0;
    int distinguished = 0;
    std::vector<std::vector<int>> columns;  // size m, n values each when complete

    Score column_sum(int candidate) const;
};

}  // namespace borda

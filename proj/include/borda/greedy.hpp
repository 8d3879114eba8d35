#pragma once

#include "borda/types.hpp"

namespace borda {

// How LSLA breaks ties between columns with equal average desired score.
// MinFill prefers the column with fewest placed elements; IndexOrder is the
// deterministic stand-in for an arbitrary choice. Remaining ties go to the
// lowest candidate index under both policies.
enum class TiePolicy { MinFill, IndexOrder };

// The scores the coalition still has to hand out: initially n copies of each
// value in {0..m-2}, kept as per-value counts.
class ScorePool {
public:
    ScorePool(int m, int n);

    bool empty() const { return total_ == 0; }
    int total() const { return total_; }
    int largest() const;
    // Largest pooled score <= remaining_gap; the pool's largest element when
    // nothing fits. The caller removes the score it takes.
    int choose(Score remaining_gap) const;
    void remove(int value);
    const std::vector<int>& counts() const { return count_; }

private:
    std::vector<int> count_;  // count_[v] = multiplicity of score v
    int total_ = 0;
};

// Free-function form of ScorePool::choose. Throws on an empty pool.
int choose_score(Score remaining_gap, const ScorePool& pool);

struct Placement {
    int iter;          // 1-based placement number
    int column;        // candidate index
    int score;         // value placed
    Score column_sum;  // sum of the column's placed values afterwards
};

enum class GreedyStatus { Success, Failure };

struct GreedyOutcome {
    GreedyStatus status = GreedyStatus::Failure;
    std::optional<ColumnMatrix> matrix;  // present iff Success
    std::vector<Placement> trace;        // filled when requested

    bool success() const { return status == GreedyStatus::Success; }
};

struct ReverseResult {
    int n = 0;
    VoteMatrix votes;
    // Row 0 holds the profile's scores; row t the totals after manipulator t.
    std::vector<std::vector<Score>> score_trace;
};

// Zuckerman et al.'s greedy: add whole ballots, each ranking d first and the
// competing candidates in increasing current-score order (ties by index),
// until d's running total is maximal. Uses at most one manipulator more than
// optimal.
ReverseResult reverse(const ScoreProfile& profile);

// Largest score in largest gap: pop the largest pooled score and push it into
// the unfilled competing column with the lowest running total (ties go to the
// highest candidate index). Success iff the finished matrix is a
// manipulation.
GreedyOutcome lslg(const ScoreProfile& profile, int n, bool record_trace = false);

// Average desired score: fill the unfilled competing column maximizing
// (remaining gap) / (remaining slots) with the largest score that still fits
// its gap. Success iff the finished matrix is a manipulation.
GreedyOutcome lsla(const ScoreProfile& profile, int n, TiePolicy tie_policy = TiePolicy::MinFill,
                   bool record_trace = false);

}  // namespace borda

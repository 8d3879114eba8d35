#pragma once

#include "borda/types.hpp"

namespace borda {

// Bipartite multigraph between score values 0..m-1 and columns 1..m, with
// multi-edges stored as occurrence counts. In a complete ColumnMatrix every
// vertex on both sides has degree n, which guarantees a perfect matching.
struct OccurrenceGraph {
    int m = 0;
    std::vector<std::vector<int>> count;  // count[value][column-1]

    static OccurrenceGraph from_columns(const ColumnMatrix& b);
};

// matching[value] = the column (1-based) the value goes to. Found by
// augmenting-path search; a regular occurrence graph always has one, so
// failure on valid input is an internal error.
std::vector<int> perfect_matching(const OccurrenceGraph& g);

// Converts a column-multiset matrix into concrete manipulator ballots: peel
// one perfect matching per row until the columns are exhausted. Preserves
// per-column multisets and sums; every output row is a permutation of
// {0..m-1}.
VoteMatrix convert_to_votes(const ColumnMatrix& b);

// True iff b is structurally sound and every column sum is within
// gaps(profile, n).
bool validate_column_matrix(const ColumnMatrix& b, const ScoreProfile& profile, int n);

// Ballot form of a vote matrix: d first, then competing candidates by
// descending assigned score.
std::vector<Vote> to_ballots(const VoteMatrix& a);

}  // namespace borda

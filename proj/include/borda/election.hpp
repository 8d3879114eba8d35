#pragma once

#include "borda/types.hpp"

namespace borda {

// Borda totals of the election's votes.
ScoreProfile tally(const Election& election);

GapVector gaps(const ScoreProfile& profile, int n);

// Candidates attaining the maximum score, ascending.
std::vector<int> winners(const ScoreProfile& profile);

// True iff d's total is at least every other candidate's total once the
// manipulator votes are added (ties favour the manipulators). Every
// manipulator vote must rank d first; violations throw ValidationError.
bool verify_manipulation(const ScoreProfile& profile, const VoteMatrix& votes);

// Score-grid form of a list of ballots.
VoteMatrix vote_matrix(int m, int distinguished, const std::vector<Vote>& ballots);

}  // namespace borda

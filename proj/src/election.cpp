#include "borda/election.hpp"

#include <algorithm>
#include <numeric>

namespace borda {

bool Vote::is_permutation() const {
    const int m = size();
    std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
    for (int c : ranking) {
        if (c < 1 || c > m || seen[c]) return false;
        seen[c] = true;
    }
    return true;
}

void Election::validate() const {
    if (m < 1) throw ValidationError("election: candidate count must be at least 1");
    if (distinguished < 1 || distinguished > m)
        throw ValidationError("election: distinguished candidate out of range 1.." + std::to_string(m));
    for (std::size_t v = 0; v < votes.size(); ++v) {
        if (votes[v].size() != m || !votes[v].is_permutation())
            throw ValidationError("election: vote " + std::to_string(v) +
                                  " is not a permutation of 1.." + std::to_string(m));
    }
}

ScoreProfile ScoreProfile::from_scores(int m, std::vector<Score> scores, int distinguished,
                                       std::optional<int> voter_count) {
    if (m < 1) throw ValidationError("profile: candidate count must be at least 1");
    if (static_cast<int>(scores.size()) != m)
        throw ValidationError("profile: expected " + std::to_string(m) + " scores, got " +
                              std::to_string(scores.size()));
    if (distinguished < 1 || distinguished > m)
        throw ValidationError("profile: distinguished candidate out of range 1.." + std::to_string(m));
    for (Score s : scores)
        if (s < 0) throw ValidationError("profile: scores must be non-negative");

    ScoreProfile p;
    p.m = m;
    p.scores = std::move(scores);
    p.distinguished = distinguished;
    p.voter_count = voter_count;
    const Score unit = static_cast<Score>(m) * (m - 1) / 2;
    p.divisible_sum = unit == 0 || p.total() % unit == 0;
    return p;
}

Score ScoreProfile::total() const {
    return std::accumulate(scores.begin(), scores.end(), Score{0});
}

Score VoteMatrix::column_sum(int candidate) const {
    Score s = 0;
    for (int r = 0; r < n; ++r) s += at(r, candidate);
    return s;
}

Score ColumnMatrix::column_sum(int candidate) const {
    const auto& col = columns[candidate - 1];
    return std::accumulate(col.begin(), col.end(), Score{0});
}

ScoreProfile tally(const Election& election) {
    election.validate();
    const int m = election.m;
    std::vector<Score> scores(m, 0);
    for (const Vote& v : election.votes)
        for (int k = 0; k < m; ++k) scores[v.ranking[k] - 1] += m - (k + 1);
    return ScoreProfile::from_scores(m, std::move(scores), election.distinguished,
                                     static_cast<int>(election.votes.size()));
}

GapVector gaps(const ScoreProfile& profile, int n) {
    if (n < 0) throw ValidationError("gaps: coalition size must be non-negative");
    GapVector g;
    g.n = n;
    g.gaps.resize(profile.m);
    const Score reach = profile.score(profile.distinguished) + static_cast<Score>(n) * (profile.m - 1);
    for (int i = 1; i <= profile.m; ++i) g.gaps[i - 1] = reach - profile.score(i);
    return g;
}

std::vector<int> winners(const ScoreProfile& profile) {
    const Score best = *std::max_element(profile.scores.begin(), profile.scores.end());
    std::vector<int> out;
    for (int i = 1; i <= profile.m; ++i)
        if (profile.score(i) == best) out.push_back(i);
    return out;
}

bool verify_manipulation(const ScoreProfile& profile, const VoteMatrix& votes) {
    if (votes.m != profile.m)
        throw ValidationError("verify: vote matrix is over " + std::to_string(votes.m) +
                              " candidates, profile over " + std::to_string(profile.m));
    const int d = profile.distinguished;
    for (int r = 0; r < votes.n; ++r)
        if (votes.at(r, d) != votes.m - 1)
            throw ValidationError("verify: manipulator vote " + std::to_string(r) +
                                  " does not rank the distinguished candidate first");
    const Score d_total = profile.score(d) + votes.column_sum(d);
    for (int i = 1; i <= profile.m; ++i) {
        if (i == d) continue;
        if (profile.score(i) + votes.column_sum(i) > d_total) return false;
    }
    return true;
}

VoteMatrix vote_matrix(int m, int distinguished, const std::vector<Vote>& ballots) {
    VoteMatrix a;
    a.m = m;
    a.n = static_cast<int>(ballots.size());
    a.distinguished = distinguished;
    a.entries.resize(static_cast<std::size_t>(a.n) * m);
    for (int r = 0; r < a.n; ++r) {
        if (ballots[r].size() != m || !ballots[r].is_permutation())
            throw ValidationError("vote_matrix: ballot " + std::to_string(r) +
                                  " is not a permutation of 1.." + std::to_string(m));
        for (int k = 0; k < m; ++k) a.at(r, ballots[r].ranking[k]) = m - (k + 1);
    }
    return a;
}

}  // namespace borda

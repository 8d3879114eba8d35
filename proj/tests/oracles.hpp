#pragma once

// Test-only oracles. These deliberately avoid the library's solving paths:
// feasibility is decided by enumerating whole vote multisets, so they stay
// valid even if the count-matrix search is broken.

#include <algorithm>
#include <optional>
#include <vector>

#include "borda/election.hpp"
#include "borda/gen.hpp"
#include "borda/types.hpp"

namespace oracles {

// All (m-1)! rankings that place d first.
inline std::vector<borda::Vote> d_first_rankings(int m, int d) {
    std::vector<int> rest;
    for (int i = 1; i <= m; ++i)
        if (i != d) rest.push_back(i);
    std::vector<borda::Vote> out;
    do {
        borda::Vote v;
        v.ranking.push_back(d);
        v.ranking.insert(v.ranking.end(), rest.begin(), rest.end());
        out.push_back(std::move(v));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

namespace detail {

inline bool wins(const borda::ScoreProfile& profile, const std::vector<borda::Score>& added) {
    const borda::Score d_total =
        profile.score(profile.distinguished) + added[profile.distinguished - 1];
    for (int i = 1; i <= profile.m; ++i)
        if (i != profile.distinguished && profile.score(i) + added[i - 1] > d_total) return false;
    return true;
}

inline bool enumerate(const borda::ScoreProfile& profile,
                      const std::vector<borda::Vote>& rankings, std::vector<borda::Score>& added,
                      std::size_t start, int left) {
    if (left == 0) return wins(profile, added);
    for (std::size_t r = start; r < rankings.size(); ++r) {
        for (int k = 0; k < profile.m; ++k)
            added[rankings[r].ranking[k] - 1] += profile.m - (k + 1);
        if (enumerate(profile, rankings, added, r, left - 1)) return true;
        for (int k = 0; k < profile.m; ++k)
            added[rankings[r].ranking[k] - 1] -= profile.m - (k + 1);
    }
    return false;
}

}  // namespace detail

// Does any multiset of n d-first votes make d win? Exponential; keep m and n
// tiny.
inline bool brute_force_exists(const borda::ScoreProfile& profile, int n) {
    const auto rankings = d_first_rankings(profile.m, profile.distinguished);
    std::vector<borda::Score> added(profile.m, 0);
    return detail::enumerate(profile, rankings, added, 0, n);
}

// Smallest coalition size up to cap, if any.
inline std::optional<int> brute_force_minimum(const borda::ScoreProfile& profile, int cap) {
    for (int n = 0; n <= cap; ++n)
        if (brute_force_exists(profile, n)) return n;
    return std::nullopt;
}

// Structurally valid random ColumnMatrix: column d pinned to m-1's, the
// remaining value pool dealt into the competing columns, n each.
inline borda::ColumnMatrix random_column_matrix(int m, int n, int d, borda::Rng& rng) {
    std::vector<int> pool;
    for (int v = 0; v <= m - 2; ++v) pool.insert(pool.end(), n, v);
    for (std::size_t i = pool.size() - 1; i > 0; --i)
        std::swap(pool[i], pool[rng.below(i + 1)]);

    borda::ColumnMatrix b;
    b.m = m;
    b.n = n;
    b.distinguished = d;
    b.columns.resize(m);
    b.columns[d - 1].assign(n, m - 1);
    std::size_t at = 0;
    for (int i = 1; i <= m; ++i) {
        if (i == d) continue;
        b.columns[i - 1].assign(pool.begin() + at, pool.begin() + at + n);
        at += n;
    }
    return b;
}

// Random profile from a small uniform election (gives realistic score
// spreads and voter counts).
inline borda::ScoreProfile random_profile(int m, int p, std::uint64_t seed) {
    return borda::tally(borda::uniform_election(m, p, seed));
}

}  // namespace oracles

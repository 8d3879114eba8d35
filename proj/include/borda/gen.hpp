#pragma once

#include <random>

#include "borda/types.hpp"

namespace borda {

// All library randomness flows through this wrapper: a std::mt19937_64
// stream (fully specified by the standard) with rejection-sampled bounded
// draws, so a seed produces the same elections on every platform and
// standard library. The streams are part of the output contract; do not
// change the sampling scheme.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound);
    unsigned __int128 below128(unsigned __int128 bound);

private:
    std::mt19937_64 eng_;
};

// Uniform permutation of 1..m by Fisher-Yates.
Vote random_ranking(int m, Rng& rng);

// p independent uniform votes; the distinguished candidate defaults to m.
Election uniform_election(int m, int p, std::uint64_t seed);

// Polya-Eggenberger urn: a drawn ranking goes back into the urn with `a`
// extra copies of itself, so later voters tend to repeat earlier ones.
// a < 0 selects the default strength a = m!, under which the second vote
// repeats the first with probability (m! + 1) / (2 m!). Only drawn rankings
// are materialized; the m! base mass is handled analytically.
Election urn_election(int m, int p, std::int64_t a, std::uint64_t seed);

// Two-vote election with s(V, i) = m/2 + i for every competing i and
// s(V, d) = 0, d = m. Requires m even, m > 2. LSLG finds an optimal
// 2-manipulation here while REVERSE needs 3 manipulators.
Election prop1_instance(int m);

// Four-candidate profile (6k, 4k, 2k, 0) with d = 4, realizable as 2k equal
// votes 1>2>3>4. Requires k > 0 divisible by 36. REVERSE is optimal at 2k
// manipulators while LSLG needs at least 2k + k/9 - 3.
ScoreProfile thm2_instance(int k);

}  // namespace borda

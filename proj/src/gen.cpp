#include "borda/gen.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "borda/election.hpp"

namespace borda {

namespace {

using u128 = unsigned __int128;

// 33! is the largest factorial below 2^127.
constexpr int kMaxFactorialM = 33;

u128 factorial128(int m) {
    u128 f = 1;
    for (int i = 2; i <= m; ++i) f *= static_cast<unsigned>(i);
    return f;
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
    assert(bound > 0);
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

u128 Rng::below128(u128 bound) {
    assert(bound > 0);
    if (bound <= ~std::uint64_t{0}) return below(static_cast<std::uint64_t>(bound));
    const u128 threshold = (u128{0} - bound) % bound;  // 2^128 mod bound
    for (;;) {
        const u128 r = (u128{next()} << 64) | next();
        if (r >= threshold) return r % bound;
    }
}

Vote random_ranking(int m, Rng& rng) {
    Vote v;
    v.ranking.resize(m);
    std::iota(v.ranking.begin(), v.ranking.end(), 1);
    for (int i = m - 1; i >= 1; --i)
        std::swap(v.ranking[i], v.ranking[rng.below(i + 1)]);
    return v;
}

Election uniform_election(int m, int p, std::uint64_t seed) {
    if (m < 2) throw ValidationError("uniform_election: need at least 2 candidates");
    if (p < 1) throw ValidationError("uniform_election: need at least 1 voter");
    Rng rng(seed);
    Election e;
    e.m = m;
    e.distinguished = m;
    e.votes.reserve(p);
    for (int t = 0; t < p; ++t) e.votes.push_back(random_ranking(m, rng));
    return e;
}

Election urn_election(int m, int p, std::int64_t a, std::uint64_t seed) {
    if (m < 2) throw ValidationError("urn_election: need at least 2 candidates");
    if (p < 1) throw ValidationError("urn_election: need at least 1 voter");
    if (a > 0 && m > kMaxFactorialM)
        throw ValidationError("urn_election: explicit urn strength needs m <= " +
                              std::to_string(kMaxFactorialM) + "; use the default a = m!");

    // a = m! makes the added mass per draw equal to the whole base mass, so
    // the fresh-draw probability is exactly 1/(t+1) and no factorial is
    // needed; that keeps the default usable for any m.
    const bool default_strength =
        a < 0 || (m <= kMaxFactorialM && static_cast<u128>(a) == factorial128(m));

    Rng rng(seed);
    Election e;
    e.m = m;
    e.distinguished = m;
    e.votes.reserve(p);
    for (int t = 0; t < p; ++t) {
        bool fresh = true;
        std::size_t copy_from = 0;
        if (t > 0 && a != 0) {
            if (default_strength) {
                const std::uint64_t r = rng.below(static_cast<std::uint64_t>(t) + 1);
                fresh = r == 0;
                if (!fresh) copy_from = r - 1;
            } else {
                const u128 base = factorial128(m);
                const u128 r = rng.below128(base + static_cast<u128>(a) * t);
                fresh = r < base;
                if (!fresh) copy_from = static_cast<std::size_t>((r - base) / static_cast<u128>(a));
            }
        }
        e.votes.push_back(fresh ? random_ranking(m, rng) : e.votes[copy_from]);
    }
    return e;
}

Election prop1_instance(int m) {
    if (m <= 2 || m % 2 != 0)
        throw ValidationError("prop1_instance: m must be even and greater than 2");

    // Two score vectors summing to m/2 + i on each competing candidate i and
    // 0 on d = m; each is a permutation of {0..m-1} so it encodes one vote.
    std::vector<int> u(m, 0), v(m, 0);
    for (int i = 1; i < m; ++i) {
        if (i % 2 == 1) {
            u[i - 1] = m / 2 + (i - 1) / 2;
            v[i - 1] = (i + 1) / 2;
        } else {
            u[i - 1] = i / 2;
            v[i - 1] = m / 2 + i / 2;
        }
    }

    const auto to_vote = [m](const std::vector<int>& score) {
        Vote vote;
        vote.ranking.resize(m);
        std::iota(vote.ranking.begin(), vote.ranking.end(), 1);
        std::sort(vote.ranking.begin(), vote.ranking.end(),
                  [&](int x, int y) { return score[x - 1] > score[y - 1]; });
        return vote;
    };

    Election e;
    e.m = m;
    e.distinguished = m;
    e.votes = {to_vote(u), to_vote(v)};

    const ScoreProfile check = tally(e);
    for (int i = 1; i < m; ++i)
        if (check.score(i) != m / 2 + i)
            throw std::logic_error("prop1_instance: construction lost its closed form");
    if (check.score(m) != 0) throw std::logic_error("prop1_instance: d must score 0");
    return e;
}

ScoreProfile thm2_instance(int k) {
    if (k <= 0 || k % 36 != 0)
        throw ValidationError("thm2_instance: k must be positive and divisible by 36");
    return ScoreProfile::from_scores(
        4, {6 * static_cast<Score>(k), 4 * static_cast<Score>(k), 2 * static_cast<Score>(k), 0}, 4,
        2 * k);
}

}  // namespace borda

#include <cmath>
#include <map>

#include "doctest.h"

#include "borda/election.hpp"
#include "borda/gen.hpp"
#include "borda/greedy.hpp"

using namespace borda;

TEST_CASE("uniform elections are deterministic per seed and well formed") {
    const Election a = uniform_election(4, 4, 123);
    const Election b = uniform_election(4, 4, 123);
    CHECK(a.votes.size() == 4);
    CHECK(a.distinguished == 4);
    for (std::size_t i = 0; i < a.votes.size(); ++i) CHECK(a.votes[i].ranking == b.votes[i].ranking);
    a.validate();

    const Election c = uniform_election(4, 4, 124);
    bool differs = false;
    for (std::size_t i = 0; i < a.votes.size(); ++i)
        if (a.votes[i].ranking != c.votes[i].ranking) differs = true;
    CHECK(differs);
}

TEST_CASE("two candidates means coin-flip votes") {
    const Election e = uniform_election(2, 100, 5);
    int first = 0;
    for (const Vote& v : e.votes) {
        const bool a = v.ranking == std::vector<int>{1, 2};
        const bool b = v.ranking == std::vector<int>{2, 1};
        CHECK((a || b));
        if (a) ++first;
    }
    CHECK(first > 20);
    CHECK(first < 80);
}

TEST_CASE("uniform ranking frequencies stay within five sigma") {
    const Election e = uniform_election(3, 6000, 2024);
    std::map<std::vector<int>, int> freq;
    for (const Vote& v : e.votes) ++freq[v.ranking];
    CHECK(freq.size() == 6);
    const double sigma = std::sqrt(6000.0 * (1.0 / 6.0) * (5.0 / 6.0));
    for (const auto& [ranking, count] : freq) CHECK(std::abs(count - 1000.0) <= 5.0 * sigma);
}

TEST_CASE("urn with a=0 degenerates to the uniform stream") {
    const Election urn = urn_election(5, 20, 0, 99);
    const Election uni = uniform_election(5, 20, 99);
    for (std::size_t i = 0; i < urn.votes.size(); ++i)
        CHECK(urn.votes[i].ranking == uni.votes[i].ranking);
}

TEST_CASE("urn elections are deterministic per seed") {
    const Election a = urn_election(6, 30, -1, 4);
    const Election b = urn_election(6, 30, -1, 4);
    for (std::size_t i = 0; i < a.votes.size(); ++i) CHECK(a.votes[i].ranking == b.votes[i].ranking);
}

TEST_CASE("urn default strength repeats the first vote about half the time") {
    int repeats = 0;
    const int pairs = 2000;
    for (int s = 0; s < pairs; ++s) {
        const Election e = urn_election(5, 2, -1, 10000 + s);
        if (e.votes[0].ranking == e.votes[1].ranking) ++repeats;
    }
    const double freq = static_cast<double>(repeats) / pairs;
    CHECK(freq > 0.45);
    CHECK(freq < 0.56);
}

TEST_CASE("an explicit a equal to m! matches the default path") {
    // 5! = 120; the default-strength shortcut must not change the stream.
    const Election a = urn_election(5, 12, 120, 321);
    const Election b = urn_election(5, 12, -1, 321);
    for (std::size_t i = 0; i < a.votes.size(); ++i) CHECK(a.votes[i].ranking == b.votes[i].ranking);
}

TEST_CASE("explicit urn strengths follow the exact repeat probability") {
    // m=4, a=48: the second draw repeats the first with probability
    // (1 + 48) / (24 + 48) = 49/72.
    int repeats = 0;
    const int pairs = 2000;
    for (int s = 0; s < pairs; ++s) {
        const Election e = urn_election(4, 2, 48, 40000 + s);
        if (e.votes[0].ranking == e.votes[1].ranking) ++repeats;
    }
    const double freq = static_cast<double>(repeats) / pairs;
    const double expected = 49.0 / 72.0;
    CHECK(std::abs(freq - expected) < 0.05);
}

TEST_CASE("urn homogeneity shows up as fully identical electorates") {
    bool found = false;
    for (std::uint64_t seed = 0; seed < 1000 && !found; ++seed) {
        const Election e = urn_election(4, 4, -1, seed);
        found = true;
        for (const Vote& v : e.votes)
            if (v.ranking != e.votes[0].ranking) found = false;
    }
    CHECK(found);
}

TEST_CASE("two-vote family instances match their closed form") {
    const Election e4 = prop1_instance(4);
    CHECK(e4.votes.size() == 2);
    CHECK(tally(e4).scores == std::vector<Score>{3, 4, 5, 0});

    CHECK(tally(prop1_instance(6)).scores == std::vector<Score>{4, 5, 6, 7, 8, 0});

    const ScoreProfile p8 = tally(prop1_instance(8));
    Score competing = 0;
    for (int i = 1; i <= 7; ++i) competing += p8.score(i);
    CHECK(competing == 2 * (8 * 7 / 2));
    CHECK(p8.score(8) == 0);

    CHECK_THROWS_AS(prop1_instance(5), ValidationError);
    CHECK_THROWS_AS(prop1_instance(2), ValidationError);
}

TEST_CASE("pathology family profiles and their realizability") {
    const ScoreProfile p36 = thm2_instance(36);
    CHECK(p36.scores == std::vector<Score>{216, 144, 72, 0});
    CHECK(p36.distinguished == 4);
    CHECK(p36.voter_count == 72);

    CHECK(thm2_instance(72).scores == std::vector<Score>{432, 288, 144, 0});

    // 2k copies of 1>2>3>4 realize the profile.
    Election realized;
    realized.m = 4;
    realized.distinguished = 4;
    realized.votes.assign(72, Vote{{1, 2, 3, 4}});
    CHECK(tally(realized).scores == p36.scores);

    CHECK_THROWS_AS(thm2_instance(35), ValidationError);
    CHECK_THROWS_AS(thm2_instance(0), ValidationError);
    CHECK_THROWS_AS(thm2_instance(-36), ValidationError);
}

TEST_CASE("generator preconditions are enforced") {
    CHECK_THROWS_AS(uniform_election(1, 4, 0), ValidationError);
    CHECK_THROWS_AS(uniform_election(3, 0, 0), ValidationError);
    CHECK_THROWS_AS(urn_election(40, 4, 7, 0), ValidationError);  // explicit a needs small m
    CHECK_NOTHROW(urn_election(40, 2, -1, 0));                    // default strength scales
}

TEST_CASE("cross-module: generated families reproduce the known outcomes") {
    for (int m = 4; m <= 12; m += 2) {
        const ScoreProfile p = tally(prop1_instance(m));
        CHECK(reverse(p).n == 3);
        CHECK(lslg(p, 2).success());
    }
    const ScoreProfile t = thm2_instance(36);
    CHECK(reverse(t).n == 72);
    CHECK_FALSE(lslg(t, 72).success());
}

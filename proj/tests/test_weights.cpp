#include "wsd/chambers.hpp"
#include "wsd/verify.hpp"

#include <doctest.h>

using namespace wsd;

namespace {

WeightData weights(const std::string& text, int genus = 0, int beta = 0) {
    return makeWeightData(parseWeightList(text), genus, beta);
}

}  // namespace

TEST_CASE("weight parsing with repetition shorthand") {
    std::vector<Rational> plain = parseWeightList("2/5,2/5,2/5,1");
    REQUIRE(plain.size() == 4);
    CHECK(plain[0] == Rational(2, 5));
    CHECK(plain[3] == 1);

    std::vector<Rational> shorthand = parseWeightList("1^2,1/10^3");
    REQUIRE(shorthand.size() == 5);
    CHECK(shorthand[1] == 1);
    CHECK(shorthand[4] == Rational(1, 10));

    std::vector<Rational> eps = parseWeightList("1,e^2", Rational(1, 7));
    REQUIRE(eps.size() == 3);
    CHECK(eps[2] == Rational(1, 7));

    CHECK_THROWS_AS(parseWeightList("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parseWeightList("1,e"), std::invalid_argument);
    CHECK_THROWS_AS(makeWeightData(parseWeightList("3/2"), 0, 0), std::invalid_argument);
}

TEST_CASE("domain membership") {
    CHECK(inDomain(weights("1,1,1")));            // sum 3 > 2
    CHECK_FALSE(inDomain(weights("1/2,1/2,1/2")));  // sum 3/2
    CHECK_FALSE(inDomain(weights("0,0", 1)));       // the excluded point (0^n)
    CHECK(inDomain(weights("0,0", 2)));              // full cube for g >= 2
    CHECK(inDomain(weights("1/2,0", 1)));
    CHECK(inDomain(weights("1/10,1/10", 0, 3)));     // beta > 0: full cube
}

TEST_CASE("domination partial order") {
    CHECK(dominates(weights("1,1,1"), weights("1/3,1/3,1/3")));
    CHECK_FALSE(dominates(weights("1,1/4"), weights("1/2,1/2")));
    CHECK_FALSE(dominates(weights("1/2,1/2"), weights("1,1/4")));
    WeightData a = weights("2/3,1/5");
    CHECK(dominates(a, a));
    CHECK_THROWS_AS(dominates(weights("1,1"), weights("1,1,1")), std::invalid_argument);
}

TEST_CASE("domain is monotone under domination at (g,beta) = (0,0)") {
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + rng.below(4);
        std::vector<Rational> lo, hi;
        for (int i = 0; i < n; ++i) {
            int den = 1 + rng.below(12);
            int num = rng.below(den + 1);
            lo.emplace_back(num, den);
            int up = num + rng.below(den - num + 1);
            hi.emplace_back(up, den);
        }
        WeightData b = makeWeightData(lo, 0, 0);
        WeightData a = makeWeightData(hi, 0, 0);
        REQUIRE(dominates(a, b));
        if (inDomain(b)) CHECK(inDomain(a));
    }
}

TEST_CASE("generic perturbation stays inside the fine chamber") {
    WeightData ones = weights("1,1,1", 2);
    WeightData perturbed = perturbGeneric(ones, 0);
    CHECK(perturbed.positive());
    for (int i = 0; i < 3; ++i) CHECK(perturbed.weights[i] < 1);
    CHECK(perturbed.weights[0] != perturbed.weights[1]);
    CHECK(perturbed.weights[1] != perturbed.weights[2]);
    CHECK(perturbed.weights[0] != perturbed.weights[2]);
    CHECK(buildComplex(perturbed) == buildComplex(ones));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            CHECK(perturbed.weights[i] + perturbed.weights[j] > 1);

    WeightData thirds = weights("1/3,1/3,1/3", 2);
    WeightData p2 = perturbGeneric(thirds, 5);
    CHECK(buildComplex(p2) == buildComplex(thirds));
    CHECK(p2.weights[0] + p2.weights[1] + p2.weights[2] <= 1);

    // Already generic input: the output moves but the chamber does not.
    WeightData generic = weights("9/10,7/8,13/16", 2);
    WeightData p3 = perturbGeneric(generic, 1);
    CHECK(p3.weights != generic.weights);
    CHECK(sameFineChamber(p3, generic));

    CHECK_THROWS_AS(perturbGeneric(weights("1/2,0", 2), 0), std::invalid_argument);
}

TEST_CASE("perturbation preserves the complex across seeds and weights") {
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + rng.below(5);
        WeightData w = randomPositiveWeights(rng, n, 2);
        WeightData p = perturbGeneric(w, rng.next());
        CHECK(buildComplex(p) == buildComplex(w));
        // No subset of the perturbed data sits exactly on a wall.
        std::vector<Rational> sum(std::size_t(1) << n, Rational(0));
        for (unsigned mask = 1; mask < sum.size(); ++mask) {
            sum[mask] = sum[mask & (mask - 1)] + p.weights[__builtin_ctz(mask)];
            if (__builtin_popcount(mask) >= 2) CHECK(sum[mask] != 1);
        }
    }
}

TEST_CASE("perturbation with an acceptance predicate retries seeds") {
    WeightData w = weights("1,1,1", 2);
    int calls = 0;
    WeightData p = perturbGeneric(w, 0, [&calls](const WeightData&) { return ++calls >= 3; });
    CHECK(calls == 3);
    CHECK(buildComplex(p) == buildComplex(w));
}

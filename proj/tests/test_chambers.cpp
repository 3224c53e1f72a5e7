#include "wsd/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace wsd;

namespace {

WeightData weights(const std::string& text, int genus = 0, int beta = 0) {
    return makeWeightData(parseWeightList(text), genus, beta);
}

}  // namespace

TEST_CASE("wall arrangements") {
    std::vector<unsigned> fine = wallSubsets(4, Decomposition::fine);
    std::vector<unsigned> coarse = wallSubsets(4, Decomposition::coarse);
    CHECK(fine.size() == 11);   // subsets of size >= 2, up to |I| = n
    CHECK(coarse.size() == 5);  // size >= 3
    for (unsigned wall : coarse)
        CHECK(std::find(fine.begin(), fine.end(), wall) != fine.end());
    CHECK(std::find(fine.begin(), fine.end(), 0b1111u) != fine.end());
}

TEST_CASE("chamber signatures") {
    ChamberSignature fine2 = chamberSignature(weights("1,1", 2), Decomposition::fine);
    REQUIRE(fine2.atMostOne.size() == 1);
    CHECK_FALSE(fine2.atMostOne.at(0b11));  // 2 > 1

    ChamberSignature quarter = chamberSignature(weights("1/3,1/3,1/3,1/3", 2),
                                                Decomposition::fine);
    for (const auto& [mask, atMost] : quarter.atMostOne)
        CHECK(atMost == (__builtin_popcount(mask) <= 3));

    ChamberSignature coarse = chamberSignature(weights("1,1,1"), Decomposition::coarse);
    REQUIRE(coarse.atMostOne.size() == 1);
    CHECK_FALSE(coarse.atMostOne.at(0b111));
}

TEST_CASE("fine chamber equality needs equal signatures and zero sets") {
    CHECK(sameFineChamber(weights("1,1,1"), weights("9/10,9/10,9/10")));
    CHECK_FALSE(sameFineChamber(weights("1/2,1/2", 2), weights("1/2,0", 2)));
    CHECK_FALSE(sameFineChamber(weights("2/3,2/3,2/3"), weights("1/3,1/3,1/3")));
}

TEST_CASE("fine-chamber constancy propagates to the complex") {
    Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        WeightData w = randomPositiveWeights(rng, 2 + rng.below(5), 2);
        WeightData p = perturbGeneric(w, rng.next());
        if (sameFineChamber(w, p)) CHECK(buildComplex(w) == buildComplex(p));
    }
}

TEST_CASE("single-wall path") {
    CrossingPath path = crossingPath(weights("1,1,2/5,2/5,2/5"), weights("1,1,1/3,1/3,1/3"),
                                     3);
    REQUIRE(path.events.size() == 1);
    CHECK(path.events[0].subset == 0b11100);
    CHECK(path.events[0].add);
    CHECK(path.events[0].parameter > 0);
    CHECK(path.events[0].parameter < 1);
}

TEST_CASE("pairs cross before the triple from (1,1,1) down to (1/3,1/3,1/3)") {
    CrossingPath path = crossingPath(weights("1,1,1", 2), weights("1/3,1/3,1/3", 2), 0);
    REQUIRE(path.events.size() == 4);
    for (int i = 0; i < 3; ++i) CHECK(__builtin_popcount(path.events[i].subset) == 2);
    CHECK(path.events[3].subset == 0b111);
    for (int i = 0; i + 1 < 4; ++i)
        CHECK(path.events[i].parameter < path.events[i + 1].parameter);
}

TEST_CASE("degenerate and invalid paths") {
    WeightData generic = perturbGeneric(weights("9/10,9/10,9/10", 2), 1);
    CHECK(crossingPath(generic, generic, 0).events.empty());
    CHECK_THROWS_AS(crossingPath(weights("1/3,1/3,1/3", 2), weights("1,1,1", 2), 0),
                    std::invalid_argument);  // wrong direction
    CHECK_THROWS_AS(crossingPath(weights("1,0,1", 2), weights("1/2,0,1/2", 2), 0),
                    std::invalid_argument);  // zero weight
}

TEST_CASE("simple crossing detection") {
    SimplicialComplex before = buildComplex(weights("1,2/5,2/5,2/5"));
    SimplicialComplex after = before;
    after.insertFaceWithClosure(0b1110);
    CHECK(isSimpleCrossing(before, after) == std::optional<unsigned>(0b1110));
    CHECK_FALSE(isSimpleCrossing(before, before));

    SimplicialComplex two = skeletonComplex(4, 0);
    SimplicialComplex twoMore = two;
    twoMore.insertFaceWithClosure(0b0011);
    twoMore.insertFaceWithClosure(0b1100);
    CHECK_FALSE(isSimpleCrossing(two, twoMore));
}

TEST_CASE("crossing events compose to the target complex and stay simple") {
    Rng rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + rng.below(5);
        const int g = rng.below(3);
        auto [a, b] = randomDominatingPair(rng, n, g);
        CrossingPath path = crossingPath(a, b, rng.next());
        CHECK(buildComplex(path.from) == buildComplex(a));
        CHECK(buildComplex(path.to) == buildComplex(b));

        SimplicialComplex current = buildComplex(path.from);
        Rational previous = 0;
        for (const CrossingEvent& event : path.events) {
            CHECK(event.parameter > previous);
            previous = event.parameter;
            SimplicialComplex next = current;
            next.insertFaceWithClosure(event.subset);
            CHECK(isSimpleCrossing(current, next) == std::optional<unsigned>(event.subset));
            CHECK(next.isDownwardClosed());
            current = next;
        }
        CHECK(current == buildComplex(path.to));
    }
}

TEST_CASE("signature is constant between consecutive crossings") {
    WeightData a = weights("1,1,1", 2);
    WeightData b = weights("1/3,1/3,1/3", 2);
    CrossingPath path = crossingPath(a, b, 7);
    REQUIRE(path.events.size() == 4);

    SimplicialComplex current = buildComplex(path.from);
    Rational lastT = 0;
    for (std::size_t i = 0; i <= path.events.size(); ++i) {
        Rational nextT = i < path.events.size() ? path.events[i].parameter : Rational(1);
        Rational mid = (lastT + nextT) / 2;
        std::vector<Rational> point;
        for (int j = 0; j < a.size(); ++j)
            point.push_back((1 - mid) * path.from.weights[j] + mid * path.to.weights[j]);
        CHECK(buildComplex(makeWeightData(point, a.genus, a.betaDegree)) == current);
        if (i < path.events.size()) {
            current.insertFaceWithClosure(path.events[i].subset);
            lastT = path.events[i].parameter;
        }
    }
}

TEST_CASE("chamber enumeration at small n") {
    // n = 2: either the edge is present or not; both are realizable.
    CHECK(enumerateChamberComplexes(2, Decomposition::fine).size() == 2);

    std::vector<SimplicialComplex> fine3 = enumerateChamberComplexes(3, Decomposition::fine);
    // Complexes on three vertices: any edge set (8, all realizable), plus
    // the full triangle with its 2-face (the {12,13,23} graph with the
    // 2-face is realized only together with all edges).
    CHECK(fine3.size() == 9);
    for (const SimplicialComplex& c : fine3) {
        std::optional<WeightData> witness = realize(c);
        REQUIRE(witness);
        CHECK(buildComplex(*witness) == c);
    }

    std::vector<SimplicialComplex> coarse3 = enumerateChamberComplexes(3, Decomposition::coarse);
    CHECK(coarse3.size() == 2);  // with or without the 2-face

    CHECK_THROWS_AS(enumerateChamberComplexes(6, Decomposition::fine), CapacityError);
}

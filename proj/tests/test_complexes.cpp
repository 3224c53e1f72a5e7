#include "wsd/verify.hpp"

#include <doctest.h>

#include <functional>
#include <set>

using namespace wsd;

namespace {

SimplicialComplex fromWeights(const std::string& text, int genus = 0) {
    return buildComplex(makeWeightData(parseWeightList(text), genus, 0));
}

unsigned long long bell(int n) {
    // Bell triangle.
    std::vector<std::vector<unsigned long long>> rows{{1}};
    for (int i = 1; i <= n; ++i) {
        std::vector<unsigned long long> row{rows.back().back()};
        for (unsigned long long v : rows.back()) row.push_back(row.back() + v);
        rows.push_back(row);
    }
    return rows[n][0];
}

}  // namespace

TEST_CASE("complexes of the named weight data") {
    CHECK(formatComplex(fromWeights("1,1,1,1")) == "1,2,3,4");
    CHECK(fromWeights("1/3,1/3,1/3,1/3") == skeletonComplex(4, 2));
    CHECK(formatComplex(fromWeights("1,1,1/10,1/10,1/10")) == "1,2,345");
    CHECK(formatComplex(fromWeights("1,2/5,2/5,2/5")) == "1,23,24,34");
}

TEST_CASE("skeleton complexes") {
    CHECK(formatComplex(skeletonComplex(4, 0)) == "1,2,3,4");
    CHECK(formatComplex(skeletonComplex(4, 3)) == "1234");
    SimplicialComplex edges = skeletonComplex(5, 1);
    for (unsigned mask = 1; mask < (1u << 5); ++mask)
        CHECK(edges.isFace(mask) == (__builtin_popcount(mask) <= 2));
    CHECK_THROWS_AS(skeletonComplex(4, 4), std::invalid_argument);
}

TEST_CASE("cone construction") {
    SimplicialComplex twoPoints = skeletonComplex(2, 0);
    SimplicialComplex path = cone(twoPoints);
    CHECK(formatComplex(path) == "13,23");

    CHECK(formatComplex(cone(skeletonComplex(1, 0))) == "12");

    // Restricting the cone to the old vertices gives back the base, and the
    // link of the apex is the base as well.
    SimplicialComplex base = fromWeights("1,2/5,2/5,2/5");
    SimplicialComplex c = cone(base);
    const unsigned apex = 1u << 4;
    for (unsigned mask = 1; mask < apex; ++mask) {
        CHECK(c.isFace(mask) == base.isFace(mask));
        CHECK(c.isFace(mask | apex) == base.isFace(mask));
    }
    CHECK(c.isFace(apex));
}

TEST_CASE("contraction of a face") {
    // Losev-Manin-type complex: contracting the heavy simplex isolates it.
    SimplicialComplex lm = fromWeights("1,1,1/3,1/3,1/3");
    CHECK(formatComplex(lm) == "1,2,345");
    Contraction c = contract(lm, 0b11100);
    CHECK(formatComplex(c.complex) == "1,2,3");
    CHECK(c.newVertex == 2);
    CHECK(c.vertexMap == std::vector<int>{0, 1, 2, 2, 2});

    CHECK(formatComplex(contract(skeletonComplex(3, 2), 0b111).complex) == "1");

    // Contracting a singleton is the identity up to relabeling.
    SimplicialComplex any = fromWeights("1,2/5,2/5,2/5");
    CHECK(contract(any, 0b0010).complex == any);

    CHECK_THROWS_AS(contract(lm, 0b00011), std::invalid_argument);  // {1,2} not a face
}

TEST_CASE("contraction face count follows the two-case criterion") {
    Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + rng.below(4);
        WeightData w = randomPositiveWeights(rng, n, 2);
        SimplicialComplex c = buildComplex(w);
        std::vector<unsigned> faces = c.faces();
        unsigned sigma = faces[rng.below(static_cast<int>(faces.size()))];
        Contraction contraction = contract(c, sigma);
        CHECK(contraction.complex.isDownwardClosed());
        std::size_t disjoint = 0, containing = 0;
        for (unsigned gamma : faces) {
            if ((gamma & sigma) == 0) ++disjoint;
            else if ((gamma & sigma) == sigma) ++containing;
        }
        CHECK(contraction.complex.faces().size() == disjoint + containing);
    }
}

TEST_CASE("build complexes are downward closed with all vertices") {
    Rng rng(29);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 1 + rng.below(7);
        std::vector<Rational> ws;
        for (int i = 0; i < n; ++i) ws.emplace_back(rng.below(13), 12);
        SimplicialComplex c = buildComplex(makeWeightData(ws, 2, 0));
        CHECK(c.isDownwardClosed());
        CHECK(c.hasAllVertices());
    }
}

TEST_CASE("admissible partition enumeration") {
    CHECK(collectAdmissiblePartitions(skeletonComplex(5, 0)).size() == 1);
    CHECK(collectAdmissiblePartitions(skeletonComplex(3, 2)).size() == 5);

    std::vector<SetPartition> projective =
        collectAdmissiblePartitions(fromWeights("1,2/5,2/5,2/5"));
    REQUIRE(projective.size() == 4);
    // Canonical order: singletons first, then backtracking from the deepest
    // frame, block candidates in increasing bitmask order.
    CHECK(projective[0].blocks == std::vector<unsigned>{1, 2, 4, 8});
    CHECK(projective[1].blocks == std::vector<unsigned>{1, 2, 4 | 8});
    CHECK(projective[2].blocks == std::vector<unsigned>{1, 2 | 4, 8});
    CHECK(projective[3].blocks == std::vector<unsigned>{1, 2 | 8, 4});

    for (int n = 1; n <= 8; ++n)
        CHECK(collectAdmissiblePartitions(skeletonComplex(n, n - 1)).size() == bell(n));
}

TEST_CASE("partition enumeration is exhaustive and duplicate-free") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + rng.below(5);
        WeightData w = randomPositiveWeights(rng, n, 2);
        SimplicialComplex c = buildComplex(w);
        std::set<std::vector<unsigned>> seen;
        for (const SetPartition& p : AdmissiblePartitions(c)) {
            unsigned unionMask = 0;
            for (unsigned block : p.blocks) {
                CHECK(c.isFace(block));
                CHECK((unionMask & block) == 0);
                unionMask |= block;
            }
            CHECK(unionMask == (1u << n) - 1);
            CHECK(seen.insert(p.blocks).second);
            CHECK(partitionDimension(n, p) == n - p.blockCount());
        }
        // Cross-count against the all-partitions enumeration of the full
        // simplex filtered by face membership.
        std::size_t expected = 0;
        for (const SetPartition& p : AdmissiblePartitions(skeletonComplex(n, n - 1))) {
            bool ok = true;
            for (unsigned block : p.blocks)
                if (!c.isFace(block)) ok = false;
            if (ok) ++expected;
        }
        CHECK(seen.size() == expected);
    }
}

TEST_CASE("realizability by exact elimination") {
    CHECK_FALSE(realize(parseComplex("12,34")));

    std::optional<WeightData> discrete = realize(skeletonComplex(4, 0));
    REQUIRE(discrete);
    CHECK(buildComplex(*discrete) == skeletonComplex(4, 0));

    SimplicialComplex boundary = fromWeights("1,2/5,2/5,2/5");
    std::optional<WeightData> witness = realize(boundary);
    REQUIRE(witness);
    CHECK(buildComplex(*witness) == boundary);

    // Domain-constrained realizability: the 2-skeleton on 4 vertices has
    // weight sums at most 4/3, so it cannot meet sum > 2.
    RealizeOptions domain;
    domain.domainConstraint = true;
    domain.genus = 0;
    domain.betaDegree = 0;
    CHECK_FALSE(realize(skeletonComplex(4, 2), domain));
    CHECK(realize(skeletonComplex(4, 0), domain));
}

TEST_CASE("realizability agrees with an exhaustive grid on four vertices") {
    // Independent oracle: every complex hit by a denominator-12 weight grid
    // is realizable, so elimination may never call one infeasible, and every
    // elimination witness must rebuild its complex. On four vertices the
    // grid already reaches all realizable complexes (96 of 114 candidates).
    const int n = 4, den = 12;
    std::vector<unsigned> candidates;
    for (unsigned m = 1; m < (1u << n); ++m)
        if (__builtin_popcount(m) >= 2) candidates.push_back(m);
    std::sort(candidates.begin(), candidates.end(), [](unsigned a, unsigned b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    std::vector<SimplicialComplex> all;
    SimplicialComplex verts(n);
    for (int i = 0; i < n; ++i) verts.insertFaceWithClosure(1u << i);
    std::function<void(std::size_t, SimplicialComplex)> gen =
        [&](std::size_t index, SimplicialComplex current) {
            if (index == candidates.size()) {
                all.push_back(std::move(current));
                return;
            }
            gen(index + 1, current);
            unsigned m = candidates[index];
            for (unsigned rem = m; rem; rem &= rem - 1) {
                unsigned sub = m ^ (rem & (0u - rem));
                if (sub && !current.isFace(sub)) return;
            }
            current.insertFaceWithClosure(m);
            gen(index + 1, std::move(current));
        };
    gen(0, verts);
    CHECK(all.size() == 114);

    auto faceKey = [n](const SimplicialComplex& c) {
        std::vector<bool> key;
        for (unsigned m = 1; m < (1u << n); ++m) key.push_back(c.isFace(m));
        return key;
    };
    std::set<std::vector<bool>> grid;
    std::vector<int> idx(n, 1);
    while (true) {
        std::vector<Rational> w;
        for (int i = 0; i < n; ++i) w.emplace_back(idx[i], den);
        grid.insert(faceKey(buildComplex(makeWeightData(w, 2, 0))));
        int p = 0;
        while (p < n && idx[p] == den) idx[p++] = 1;
        if (p == n) break;
        ++idx[p];
    }

    int feasible = 0;
    for (const SimplicialComplex& c : all) {
        std::optional<WeightData> witness = realize(c);
        if (witness) {
            ++feasible;
            CHECK(buildComplex(*witness) == c);
            CHECK(grid.count(faceKey(c)) == 1);
        } else {
            CHECK(grid.count(faceKey(c)) == 0);
        }
    }
    CHECK(feasible == 96);
    CHECK(grid.size() == 96);
    CHECK(enumerateChamberComplexes(4, Decomposition::fine).size() == 96);
}

TEST_CASE("realize with zero weights allowed") {
    RealizeOptions options;
    options.positiveOnly = false;
    // Full simplex: the all-zero point realizes it once zeros are allowed.
    std::optional<WeightData> witness = realize(skeletonComplex(3, 2), options);
    REQUIRE(witness);
    CHECK(buildComplex(*witness) == skeletonComplex(3, 2));
}

TEST_CASE("complex parsing and formatting round trip") {
    CHECK(formatComplex(parseComplex("1,2,345")) == "1,2,345");
    CHECK(formatComplex(parseComplex("12,34")) == "12,34");
    SimplicialComplex big(12);
    for (int i = 0; i < 12; ++i) big.insertFaceWithClosure(1u << i);
    big.insertFaceWithClosure((1u << 2) | (1u << 10));
    std::string text = formatComplex(big);
    CHECK(text.find("[3,11]") != std::string::npos);
    CHECK(parseComplex(text) == big);
    CHECK_THROWS_AS(parseComplex(""), std::invalid_argument);
    CHECK_THROWS_AS(parseComplex("1,x"), std::invalid_argument);
}

TEST_CASE("vertex capacity is enforced") {
    CHECK_THROWS_AS(SimplicialComplex(17), CapacityError);
    CHECK_THROWS_AS(cone(skeletonComplex(16, 0)), CapacityError);
}

TEST_CASE("minimal non-face capacity is enforced") {
    // The 6-skeleton on 16 vertices has all C(16,8) = 12870 eight-element
    // subsets as minimal non-faces, past the configured limit.
    RealizeOptions options;
    options.maxMinimalNonFaces = 4096;
    CHECK_THROWS_AS(realize(skeletonComplex(16, 6), options), CapacityError);
}

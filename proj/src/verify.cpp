#include "wsd/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace wsd {

namespace {

std::string showKs(const std::vector<int>& ks) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ks.size(); ++i) os << (i ? "," : "") << ks[i];
    return os.str();
}

std::string showWeights(const WeightData& w) {
    std::ostringstream os;
    for (int i = 0; i < w.size(); ++i) os << (i ? "," : "") << toString(w.weights[i]);
    return os.str();
}

// Non-increasing exponent multisets of the given size and sum.
void forEachMultiset(int size, int total, int cap, std::vector<int>& current,
                     const std::function<void(const std::vector<int>&)>& visit) {
    if (size == 0) {
        if (total == 0) visit(current);
        return;
    }
    for (int v = std::min(cap, total); v >= 0; --v) {
        if (v * size < total) break;  // even repeating v everywhere falls short
        current.push_back(v);
        forEachMultiset(size - 1, total - v, v, current, visit);
        current.pop_back();
    }
}

}  // namespace

WeightData randomPositiveWeights(Rng& rng, int n, int genus, int maxDenominator) {
    for (int attempt = 0; attempt < 4096; ++attempt) {
        const int den = 2 + rng.below(maxDenominator - 1);
        std::vector<Rational> weights;
        weights.reserve(n);
        for (int i = 0; i < n; ++i) weights.emplace_back(1 + rng.below(den), den);
        WeightData w = makeWeightData(std::move(weights), genus, 0);
        if (inDomain(w)) return w;
    }
    throw std::runtime_error("failed to sample weights in the domain");
}

std::pair<WeightData, WeightData> randomDominatingPair(Rng& rng, int n, int genus) {
    for (int attempt = 0; attempt < 4096; ++attempt) {
        WeightData a = randomPositiveWeights(rng, n, genus);
        WeightData b = a;
        for (int i = 0; i < n; ++i) {
            const BigInt num = numerator(a.weights[i]);
            const BigInt den = denominator(a.weights[i]);
            const int bound = static_cast<int>(num);
            b.weights[i] = Rational(1 + rng.below(bound), den);
        }
        if (inDomain(b)) return {a, b};
    }
    throw std::runtime_error("failed to sample a dominating pair in the domain");
}

std::vector<int> randomGatedKs(Rng& rng, int n, int total) {
    std::vector<int> ks(n, 0);
    for (int i = 0; i < total; ++i) ++ks[rng.below(n)];
    return ks;
}

SuiteReport suiteOracle(int maxLevel, int genus0MaxN) {
    SuiteReport report;
    report.suite = "oracle";

    if (wkPoint(0, {0, 0, 0}) != 1) report.fail("<tau_0^3>_0 != 1");
    if (wkPoint(1, {1}) != Rational(1, 24)) report.fail("<tau_1>_1 != 1/24");
    report.checks += 2;

    // Both recursion schemes on every key with 3g-3+n <= maxLevel.
    int agreed = 0;
    for (int g = 0; 3 * g - 3 + 1 <= maxLevel; ++g) {
        for (int n = 1; 3 * g - 3 + n <= maxLevel; ++n) {
            const int d = 3 * g - 3 + n;
            if (d < 0) continue;
            std::vector<int> current;
            forEachMultiset(n, d, d, current, [&](const std::vector<int>& ks) {
                const Rational a = wkPoint(g, ks);
                const Rational b = wkPointKdv(g, ks);
                ++report.checks;
                ++agreed;
                if (a != b)
                    report.fail("scheme disagreement at g=" + std::to_string(g) +
                                " ks=" + showKs(ks) + ": " + toString(a) + " vs " + toString(b));
            });
        }
    }
    report.lines.push_back("dual-recursion agreement on " + std::to_string(agreed) + " keys");

    // Genus-0 closed form.
    for (int n = 3; n <= genus0MaxN; ++n) {
        std::vector<int> current;
        forEachMultiset(n, n - 3, n - 3, current, [&](const std::vector<int>& ks) {
            ++report.checks;
            if (wkPoint(0, ks) != genus0Point(ks))
                report.fail("genus-0 closed form mismatch at ks=" + showKs(ks));
        });
    }
    if (wkPoint(0, {1, 0, 0}) != 0 || wkPoint(2, {1, 1}) != 0)
        report.fail("gated-out key returned nonzero");

    // String, dilaton, gate and symmetry on every memoized key.
    Rng rng(7);
    int lawChecks = 0;
    for (const auto& [g, ks] : wkMemoKeys()) {
        const int n = static_cast<int>(ks.size());
        long long sum = 0;
        for (int k : ks) sum += k;
        if (sum != 3ll * g - 3 + n) report.fail("memo holds a gated-out key");

        std::vector<int> withZero = ks;
        withZero.push_back(0);
        Rational stringLhs = wkPoint(g, withZero);
        Rational stringRhs = 0;
        for (int j = 0; j < n; ++j) {
            std::vector<int> reduced = ks;
            reduced[j] -= 1;
            stringRhs += wkPoint(g, reduced);
        }
        if (stringLhs != stringRhs) report.fail("string equation fails at g=" +
                                                std::to_string(g) + " ks=" + showKs(ks));

        std::vector<int> withOne = ks;
        withOne.push_back(1);
        if (wkPoint(g, withOne) != Rational(2 * g - 2 + n) * wkPoint(g, ks))
            report.fail("dilaton equation fails at g=" + std::to_string(g) + " ks=" + showKs(ks));

        std::vector<int> shuffled = ks;
        for (int i = n - 1; i > 0; --i) std::swap(shuffled[i], shuffled[rng.below(i + 1)]);
        if (wkPoint(g, shuffled) != wkPoint(g, ks)) report.fail("symmetry violated");
        lawChecks += 3;
    }
    report.checks += lawChecks;
    report.lines.push_back("string/dilaton/symmetry laws on " +
                           std::to_string(lawChecks / 3) + " memo entries");
    return report;
}

SuiteReport suiteWallcross(int crossingCount, int pathCount, std::uint64_t seed, int maxN,
                           int maxGenus) {
    SuiteReport report;
    report.suite = "wallcross";
    Rng rng(seed);

    int verified = 0;
    while (verified < crossingCount) {
        const int n = 3 + rng.below(std::max(1, maxN - 2));
        const int g = rng.below(maxGenus + 1);
        auto [a, b] = randomDominatingPair(rng, n, g);
        CrossingPath path = crossingPath(a, b, rng.next());
        if (path.events.empty()) continue;

        SimplicialComplex current = buildComplex(path.from);
        for (const CrossingEvent& event : path.events) {
            SimplicialComplex after = current;
            after.insertFaceWithClosure(event.subset);
            if (isSimpleCrossing(current, after) != std::optional<unsigned>(event.subset)) {
                report.fail("path event is not a simple crossing at " + showWeights(a));
                return report;
            }
            std::vector<int> ks = randomGatedKs(rng, n, 3 * g - 3 + n);
            CheckReport check = verifyWallcross(g, ks, std::vector<int>(n, kUnitClassId),
                                                current, after, thePointTarget());
            ++report.checks;
            if (!check.pass) {
                report.fail("wall crossing identity fails: " + check.detail + " lhs=" +
                            toString(check.lhs) + " rhs=" + toString(check.rhs));
                return report;
            }
            current = after;
            if (++verified == crossingCount) break;
        }
        if (current != buildComplex(path.to) && verified < crossingCount) {
            report.fail("composed crossings missed the target complex at " + showWeights(b));
            return report;
        }
    }
    report.lines.push_back(std::to_string(verified) + " simple crossings verified");

    // Crossing-path composition: telescoped third terms against both the
    // direct difference and the partition double-sum of Sigma(A,B).
    for (int trial = 0; trial < pathCount; ++trial) {
        const int n = 3 + rng.below(std::max(1, std::min(maxN, 6) - 2));
        const int g = rng.below(maxGenus + 1);
        auto [a, b] = randomDominatingPair(rng, n, g);
        CrossingPath path = crossingPath(a, b, rng.next());
        std::vector<int> ks = randomGatedKs(rng, n, 3 * g - 3 + n);

        const SimplicialComplex complexA = buildComplex(path.from);
        const SimplicialComplex complexB = buildComplex(path.to);
        const Rational valueA = weightedDescendant(makePointQuery(g, complexA, ks));
        const Rational valueB = weightedDescendant(makePointQuery(g, complexB, ks));

        Rational telescoped = 0;
        SimplicialComplex current = complexA;
        for (const CrossingEvent& event : path.events) {
            current.insertFaceWithClosure(event.subset);
            telescoped += wallcrossThirdTerm(makePointQuery(g, current, ks), event.subset);
        }

        Rational direct = 0;  // sum over partitions admissible for B but not A
        for (const SetPartition& partition : AdmissiblePartitions(complexB)) {
            bool admissibleForA = true;
            for (unsigned block : partition.blocks)
                if (!complexA.isFace(block)) admissibleForA = false;
            if (admissibleForA) continue;
            std::vector<int> kSigma;
            bool negative = false;
            for (unsigned block : partition.blocks) {
                int sum = 1 - __builtin_popcount(block);
                for (unsigned rem = block; rem; rem &= rem - 1)
                    sum += ks[__builtin_ctz(rem)];
                kSigma.push_back(sum);
                if (sum < 0) negative = true;
            }
            if (negative) continue;
            const int dim = partitionDimension(n, partition);
            direct += Rational(dim % 2 == 0 ? 1 : -1) * wkPoint(g, kSigma);
        }

        report.checks += 2;
        if (valueA - valueB != telescoped) {
            report.fail("telescoped third terms disagree with the direct difference at a=" +
                        showWeights(a) + " b=" + showWeights(b) + " ks=" + showKs(ks));
            return report;
        }
        if (valueB - valueA != direct) {
            report.fail("Sigma(A,B) double-sum disagrees at a=" + showWeights(a) +
                        " b=" + showWeights(b) + " ks=" + showKs(ks));
            return report;
        }
    }
    report.lines.push_back(std::to_string(pathCount) + " crossing paths composed");
    return report;
}

SuiteReport suiteGenpolyWallcross(int count, std::uint64_t seed, int maxN) {
    SuiteReport report;
    report.suite = "genpoly";
    Rng rng(seed);

    int verified = 0;
    while (verified < count) {
        const int n = 3 + rng.below(std::max(1, maxN - 2));
        auto [a, b] = randomDominatingPair(rng, n, 0);
        CrossingPath path = crossingPath(a, b, rng.next());
        if (path.events.empty()) continue;

        SimplicialComplex current = buildComplex(path.from);
        for (const CrossingEvent& event : path.events) {
            SimplicialComplex after = current;
            after.insertFaceWithClosure(event.subset);
            PolyCheckReport check = verifyGenpolyWallcross(
                0, current, after, thePointTarget(), std::vector<int>(n, kUnitClassId));
            ++report.checks;
            if (!check.pass) {
                report.fail("generating-polynomial identity fails: " + check.detail +
                            " lhs=" + check.lhs.toString() + " rhs=" + check.rhs.toString());
                return report;
            }
            current = after;
            if (++verified == count) break;
        }
    }
    report.lines.push_back(std::to_string(verified) + " polynomial crossings verified");
    return report;
}

namespace {

void runConeChecks(SuiteReport& report, bool dilaton, int maxGenus, int maxN) {
    for (int g = 0; g <= maxGenus; ++g) {
        for (int n = 2; n <= std::min(maxN, 4); ++n) {
            for (int r = 0; r <= n - 1; ++r) {
                // The cone complex is the universal family over the base, so
                // the base weights must be admissible. The r-skeleton's
                // maximal realizable weight sum is n/(r+1), attained at the
                // symmetric point, which settles the (0,0) domain test.
                if (!symmetricWeightsInDomain(g, 0, n, r)) continue;
                const int apexK = dilaton ? 1 : 0;
                const int total = 3 * g - 3 + (n + 1) - apexK;
                if (total < 0) continue;
                const SimplicialComplex base = skeletonComplex(n, r);
                const SimplicialComplex coneComplex = cone(base);
                for (const std::vector<int>& ks : gatedExponents(n, total)) {
                    std::vector<int> fullKs = ks;
                    fullKs.push_back(apexK);
                    WeightedQuery q = makePointQuery(g, coneComplex, fullKs);
                    CheckReport check = dilaton ? verifyConeDilaton(q) : verifyConeString(q);
                    ++report.checks;
                    if (!check.pass) {
                        report.fail(std::string(dilaton ? "cone dilaton" : "cone string") +
                                    " fails: g=" + std::to_string(g) + " " + check.detail +
                                    " ks=" + showKs(ks) + " lhs=" + toString(check.lhs) +
                                    " rhs=" + toString(check.rhs));
                        return;
                    }
                }
            }
        }
    }
}

void runSymmetricChecks(SuiteReport& report, bool dilaton, int maxGenus, int maxN) {
    for (int g = 0; g <= maxGenus; ++g) {
        for (int n = 1; n <= maxN; ++n) {
            for (int r = 0; r <= n - 1; ++r) {
                if (!symmetricWeightsInDomain(g, 0, n + 1, r) ||
                    !symmetricWeightsInDomain(g, 0, n, r))
                    continue;
                const int apexK = dilaton ? 1 : 0;
                const int total = 3 * g - 3 + (n + 1) - apexK;
                if (total < 0) continue;
                for (const std::vector<int>& ks : gatedExponents(n, total)) {
                    CheckReport check = dilaton ? verifySymmetricDilaton(g, r, n, ks)
                                                : verifySymmetricString(g, r, n, ks);
                    ++report.checks;
                    if (!check.pass) {
                        report.fail(check.detail + " fails: lhs=" + toString(check.lhs) +
                                    " rhs=" + toString(check.rhs));
                        return;
                    }
                    // At r = 0 the correction complexes are discrete and the
                    // identity must collapse to the plain unweighted law.
                    if (!dilaton && r == 0) {
                        Rational unweighted = 0;
                        for (int j = 0; j < n; ++j) {
                            std::vector<int> reduced = ks;
                            reduced[j] -= 1;
                            unweighted += wkPoint(g, reduced);
                        }
                        ++report.checks;
                        if (check.lhs != unweighted) {
                            report.fail("r=0 string case differs from the unweighted string "
                                        "equation at g=" +
                                        std::to_string(g) + " ks=" + showKs(ks));
                            return;
                        }
                    }
                }
            }
        }
    }
}

}  // namespace

SuiteReport suiteDilaton(int maxGenus, int maxN) {
    SuiteReport report;
    report.suite = "dilaton";
    runConeChecks(report, true, maxGenus, std::min(maxN, 4));
    if (report.pass) runSymmetricChecks(report, true, maxGenus, maxN);
    report.lines.push_back(std::to_string(report.checks) + " dilaton identities checked");
    return report;
}

SuiteReport suiteString(int maxGenus, int maxN) {
    SuiteReport report;
    report.suite = "string";
    runConeChecks(report, false, maxGenus, std::min(maxN, 4));
    if (report.pass) runSymmetricChecks(report, false, maxGenus, maxN);
    report.lines.push_back(std::to_string(report.checks) + " string identities checked");
    return report;
}

std::string builtinDivisorTargetDocument() {
    return "# degree-one formal target with a divisor class\n"
           "[target]\n"
           "kind=formal\n"
           "dim=1\n"
           "pairing=2\n"
           "beta=1\n"
           "[classes]\n"
           "1 unit 0\n"
           "2 H 1 1\n"
           "[products]\n"
           "2*2 = 0\n"
           "[descendants]\n"
           "g=0 ; (0,2) (0,2) ; 1\n"
           "g=0 ; (0,2) (0,2) (0,2) ; 1\n"
           "g=0 ; (0,2) (0,2) (0,2) (0,2) ; 1\n"
           "g=0 ; (0,2) (0,2) (0,2) (0,2) (0,2) ; 1\n"
           "g=0 ; (0,2) (0,2) (0,2) (0,2) (0,2) (0,2) ; 1\n";
}

std::string builtinTruncationTargetDocument() {
    return "# two-class truncation ring with a three-entry table\n"
           "[target]\n"
           "kind=formal\n"
           "dim=1\n"
           "pairing=0\n"
           "beta=1\n"
           "[classes]\n"
           "1 unit 0\n"
           "2 H 1\n"
           "[products]\n"
           "2*2 = 0\n"
           "[descendants]\n"
           "g=0 ; (0,2) (0,1) (0,1) ; 2/5\n"
           "g=0 ; (0,2) (0,2) (0,1) (0,1) ; 7/3\n"
           "g=0 ; (0,2) (0,2) (0,2) (0,1) (0,1) ; -1/2\n";
}

TargetModel builtinDivisorTarget() {
    std::istringstream in(builtinDivisorTargetDocument());
    return loadTarget(in);
}

TargetModel builtinTruncationTarget() {
    std::istringstream in(builtinTruncationTargetDocument());
    return loadTarget(in);
}

SuiteReport suiteDivisor(const TargetModel& target, int divisorClassId) {
    SuiteReport report;
    report.suite = "divisor";
    const ClassInfo* divisor = target.findClass(divisorClassId);
    if (!divisor || divisor->degree != 1 || !divisor->betaIntegral) {
        report.fail("target has no degree-1 class with a beta integral");
        return report;
    }

    // Cone divisor equation over several bases with every insertion carrying
    // the divisor class (the truncated square kills every merged block, so
    // the table only needs the diagonal entries).
    std::vector<SimplicialComplex> bases;
    bases.push_back(skeletonComplex(3, 0));
    bases.push_back(skeletonComplex(3, 1));
    bases.push_back(buildComplex(makeWeightData(
        {Rational(1), Rational(2, 5), Rational(2, 5), Rational(2, 5)}, 0, target.betaDegree)));
    for (const SimplicialComplex& base : bases) {
        const int n = base.vertexCount();
        WeightedQuery q{0, cone(base), std::vector<int>(n + 1, 0),
                        std::vector<int>(n + 1, divisorClassId), &target};
        CheckReport check = verifyConeDivisor(q);
        ++report.checks;
        if (!check.pass)
            report.fail("cone divisor fails over " + formatComplex(base) + ": lhs=" +
                        toString(check.lhs) + " rhs=" + toString(check.rhs));
    }

    // Symmetric divisor equation (all insertions the divisor class).
    for (int n = 3; n <= 4; ++n) {
        for (int r = 1; r <= n - 1; ++r) {
            if (!symmetricWeightsInDomain(0, target.betaDegree, n + 1, r) ||
                !symmetricWeightsInDomain(0, target.betaDegree, n, r))
                continue;
            CheckReport check = verifySymmetricDivisor(
                0, r, n, std::vector<int>(n, 0), target,
                std::vector<int>(n, divisorClassId), divisorClassId);
            ++report.checks;
            if (!check.pass)
                report.fail(check.detail + " fails: lhs=" + toString(check.lhs) +
                            " rhs=" + toString(check.rhs));
        }
    }
    report.lines.push_back(std::to_string(report.checks) + " divisor identities checked");
    return report;
}

SuiteReport suiteDivisor() {
    static const TargetModel model = builtinDivisorTarget();
    return suiteDivisor(model, 2);
}

SuiteReport suiteRealize(int count, std::uint64_t seed, int maxN) {
    SuiteReport report;
    report.suite = "realize";

    SimplicialComplex disjointEdges = parseComplex("12,34");
    ++report.checks;
    if (realize(disjointEdges))
        report.fail("the {12,34} complex must be infeasible");

    Rng rng(seed);
    for (int trial = 0; trial < count; ++trial) {
        const int n = 2 + rng.below(std::max(1, maxN - 1));
        WeightData w = randomPositiveWeights(rng, n, 2);
        SimplicialComplex c = buildComplex(w);
        std::optional<WeightData> witness = realize(c);
        ++report.checks;
        if (!witness) {
            report.fail("realize found no witness for " + formatComplex(c) + " from weights " +
                        showWeights(w));
            return report;
        }
        if (buildComplex(*witness) != c) {
            report.fail("witness " + showWeights(*witness) + " rebuilds a different complex");
            return report;
        }
    }
    report.lines.push_back(std::to_string(count) + " round trips verified");
    return report;
}

SuiteReport suiteGwInvariance(const TargetModel& target) {
    SuiteReport report;
    report.suite = "gwinvariance";

    const std::vector<std::string> families = {
        "1,2,3,4", "12,3,4", "13,2,4", "14,2,3", "23,1,4",
        "24,1,3",  "34,1,2", "12,13,4", "12,13,23,4", "123,4"};
    const std::vector<int> classIds = {2, 2, 1, 1};

    std::optional<Rational> common;
    for (const std::string& family : families) {
        SimplicialComplex c = parseComplex(family);
        Rational value = weightedDescendant(
            WeightedQuery{0, c, std::vector<int>(4, 0), classIds, &target});
        ++report.checks;
        if (!common) {
            common = value;
            report.lines.push_back("all-k-zero value " + toString(value));
        } else if (*common != value) {
            report.fail("all-k-zero value changed on complex " + family + ": " +
                        toString(value) + " vs " + toString(*common));
        }
    }
    return report;
}

SuiteReport suiteGwInvariance() {
    static const TargetModel model = builtinTruncationTarget();
    return suiteGwInvariance(model);
}

}  // namespace wsd

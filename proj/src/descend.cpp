#include "wsd/descend.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace wsd {

const TargetModel& thePointTarget() {
    static const TargetModel model = pointTarget();
    return model;
}

WeightedQuery makePointQuery(int genus, SimplicialComplex complex, std::vector<int> ks) {
    const int n = complex.vertexCount();
    if (static_cast<int>(ks.size()) != n)
        throw std::invalid_argument("insertion count must match vertex count");
    return WeightedQuery{genus, std::move(complex), std::move(ks),
                         std::vector<int>(n, kUnitClassId), &thePointTarget()};
}

namespace {

void validateQuery(const WeightedQuery& q) {
    const int n = q.complex.vertexCount();
    if (static_cast<int>(q.ks.size()) != n || static_cast<int>(q.classIds.size()) != n)
        throw std::invalid_argument("query insertions must match the vertex count");
    if (!q.target) throw std::invalid_argument("query carries no target model");
    if (!q.complex.hasAllVertices())
        throw std::invalid_argument("query complex must contain every singleton");
    for (int id : q.classIds)
        if (!q.target->findClass(id))
            throw std::invalid_argument("unknown class id " + std::to_string(id));
}

bool allUnit(const std::vector<int>& ids) {
    return std::all_of(ids.begin(), ids.end(), [](int id) { return id == kUnitClassId; });
}

// Oracle value of one partition: product over blocks of the block classes,
// expanded multilinearly, each complete choice looked up as one unweighted
// descendant key.
Rational partitionOracleValue(const WeightedQuery& q, const SetPartition& partition,
                              const std::vector<int>& kSigma) {
    const int blocks = partition.blockCount();
    if (allUnit(q.classIds)) {
        std::vector<std::pair<int, int>> insertions;
        insertions.reserve(blocks);
        for (int b = 0; b < blocks; ++b) insertions.emplace_back(kSigma[b], kUnitClassId);
        return unweightedLookup(*q.target, makeKey(q.genus, std::move(insertions)));
    }

    std::vector<ClassCombo> combos(blocks);
    for (int b = 0; b < blocks; ++b) {
        std::vector<int> ids;
        for (unsigned rem = partition.blocks[b]; rem; rem &= rem - 1)
            ids.push_back(q.classIds[__builtin_ctz(rem)]);
        combos[b] = ringProduct(*q.target, ids);
        if (combos[b].empty()) return 0;  // the class product vanished in the ring
    }

    Rational total = 0;
    std::vector<std::size_t> choice(blocks, 0);
    while (true) {
        Rational coef = 1;
        std::vector<std::pair<int, int>> insertions;
        insertions.reserve(blocks);
        for (int b = 0; b < blocks; ++b) {
            coef *= combos[b][choice[b]].first;
            insertions.emplace_back(kSigma[b], combos[b][choice[b]].second);
        }
        total += coef * unweightedLookup(*q.target, makeKey(q.genus, std::move(insertions)));
        int b = 0;
        while (b < blocks && ++choice[b] == combos[b].size()) choice[b++] = 0;
        if (b == blocks) break;
    }
    return total;
}

}  // namespace

bool dimensionGate(const WeightedQuery& q) {
    validateQuery(q);
    const int n = q.complex.vertexCount();
    long long total = 0;
    for (int i = 0; i < n; ++i) {
        if (q.ks[i] < 0) throw std::invalid_argument("negative insertion exponent");
        total += q.ks[i] + q.target->classDegree(q.classIds[i]);
    }
    const long long required = static_cast<long long>(1 - q.genus) * q.target->dimension +
                               q.target->pairing + (3ll * q.genus - 3 + n);
    return total == required;
}

Rational weightedDescendant(const WeightedQuery& q, std::vector<PartitionTerm>* trace) {
    if (!dimensionGate(q)) {
        if (trace) trace->clear();
        return 0;
    }
    const int n = q.complex.vertexCount();
    Rational total = 0;
    for (const SetPartition& partition : AdmissiblePartitions(q.complex)) {
        const int dim = partitionDimension(n, partition);
        const int sign = dim % 2 == 0 ? 1 : -1;
        std::vector<int> kSigma(partition.blockCount());
        bool negative = false;
        for (int b = 0; b < partition.blockCount(); ++b) {
            int sum = 0;
            unsigned mask = partition.blocks[b];
            for (unsigned rem = mask; rem; rem &= rem - 1) sum += q.ks[__builtin_ctz(rem)];
            kSigma[b] = sum - (__builtin_popcount(mask) - 1);
            if (kSigma[b] < 0) negative = true;
        }
        Rational value = negative ? Rational(0) : partitionOracleValue(q, partition, kSigma);
        Rational term = sign * value;
        total += term;
        if (trace) trace->push_back(PartitionTerm{partition, sign, kSigma, value, term});
    }
    return total;
}

Rational wallcrossThirdTerm(const WeightedQuery& q, unsigned sigmaMask) {
    validateQuery(q);
    if (!q.complex.isFace(sigmaMask))
        throw std::invalid_argument("wall crossing simplex is not a face of the complex");

    const int dimSigma = __builtin_popcount(sigmaMask) - 1;
    int kSigma = -dimSigma;
    std::vector<int> sigmaClasses;
    for (unsigned rem = sigmaMask; rem; rem &= rem - 1) {
        int i = __builtin_ctz(rem);
        kSigma += q.ks[i];
        sigmaClasses.push_back(q.classIds[i]);
    }
    if (kSigma < 0) return 0;

    const Contraction contraction = contract(q.complex, sigmaMask);
    const int m = contraction.complex.vertexCount();
    std::vector<int> ks(m, 0), classIds(m, kUnitClassId);
    for (int i = 0; i < q.complex.vertexCount(); ++i) {
        if (sigmaMask & (1u << i)) continue;
        ks[contraction.vertexMap[i]] = q.ks[i];
        classIds[contraction.vertexMap[i]] = q.classIds[i];
    }
    ks[contraction.newVertex] = kSigma;

    const Rational sign = dimSigma % 2 == 0 ? -1 : 1;  // (-1)^{dim sigma + 1}
    Rational total = 0;
    for (const auto& [coef, classId] : ringProduct(*q.target, sigmaClasses)) {
        classIds[contraction.newVertex] = classId;
        total += coef * weightedDescendant(
                            WeightedQuery{q.genus, contraction.complex, ks, classIds, q.target});
    }
    return sign * total;
}

CheckReport verifyWallcross(int genus, const std::vector<int>& ks,
                            const std::vector<int>& classIds,
                            const SimplicialComplex& preComplex,
                            const SimplicialComplex& postComplex, const TargetModel& target) {
    std::optional<unsigned> sigma = isSimpleCrossing(preComplex, postComplex);
    if (!sigma) throw std::invalid_argument("not a simple wall crossing");

    WeightedQuery preQuery{genus, preComplex, ks, classIds, &target};
    WeightedQuery postQuery{genus, postComplex, ks, classIds, &target};
    CheckReport report;
    report.lhs = weightedDescendant(preQuery);
    report.rhs = weightedDescendant(postQuery) + wallcrossThirdTerm(postQuery, *sigma);
    report.pass = report.lhs == report.rhs;
    std::ostringstream os;
    os << "crossing sigma=" << formatSubset(*sigma, preComplex.vertexCount()) << " genus="
       << genus << " pre=" << formatComplex(preComplex) << " ks=";
    for (std::size_t i = 0; i < ks.size(); ++i) os << (i ? "," : "") << ks[i];
    report.detail = os.str();
    return report;
}

std::vector<std::vector<int>> gatedExponents(int n, int total) {
    std::vector<std::vector<int>> out;
    if (total < 0) return out;
    std::vector<int> current(n, 0);
    std::function<void(int, int)> rec = [&](int index, int remaining) {
        if (index == n - 1) {
            current[index] = remaining;
            out.push_back(current);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            current[index] = v;
            rec(index + 1, remaining - v);
        }
    };
    if (n == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    rec(0, total);
    return out;
}

MultiPoly generatingPolynomial(int genus, const SimplicialComplex& complex,
                               const TargetModel& target, const std::vector<int>& classIds,
                               bool exponential) {
    const int n = complex.vertexCount();
    if (static_cast<int>(classIds.size()) != n)
        throw std::invalid_argument("class list must match the vertex count");
    long long degreeSum = 0;
    for (int id : classIds) degreeSum += target.classDegree(id);
    const long long gateTotal = static_cast<long long>(1 - genus) * target.dimension +
                                target.pairing + (3ll * genus - 3 + n) - degreeSum;

    MultiPoly poly(n);
    if (gateTotal < 0) return poly;
    for (const std::vector<int>& ks : gatedExponents(n, static_cast<int>(gateTotal))) {
        Rational value =
            weightedDescendant(WeightedQuery{genus, complex, ks, classIds, &target});
        if (value == 0) continue;
        if (exponential)
            for (int k : ks) value /= Rational(factorial(unsigned(k)));
        poly.addTerm(Exponents(ks.begin(), ks.end()), value);
    }
    return poly;
}

PolyCheckReport verifyGenpolyWallcross(int genus, const SimplicialComplex& preComplex,
                                       const SimplicialComplex& postComplex,
                                       const TargetModel& target,
                                       const std::vector<int>& classIds) {
    std::optional<unsigned> sigma = isSimpleCrossing(preComplex, postComplex);
    if (!sigma) throw std::invalid_argument("not a simple wall crossing");
    const int n = preComplex.vertexCount();
    const int dimSigma = __builtin_popcount(*sigma) - 1;

    MultiPoly ePre = generatingPolynomial(genus, preComplex, target, classIds, true);
    MultiPoly ePost = generatingPolynomial(genus, postComplex, target, classIds, true);

    // E_{A_J} lives on the contracted vertex set; lift it into n+1 variables
    // with the merged vertex as the extra slot t_sigma, integrate dim(sigma)
    // times in t_sigma, then substitute t_sigma = sum over sigma.
    const Contraction contraction = contract(postComplex, *sigma);
    const int m = contraction.complex.vertexCount();
    std::vector<int> slotOf(m, -1);
    for (int i = 0; i < n; ++i)
        if (!(*sigma & (1u << i))) slotOf[contraction.vertexMap[i]] = i;
    slotOf[contraction.newVertex] = n;

    std::vector<int> contractedClasses(m, kUnitClassId);
    for (int i = 0; i < n; ++i)
        if (!(*sigma & (1u << i))) contractedClasses[contraction.vertexMap[i]] = classIds[i];
    std::vector<int> sigmaClasses;
    for (unsigned rem = *sigma; rem; rem &= rem - 1)
        sigmaClasses.push_back(classIds[__builtin_ctz(rem)]);

    MultiPoly eContracted(m);
    for (const auto& [coef, classId] : ringProduct(target, sigmaClasses)) {
        contractedClasses[contraction.newVertex] = classId;
        eContracted = eContracted +
                      generatingPolynomial(genus, contraction.complex, target,
                                           contractedClasses, true)
                          .scaled(coef);
    }

    std::set<int> sigmaVertices;
    for (unsigned rem = *sigma; rem; rem &= rem - 1) sigmaVertices.insert(__builtin_ctz(rem));

    MultiPoly lifted = eContracted.withVariables(n + 1, slotOf);
    MultiPoly integrated = lifted.homogeneousAntiderivative(n, dimSigma);
    MultiPoly substituted = integrated.substituteSum(n, sigmaVertices);
    const Rational sign = dimSigma % 2 == 0 ? -1 : 1;

    std::vector<int> identity(n);
    std::iota(identity.begin(), identity.end(), 0);

    PolyCheckReport report;
    report.lhs = ePre.withVariables(n + 1, identity) - ePost.withVariables(n + 1, identity);
    report.rhs = substituted.scaled(sign);
    report.pass = report.lhs == report.rhs;
    report.detail = "crossing sigma=" + formatSubset(*sigma, n) +
                    " pre=" + formatComplex(preComplex);
    return report;
}

Rational kappaNumber(int genus, const std::vector<int>& ks) {
    const int n = static_cast<int>(ks.size());
    if (n < 1) throw std::invalid_argument("kappaNumber needs at least one insertion");
    if (genus < 1)
        throw std::invalid_argument(
            "kappaNumber: the (epsilon^n) weight data is outside D_{0,n,0}");
    return weightedDescendant(makePointQuery(genus, skeletonComplex(n, n - 1), ks));
}

namespace {

void forEachPartition(int n, std::vector<std::vector<int>>& blocks,
                      const std::function<void(const std::vector<std::vector<int>>&)>& visit,
                      int element) {
    if (element == n) {
        visit(blocks);
        return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        blocks[b].push_back(element);
        forEachPartition(n, blocks, visit, element + 1);
        blocks[b].pop_back();
    }
    blocks.push_back({element});
    forEachPartition(n, blocks, visit, element + 1);
    blocks.pop_back();
}

}  // namespace

Rational kappaNumberByAllPartitions(int genus, const std::vector<int>& ks) {
    const int n = static_cast<int>(ks.size());
    if (n < 1) throw std::invalid_argument("kappaNumber needs at least one insertion");
    if (genus < 1)
        throw std::invalid_argument(
            "kappaNumber: the (epsilon^n) weight data is outside D_{0,n,0}");
    Rational total = 0;
    std::vector<std::vector<int>> blocks;
    forEachPartition(
        n, blocks,
        [&](const std::vector<std::vector<int>>& partition) {
            const int dim = n - static_cast<int>(partition.size());
            std::vector<int> kSigma;
            for (const std::vector<int>& block : partition) {
                int sum = 1 - static_cast<int>(block.size());
                for (int i : block) sum += ks[i];
                kSigma.push_back(sum);
            }
            total += Rational(dim % 2 == 0 ? 1 : -1) * wkPoint(genus, kSigma);
        },
        0);
    return total;
}

namespace {

// Splits a cone query into the apex insertion and the base query; throws
// unless the complex really is the cone over its first n vertices.
struct ConeSplit {
    WeightedQuery base;
    int apexK;
    int apexClass;
};

ConeSplit splitCone(const WeightedQuery& q) {
    validateQuery(q);
    const int total = q.complex.vertexCount();
    if (total < 2) throw std::invalid_argument("cone query needs at least two vertices");
    const int n = total - 1;
    SimplicialComplex base(n);
    for (unsigned mask = 1; mask < (1u << n); ++mask)
        if (q.complex.isFace(mask)) base.insertFaceWithClosure(mask);
    if (cone(base) != q.complex)
        throw std::invalid_argument("complex is not a cone over its first vertices");
    WeightedQuery baseQuery{q.genus, base,
                            std::vector<int>(q.ks.begin(), q.ks.end() - 1),
                            std::vector<int>(q.classIds.begin(), q.classIds.end() - 1),
                            q.target};
    return ConeSplit{std::move(baseQuery), q.ks.back(), q.classIds.back()};
}

}  // namespace

CheckReport verifyConeDilaton(const WeightedQuery& q) {
    ConeSplit split = splitCone(q);
    if (split.apexK != 1 || split.apexClass != kUnitClassId)
        throw std::invalid_argument("dilaton query must end with tau_1 of the unit class");
    CheckReport report;
    report.lhs = weightedDescendant(q);
    report.rhs = Rational(2 * q.genus - 2) * weightedDescendant(split.base);
    report.pass = report.lhs == report.rhs;
    report.detail = "cone dilaton over " + formatComplex(split.base.complex);
    return report;
}

CheckReport verifyConeString(const WeightedQuery& q) {
    ConeSplit split = splitCone(q);
    if (split.apexK != 0 || split.apexClass != kUnitClassId)
        throw std::invalid_argument("string query must end with tau_0 of the unit class");
    CheckReport report;
    report.lhs = weightedDescendant(q);
    report.rhs = 0;
    report.pass = report.lhs == 0;
    report.detail = "cone string over " + formatComplex(split.base.complex);
    return report;
}

CheckReport verifyConeDivisor(const WeightedQuery& q) {
    ConeSplit split = splitCone(q);
    if (split.apexK != 0)
        throw std::invalid_argument("divisor query must end with tau_0(D)");
    const ClassInfo* divisor = q.target->findClass(split.apexClass);
    if (!divisor || divisor->degree != 1)
        throw std::invalid_argument("divisor insertion must carry a degree-1 class");
    if (!divisor->betaIntegral)
        throw std::invalid_argument("divisor class has no beta integral in the target model");
    CheckReport report;
    report.lhs = weightedDescendant(q);
    report.rhs = *divisor->betaIntegral * weightedDescendant(split.base);
    report.pass = report.lhs == report.rhs;
    report.detail = "cone divisor over " + formatComplex(split.base.complex);
    return report;
}

bool symmetricWeightsInDomain(int genus, int betaDegree, int count, int r) {
    std::vector<Rational> weights(count, Rational(1, r + 1));
    return inDomain(WeightData{std::move(weights), genus, betaDegree});
}

namespace {

CheckReport verifySymmetricCommon(int genus, int r, int n, const std::vector<int>& ks,
                                  const TargetModel& target, std::vector<int> classIds,
                                  int apexK, int apexClass, bool withMainTerm,
                                  const Rational& mainFactor, const char* label) {
    if (r < 0 || r > n - 1) throw std::invalid_argument("need 0 <= r <= n-1");
    if (static_cast<int>(ks.size()) != n || static_cast<int>(classIds.size()) != n)
        throw std::invalid_argument("expected one insertion per base vertex");
    if (!symmetricWeightsInDomain(genus, target.betaDegree, n + 1, r) ||
        !symmetricWeightsInDomain(genus, target.betaDegree, n, r))
        throw std::invalid_argument("symmetric weights outside the domain for this genus");

    const SimplicialComplex big = skeletonComplex(n + 1, r);
    const SimplicialComplex small = skeletonComplex(n, r);

    // F(A,A') = faces of Cone(Delta_{n,r}) absent from Delta_{n+1,r}; here
    // these are exactly the (r+1)-subsets of the base joined with the apex.
    const SimplicialComplex coneSmall = cone(small);
    std::vector<unsigned> corrections;
    for (unsigned mask : coneSmall.faces())
        if (!big.isFace(mask)) corrections.push_back(mask);
    for (unsigned a : corrections)
        for (unsigned b : corrections)
            if (a != b && (a & b) == a)
                throw std::logic_error("containment inside F(A,A'); hypothesis violated");

    std::vector<int> fullKs = ks;
    fullKs.push_back(apexK);
    std::vector<int> fullClasses = classIds;
    fullClasses.push_back(apexClass);
    WeightedQuery bigQuery{genus, big, fullKs, fullClasses, &target};

    CheckReport report;
    report.lhs = weightedDescendant(bigQuery);
    report.rhs = 0;
    if (withMainTerm)
        report.rhs += mainFactor *
                      weightedDescendant(WeightedQuery{genus, small, ks, classIds, &target});

    for (unsigned sigma : corrections) {
        const int dimSigma = __builtin_popcount(sigma) - 1;
        int kSigma = -dimSigma;
        std::vector<int> sigmaClasses;
        for (unsigned rem = sigma; rem; rem &= rem - 1) {
            int i = __builtin_ctz(rem);
            kSigma += fullKs[i];
            sigmaClasses.push_back(fullClasses[i]);
        }
        if (kSigma < 0) continue;

        const Contraction contraction = contractSubset(big, sigma);
        const int m = contraction.complex.vertexCount();
        std::vector<int> cKs(m, 0), cClasses(m, kUnitClassId);
        for (int i = 0; i < n + 1; ++i) {
            if (sigma & (1u << i)) continue;
            cKs[contraction.vertexMap[i]] = fullKs[i];
            cClasses[contraction.vertexMap[i]] = fullClasses[i];
        }
        cKs[contraction.newVertex] = kSigma;

        const Rational sign = dimSigma % 2 == 0 ? -1 : 1;
        for (const auto& [coef, classId] : ringProduct(target, sigmaClasses)) {
            cClasses[contraction.newVertex] = classId;
            report.rhs += sign * coef *
                          weightedDescendant(WeightedQuery{genus, contraction.complex, cKs,
                                                           cClasses, &target});
        }
    }

    report.pass = report.lhs == report.rhs;
    std::ostringstream os;
    os << label << " g=" << genus << " r=" << r << " n=" << n << " ks=";
    for (std::size_t i = 0; i < ks.size(); ++i) os << (i ? "," : "") << ks[i];
    report.detail = os.str();
    return report;
}

}  // namespace

CheckReport verifySymmetricDilaton(int genus, int r, int n, const std::vector<int>& ks,
                                   const TargetModel& target, const std::vector<int>& classIds) {
    return verifySymmetricCommon(genus, r, n, ks, target, classIds, 1, kUnitClassId, true,
                                 Rational(2 * genus - 2), "symmetric dilaton");
}

CheckReport verifySymmetricString(int genus, int r, int n, const std::vector<int>& ks,
                                  const TargetModel& target, const std::vector<int>& classIds) {
    return verifySymmetricCommon(genus, r, n, ks, target, classIds, 0, kUnitClassId, false,
                                 Rational(0), "symmetric string");
}

CheckReport verifySymmetricDivisor(int genus, int r, int n, const std::vector<int>& ks,
                                   const TargetModel& target, const std::vector<int>& classIds,
                                   int divisorClassId) {
    const ClassInfo* divisor = target.findClass(divisorClassId);
    if (!divisor || divisor->degree != 1)
        throw std::invalid_argument("divisor must be a degree-1 class of the target");
    if (!divisor->betaIntegral)
        throw std::invalid_argument("divisor class has no beta integral in the target model");
    return verifySymmetricCommon(genus, r, n, ks, target, classIds, 0, divisorClassId, true,
                                 *divisor->betaIntegral, "symmetric divisor");
}

CheckReport verifySymmetricDilaton(int genus, int r, int n, const std::vector<int>& ks) {
    return verifySymmetricDilaton(genus, r, n, ks, thePointTarget(),
                                  std::vector<int>(n, kUnitClassId));
}

CheckReport verifySymmetricString(int genus, int r, int n, const std::vector<int>& ks) {
    return verifySymmetricString(genus, r, n, ks, thePointTarget(),
                                 std::vector<int>(n, kUnitClassId));
}

}  // namespace wsd

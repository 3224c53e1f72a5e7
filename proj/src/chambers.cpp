#include "wsd/chambers.hpp"

#include <algorithm>
#include <set>

namespace wsd {

std::vector<unsigned> wallSubsets(int n, Decomposition d) {
    if (n < 0 || n > SimplicialComplex::kMaxVertices)
        throw CapacityError("wall arrangement capped at 16 indices");
    const int minSize = d == Decomposition::fine ? 2 : 3;
    std::vector<unsigned> walls;
    for (unsigned mask = 1; mask < (1u << n); ++mask)
        if (__builtin_popcount(mask) >= minSize) walls.push_back(mask);
    return walls;
}

ChamberSignature chamberSignature(const WeightData& w, Decomposition d) {
    const int n = w.size();
    const int minSize = d == Decomposition::fine ? 2 : 3;
    ChamberSignature sig;
    sig.n = n;
    sig.decomposition = d;
    std::vector<Rational> sum(std::size_t(1) << n, Rational(0));
    for (unsigned mask = 1; mask < sum.size(); ++mask) {
        sum[mask] = sum[mask & (mask - 1)] + w.weights[__builtin_ctz(mask)];
        if (__builtin_popcount(mask) >= minSize) sig.atMostOne[mask] = sum[mask] <= 1;
    }
    return sig;
}

bool sameFineChamber(const WeightData& a, const WeightData& b) {
    if (a.size() != b.size()) throw std::invalid_argument("weight data length mismatch");
    for (int i = 0; i < a.size(); ++i)
        if ((a.weights[i] == 0) != (b.weights[i] == 0)) return false;
    return chamberSignature(a, Decomposition::fine).atMostOne ==
           chamberSignature(b, Decomposition::fine).atMostOne;
}

namespace {

// Perturbs a dominating pair by one shared offset vector. Sharing keeps
// dominance and leaves every difference a_i - b_i unchanged, so crossing
// parameter denominators are untouched; the scale is valid for both
// endpoints, so neither leaves its fine chamber.
std::pair<WeightData, WeightData> perturbPair(const WeightData& a, const WeightData& b,
                                              std::uint64_t seed) {
    const Rational scale = std::min(perturbationBound(a), perturbationBound(b));
    WeightData pa = a, pb = b;
    for (int i = 0; i < a.size(); ++i) {
        std::uint64_t m = 1 + (mix64(seed * 0x100000001B3ull + std::uint64_t(i)) & 0xFFFFF);
        Rational delta = scale * Rational(BigInt(m), BigInt(1) << 21);
        pa.weights[i] -= delta;
        pb.weights[i] -= delta;
    }
    return {pa, pb};
}

}  // namespace

CrossingPath crossingPath(const WeightData& a, const WeightData& b, std::uint64_t seed) {
    if (!a.positive() || !b.positive())
        throw std::invalid_argument("crossingPath requires positive weights");
    if (!dominates(a, b))
        throw std::invalid_argument("crossingPath requires a dominating pair");
    if (!inDomain(a) || !inDomain(b))
        throw std::invalid_argument("crossingPath endpoints must lie in the domain");

    const int n = a.size();
    for (int attempt = 0;; ++attempt) {
        if (attempt >= 64)
            throw std::runtime_error("crossingPath: no generic perturbation found");
        auto [pa, pb] = perturbPair(a, b, seed + std::uint64_t(attempt));

        // Segment x(t) = (1-t) pa + t pb; subset sums are monotone
        // nonincreasing, so a wall is crossed iff the sum starts above 1 and
        // ends at most 1, at t = (sum_a - 1) / (sum_a - sum_b).
        std::vector<Rational> sumA(std::size_t(1) << n, Rational(0));
        std::vector<Rational> sumB(sumA.size(), Rational(0));
        std::vector<CrossingEvent> events;
        bool clash = false;
        std::set<Rational> seen;
        for (unsigned mask = 1; mask < sumA.size() && !clash; ++mask) {
            int bit = __builtin_ctz(mask);
            sumA[mask] = sumA[mask & (mask - 1)] + pa.weights[bit];
            sumB[mask] = sumB[mask & (mask - 1)] + pb.weights[bit];
            if (__builtin_popcount(mask) < 2) continue;
            if (sumA[mask] > 1 && sumB[mask] <= 1) {
                Rational t = (sumA[mask] - 1) / (sumA[mask] - sumB[mask]);
                if (!seen.insert(t).second) clash = true;
                events.push_back(CrossingEvent{mask, t, true});
            }
        }
        if (clash) continue;
        std::sort(events.begin(), events.end(),
                  [](const CrossingEvent& x, const CrossingEvent& y) {
                      return x.parameter < y.parameter;
                  });
        return CrossingPath{pa, pb, std::move(events)};
    }
}

std::optional<unsigned> isSimpleCrossing(const SimplicialComplex& before,
                                         const SimplicialComplex& after) {
    if (before.vertexCount() != after.vertexCount())
        throw std::invalid_argument("vertex count mismatch");
    unsigned added = 0;
    int count = 0;
    for (unsigned mask = 1; mask < (1u << after.vertexCount()); ++mask) {
        if (after.isFace(mask) && !before.isFace(mask)) {
            added = mask;
            if (++count > 1) return std::nullopt;
        } else if (before.isFace(mask) && !after.isFace(mask)) {
            return std::nullopt;
        }
    }
    if (count != 1) return std::nullopt;
    return after.isDownwardClosed() ? std::optional<unsigned>(added) : std::nullopt;
}

namespace {

void enumerateComplexes(int n, std::vector<unsigned>& undecided, std::size_t index,
                        SimplicialComplex& current, std::vector<SimplicialComplex>& out) {
    if (index == undecided.size()) {
        out.push_back(current);
        return;
    }
    unsigned mask = undecided[index];
    // Reject branch first: candidates are ordered by size, so supersets are
    // decided later and downward closure stays checkable one step at a time.
    enumerateComplexes(n, undecided, index + 1, current, out);
    bool allSubsetsIn = true;
    for (unsigned rem = mask; rem && allSubsetsIn; rem &= rem - 1) {
        unsigned sub = mask ^ (rem & (0u - rem));
        if (sub != 0 && !current.isFace(sub)) allSubsetsIn = false;
    }
    if (allSubsetsIn) {
        SimplicialComplex extended = current;
        extended.insertFaceWithClosure(mask);
        enumerateComplexes(n, undecided, index + 1, extended, out);
    }
}

}  // namespace

std::vector<SimplicialComplex> enumerateChamberComplexes(int n, Decomposition d) {
    if (n < 1 || n > 5) throw CapacityError("chamber enumeration is capped at n <= 5");

    std::vector<unsigned> candidates;
    for (unsigned mask = 1; mask < (1u << n); ++mask)
        if (__builtin_popcount(mask) >= 2) candidates.push_back(mask);
    std::sort(candidates.begin(), candidates.end(), [](unsigned x, unsigned y) {
        int px = __builtin_popcount(x), py = __builtin_popcount(y);
        return px != py ? px < py : x < y;
    });

    SimplicialComplex vertices(n);
    for (int i = 0; i < n; ++i) vertices.insertFaceWithClosure(1u << i);

    std::vector<SimplicialComplex> all;
    enumerateComplexes(n, candidates, 0, vertices, all);

    std::vector<SimplicialComplex> realizable;
    std::set<std::vector<unsigned>> coarseSeen;
    for (const SimplicialComplex& c : all) {
        if (!realize(c)) continue;
        if (d == Decomposition::coarse) {
            std::vector<unsigned> label;
            for (unsigned mask : c.faces())
                if (__builtin_popcount(mask) >= 3) label.push_back(mask);
            if (!coarseSeen.insert(label).second) continue;
        }
        realizable.push_back(c);
    }
    return realizable;
}

}  // namespace wsd

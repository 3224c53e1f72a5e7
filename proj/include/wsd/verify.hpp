#pragma once

/*
  Verification suites. Each suite machine-checks one family of identities
  (exact equality over the rationals, tolerance zero) on deterministic
  seeded inputs and reports the first counterexample on failure.
*/

#include "wsd/descend.hpp"

namespace wsd {

// Deterministic stream over splitmix64; never std::rand, never
// distribution objects, so output is identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() { return mix64(state_++); }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

private:
    std::uint64_t state_;
};

struct SuiteReport {
    std::string suite;
    bool pass = true;
    int checks = 0;
    std::vector<std::string> lines;
    std::string counterexample;

    void fail(const std::string& what) {
        pass = false;
        if (counterexample.empty()) counterexample = what;
    }
};

// Dual-recursion agreement on every key with 3g-3+n <= maxLevel, the two
// base constants, genus-0 closed-form agreement up to genus0MaxN points,
// and the string/dilaton/symmetry/gate laws on every memo entry.
SuiteReport suiteOracle(int maxLevel = 12, int genus0MaxN = 10);

// Random simple wall crossings (point target): the wall crossing identity
// per crossing, plus crossing-path composition (telescoped third terms
// against the direct partition double-sum) on pathCount dominating pairs.
SuiteReport suiteWallcross(int crossingCount, int pathCount, std::uint64_t seed, int maxN,
                           int maxGenus);

// Generating-polynomial wall crossing identity on seeded genus-0 crossings.
SuiteReport suiteGenpolyWallcross(int count, std::uint64_t seed, int maxN);

// Cone and symmetric dilaton equations over all valid (g, r, n) in range,
// quantified over every gated exponent vector.
SuiteReport suiteDilaton(int maxGenus = 2, int maxN = 5);

// Cone and symmetric string equations; the r = 0 row is additionally
// checked against the plain unweighted string equation.
SuiteReport suiteString(int maxGenus = 2, int maxN = 5);

// Cone and symmetric divisor equations in formal-target mode.
SuiteReport suiteDivisor(const TargetModel& target, int divisorClassId);
SuiteReport suiteDivisor();  // with the built-in divisor model

// The {12,34} infeasibility and realize-buildComplex round trips on seeded
// random positive weights.
SuiteReport suiteRealize(int count, std::uint64_t seed, int maxN);

// All-k-zero weighted descendants are independent of the complex
// (formal-target mode, truncation ring).
SuiteReport suiteGwInvariance(const TargetModel& target);
SuiteReport suiteGwInvariance();  // with the built-in truncation model

// Built-in formal target documents (also exercised by the loader tests).
std::string builtinDivisorTargetDocument();
std::string builtinTruncationTargetDocument();
TargetModel builtinDivisorTarget();
TargetModel builtinTruncationTarget();

// Helpers shared by the suites and the acceptance harness.
WeightData randomPositiveWeights(Rng& rng, int n, int genus, int maxDenominator = 24);
std::pair<WeightData, WeightData> randomDominatingPair(Rng& rng, int n, int genus);
std::vector<int> randomGatedKs(Rng& rng, int n, int total);

}  // namespace wsd

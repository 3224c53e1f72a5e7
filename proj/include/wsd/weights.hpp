#pragma once

/*
  Weight data A = (a_1,...,a_n) with rational a_i in [0,1], carried together
  with the genus g and the degree of the curve class beta. The pair (g, beta)
  only enters through the admissibility domain D_{g,n,beta} and the dimension
  gate; there is no curve-class arithmetic here.

  D_{g,n,beta} is the full cube [0,1]^n except for two small cases:
  (g,beta) = (1,0) removes the single point (0,...,0), and (g,beta) = (0,0)
  keeps only the locus where the weights sum to more than 2.
*/

#include "wsd/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace wsd {

struct WeightData {
    std::vector<Rational> weights;
    int genus = 0;
    int betaDegree = 0;

    int size() const { return static_cast<int>(weights.size()); }
    bool positive() const;
};

// Validates 0 <= a_i <= 1 and g, beta >= 0.
WeightData makeWeightData(std::vector<Rational> weights, int genus, int betaDegree);

// Comma-separated rational literals with repetition shorthand:
// "2/5,2/5,2/5,1" or "1^2,1/10^3". The token "e" (optionally with ^rep)
// stands for the substitute value when one is supplied.
std::vector<Rational> parseWeightList(const std::string& text,
                                      const std::optional<Rational>& epsilon = std::nullopt);

bool inDomain(const WeightData& w);

// Componentwise a_i >= b_i. Requires matching length, genus and beta.
bool dominates(const WeightData& a, const WeightData& b);

// splitmix64; all deterministic "randomness" in the library flows through it.
std::uint64_t mix64(std::uint64_t x);

// Largest d such that decreasing each positive weight by less than d is
// guaranteed to keep the weight data inside its fine chamber (every subset
// sum keeps its side of the wall, positivity survives, and for
// (g,beta) = (0,0) the domain inequality survives).
Rational perturbationBound(const WeightData& w);

// Decreases each weight by a small seed-derived rational, staying inside the
// fine chamber of w: the simplicial complex is unchanged and no subset of
// the result sums to exactly 1. Requires w positive. When a predicate is
// supplied, the seed is advanced until the predicate accepts the result.
WeightData perturbGeneric(const WeightData& w, std::uint64_t seed);
WeightData perturbGeneric(const WeightData& w, std::uint64_t seed,
                          const std::function<bool(const WeightData&)>& accept,
                          int maxAttempts = 64);

}  // namespace wsd

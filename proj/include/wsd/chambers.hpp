#pragma once

/*
  Wall arrangements and chamber combinatorics. The domain D_{g,n,beta} is cut
  by the hyperplanes sum_{i in I} a_i = 1, over subsets with |I| >= 2 (fine
  decomposition) or |I| >= 3 (coarse). Moduli spaces are constant on coarse
  chambers, universal families on fine ones, always for fixed zero weights.

  Moving from weight data A down to B <= A crosses walls; after a generic
  perturbation the straight segment crosses one wall at a time, each crossing
  adding a single simplex to the complex. crossingPath reports those events.
*/

#include "wsd/complexes.hpp"

#include <map>

namespace wsd {

enum class Decomposition { fine, coarse };

// The wall subsets of the arrangement: |I| >= 2 for the fine decomposition,
// |I| >= 3 for the coarse one (so the coarse walls are among the fine ones).
// Each subset I encodes the hyperplane sum_{i in I} a_i = 1.
std::vector<unsigned> wallSubsets(int n, Decomposition d);

// One wall subset per entry; true when the subset sum is <= 1.
struct ChamberSignature {
    int n = 0;
    Decomposition decomposition = Decomposition::fine;
    std::map<unsigned, bool> atMostOne;
};

ChamberSignature chamberSignature(const WeightData& w, Decomposition d);

// Equal fine signatures and equal zero sets.
bool sameFineChamber(const WeightData& a, const WeightData& b);

struct CrossingEvent {
    unsigned subset = 0;
    Rational parameter;   // position in (0,1) along the perturbed segment
    bool add = true;      // the subset sum drops to <= 1, joining the complex
};

struct CrossingPath {
    WeightData from;  // perturbed endpoints actually traversed
    WeightData to;
    std::vector<CrossingEvent> events;
};

// Straight-line path from a down to b (a dominates b, both positive and in
// the domain). Both endpoints are perturbed by a common seed-derived offset
// until all crossing parameters are distinct, so every event is a simple
// wall crossing; the perturbation never leaves either fine chamber.
CrossingPath crossingPath(const WeightData& a, const WeightData& b, std::uint64_t seed);

// The added simplex when `after` is `before` plus exactly one face and is
// downward closed; empty otherwise.
std::optional<unsigned> isSimpleCrossing(const SimplicialComplex& before,
                                         const SimplicialComplex& after);

// Every realizable complex on n <= 5 vertices with positive weights, by
// candidate generation plus exact feasibility. For the coarse decomposition
// complexes are identified when they differ only in edges.
std::vector<SimplicialComplex> enumerateChamberComplexes(int n, Decomposition d);

}  // namespace wsd

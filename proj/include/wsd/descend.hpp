#pragma once

/*
  The weighted descendant engine.

  The computational definition is the reduction to unweighted descendants:

    <prod tau_{k_i}(g_i)>_{g,A} = sum over Delta_A-admissible partitions S
        of (-1)^{dim S} <prod over blocks tau_{k_b}(g_b)>_{g,|S|}

  where a block b carries k_b = sum of its k_i minus (|b|-1) and the class
  product of its g_i, and any block with k_b < 0 kills its term. The wall
  crossing formula, the kappa identity, the generating-polynomial identity
  and the cone/symmetric string-dilaton-divisor equations are all verified
  against this engine; the reduction itself arises by iterating the wall
  crossing formula, so exact agreement of the two code paths is a genuine
  correctness signal rather than a tautology.
*/

#include "wsd/chambers.hpp"
#include "wsd/multipoly.hpp"
#include "wsd/oracle.hpp"

namespace wsd {

struct WeightedQuery {
    int genus = 0;
    SimplicialComplex complex;
    std::vector<int> ks;
    std::vector<int> classIds;
    const TargetModel* target = nullptr;
};

// Shared immutable point target for queries that do not carry classes.
const TargetModel& thePointTarget();

WeightedQuery makePointQuery(int genus, SimplicialComplex complex, std::vector<int> ks);

bool dimensionGate(const WeightedQuery& q);

struct PartitionTerm {
    SetPartition partition;
    int sign = 1;               // (-1)^{dim of the partition}
    std::vector<int> kSigma;    // one per block
    Rational oracleValue;       // unsigned oracle contribution of the partition
    Rational term;              // sign * oracleValue
};

Rational weightedDescendant(const WeightedQuery& q, std::vector<PartitionTerm>* trace = nullptr);

// (-1)^{dim sigma + 1} times the descendant on the sigma-contracted complex,
// with the merged vertex carrying (k_sigma, gamma_sigma). sigma must be a
// face of q.complex (the post-crossing complex).
Rational wallcrossThirdTerm(const WeightedQuery& q, unsigned sigmaMask);

struct CheckReport {
    bool pass = false;
    Rational lhs;
    Rational rhs;
    std::string detail;
};

// Wall crossing formula: value at the pre-crossing complex equals value at
// the post-crossing complex plus the third term for the added simplex.
CheckReport verifyWallcross(int genus, const std::vector<int>& ks,
                            const std::vector<int>& classIds,
                            const SimplicialComplex& preComplex,
                            const SimplicialComplex& postComplex, const TargetModel& target);

// Sum over every exponent vector passing the gate of the descendant times
// t^k (divided by k! in the exponential flavor).
MultiPoly generatingPolynomial(int genus, const SimplicialComplex& complex,
                               const TargetModel& target, const std::vector<int>& classIds,
                               bool exponential);

struct PolyCheckReport {
    bool pass = false;
    MultiPoly lhs;   // E_{A+} - E_A, lifted to n+1 variables
    MultiPoly rhs;   // signed integrated-substituted E_{A_J}
    std::string detail;
    PolyCheckReport() : lhs(0), rhs(0) {}
};

// E_{A+} - E_A = (-1)^{dim sigma + 1} (iterated antiderivative of E_{A_J}
// in t_sigma, dim sigma times, then t_sigma = sum of t_i over sigma).
PolyCheckReport verifyGenpolyWallcross(int genus, const SimplicialComplex& preComplex,
                                       const SimplicialComplex& postComplex,
                                       const TargetModel& target,
                                       const std::vector<int>& classIds);

// Kappa numbers: the weighted descendant at the full simplex (the epsilon^n
// chamber). Defined for g >= 1; the g = 0 domain is empty because tiny
// symmetric weights never satisfy sum > 2.
Rational kappaNumber(int genus, const std::vector<int>& ks);

// Independent route: the alternating sum over all set partitions, enumerated
// directly without the complex machinery.
Rational kappaNumberByAllPartitions(int genus, const std::vector<int>& ks);

/*
  Cone equations. The query lives on a complex that must be the cone over
  its first n vertices (the complex of the universal family); the apex is
  insertion n+1 and carries tau_1 (dilaton), tau_0 (string) or tau_0(D)
  (divisor, formal target with the integral of D over beta supplied).
*/
CheckReport verifyConeDilaton(const WeightedQuery& q);
CheckReport verifyConeString(const WeightedQuery& q);
CheckReport verifyConeDivisor(const WeightedQuery& q);

/*
  Symmetric equations at the skeleton complexes Delta_{n+1,r} with weights
  (1/(r+1))^{n+1}. F(A,A') is the set of faces of Cone(Delta_{n,r}) missing
  from Delta_{n+1,r}; each contributes a correction on the complex obtained
  by merging its vertices into one isolated vertex. ks lists the first n
  insertion exponents; the (n+1)-st is tau_1 or tau_0(D).
*/
CheckReport verifySymmetricDilaton(int genus, int r, int n, const std::vector<int>& ks,
                                   const TargetModel& target, const std::vector<int>& classIds);
CheckReport verifySymmetricString(int genus, int r, int n, const std::vector<int>& ks,
                                  const TargetModel& target, const std::vector<int>& classIds);
CheckReport verifySymmetricDivisor(int genus, int r, int n, const std::vector<int>& ks,
                                   const TargetModel& target, const std::vector<int>& classIds,
                                   int divisorClassId);

// Point-target overloads with unit classes everywhere.
CheckReport verifySymmetricDilaton(int genus, int r, int n, const std::vector<int>& ks);
CheckReport verifySymmetricString(int genus, int r, int n, const std::vector<int>& ks);

// Symmetric weights (1/(r+1))^count lie in D_{g,count,beta}?
bool symmetricWeightsInDomain(int genus, int betaDegree, int count, int r);

// All exponent vectors of length n with the given sum, lexicographic order.
std::vector<std::vector<int>> gatedExponents(int n, int total);

}  // namespace wsd

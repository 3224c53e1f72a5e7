#pragma once

/*
  Unweighted descendant invariants <tau_{k_1}(g_1) ... tau_{k_n}(g_n)>_g.

  For the point target these are the Witten-Kontsevich intersection numbers,
  computed by a memoized Virasoro/DVV recursion from the base constants
  <tau_0^3>_0 = 1 and <tau_1>_1 = 1/24. A second, independent scheme (the
  KdV equation combined with the string and dilaton equations) is exposed
  for cross-checking; the two must agree everywhere.

  For a formal target the caller supplies a finite graded ring and a table
  of descendant values; entries that pass the dimension gate but are missing
  from the table raise OracleIncompleteError rather than defaulting to zero,
  because a silent zero would corrupt the signed partition sums downstream.
*/

#include "wsd/rational.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wsd {

inline constexpr int kUnitClassId = 1;

// Genus-0 point-target closed form: the coefficient of t^k in
// (t_1 + ... + t_n)^{n-3}, i.e. (n-3)!/prod(k_i!) under the gate
// sum k_i = n-3, and 0 otherwise. Requires n >= 3.
Rational genus0Point(const std::vector<int>& ks);

// <tau_{k_1}...tau_{k_n}>_g for the point target (DVV recursion).
// Zero off the dimension gate sum k_i = 3g-3+n and for unstable (g,n).
Rational wkPoint(int genus, const std::vector<int>& ks);

// Same values through the KdV + string + dilaton route.
Rational wkPointKdv(int genus, const std::vector<int>& ks);

// Snapshot of the keys the DVV memo currently holds, for validation sweeps.
std::vector<std::pair<int, std::vector<int>>> wkMemoKeys();

struct ClassInfo {
    int id = 0;
    std::string name;
    int degree = 0;
    std::optional<Rational> betaIntegral;  // integral of the class over beta, for divisors
};

// Linear combination of basis classes, coefficients nonzero, sorted by id.
using ClassCombo = std::vector<std::pair<Rational, int>>;

struct DescendantKey {
    int genus = 0;
    std::vector<std::pair<int, int>> insertions;  // (k, classId), kept sorted

    bool operator<(const DescendantKey& other) const;
    bool operator==(const DescendantKey& other) const;
};

DescendantKey makeKey(int genus, std::vector<std::pair<int, int>> insertions);

struct TargetModel {
    enum class Kind { point, formal };

    Kind kind = Kind::point;
    int dimension = 0;
    int pairing = 0;     // -K_V . beta
    int betaDegree = 0;  // deg beta; 0 for the point target
    std::vector<ClassInfo> classes;
    std::map<std::pair<int, int>, ClassCombo> products;  // keyed by (min id, max id)
    std::map<DescendantKey, Rational> table;

    const ClassInfo* findClass(int id) const;
    int classDegree(int id) const;  // throws on unknown id
};

TargetModel pointTarget();

/*
  Line-oriented document, sections in order:

    [target]       kind=point|formal, dim=<int>, pairing=<int>, beta=<int>
    [classes]      <id> <name> <degree> [<beta integral>]   (id 1 = unit)
    [products]     <idA>*<idB> = <coef>*<id> (+ <coef>*<id>)*   or  ... = 0
    [descendants]  g=<int> ; (<k>,<id>) (<k>,<id>) ... ; <rational>

  '#' starts a comment. Products are completed by commutativity and degree
  consistency is checked. Products never written down are an error when they
  are eventually needed, not zero.
*/
TargetModel loadTarget(std::istream& in);
TargetModel loadTargetFile(const std::string& path);

// Product of the listed classes, expanded to a combination of basis classes.
ClassCombo ringProduct(const TargetModel& m, const std::vector<int>& ids);

// Point target delegates to wkPoint (all classes must be the unit). Formal
// targets: 0 for negative k or off the gate, the table value when present,
// OracleIncompleteError otherwise.
Rational unweightedLookup(const TargetModel& m, const DescendantKey& key);

}  // namespace wsd

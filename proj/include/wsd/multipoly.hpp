#pragma once

/*
  Sparse multivariate polynomials over the rationals, in a fixed number of
  variables t_1..t_n. These hold the generating polynomials e(t) and E(t) of
  descendant invariants, so everything is exact: coefficients are Rational,
  no term with coefficient zero is ever stored, and equality is structural
  on the canonical term maps.

  Terms are kept in graded-lexicographic order (total degree first, then
  lexicographic on exponent vectors); serialization walks that order from
  the leading term down, which makes all printed output deterministic.
*/

#include "wsd/rational.hpp"

#include <map>
#include <set>
#include <vector>

namespace wsd {

using Exponents = std::vector<unsigned>;

struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPoly {
public:
    explicit MultiPoly(int variableCount);

    static MultiPoly constant(int variableCount, const Rational& c);
    static MultiPoly variable(int variableCount, int index);

    int variableCount() const { return vars_; }
    bool isZero() const { return terms_.empty(); }
    std::size_t termCount() const { return terms_.size(); }

    // Adds c * t^k, dropping the term if the total cancels.
    void addTerm(const Exponents& k, const Rational& c);

    Rational coefficient(const Exponents& k) const;

    MultiPoly operator+(const MultiPoly& other) const;
    MultiPoly operator-(const MultiPoly& other) const;
    MultiPoly operator*(const MultiPoly& other) const;
    MultiPoly scaled(const Rational& c) const;

    bool operator==(const MultiPoly& other) const;
    bool operator!=(const MultiPoly& other) const { return !(*this == other); }

    // Applies `times` copies of the termwise map t_var^j -> t_var^{j+1}/(j+1),
    // i.e. antiderivative in t_var with zero constants of integration.
    MultiPoly homogeneousAntiderivative(int var, int times) const;

    // Replaces every occurrence of t_var by sum of t_i over `replacement`,
    // expanded and canonicalized. var must not belong to replacement.
    MultiPoly substituteSum(int var, const std::set<int>& replacement) const;

    // Reinterprets this polynomial over `newCount` variables, sending old
    // variable i to slot slotOf[i]. Slots must be distinct and in range.
    MultiPoly withVariables(int newCount, const std::vector<int>& slotOf) const;

    // Graded-lex order, leading term first; "0" for the zero polynomial.
    // Example: "t1^2 + 2*t1*t2 - 1/2*t3".
    std::string toString() const;

    const std::map<Exponents, Rational, GradedLexLess>& terms() const { return terms_; }

private:
    void checkSameVars(const MultiPoly& other) const;
    void checkIndex(int var) const;

    int vars_;
    std::map<Exponents, Rational, GradedLexLess> terms_;
};

}  // namespace wsd

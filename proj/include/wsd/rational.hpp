#pragma once

/*
  Exact rational arithmetic. Every invariant computed by this library is a
  rational number and is carried exactly; no floating point appears anywhere
  in the pipeline. We use boost::multiprecision's cpp_rational, which keeps
  values in canonical form (denominator > 0, gcd(|num|, den) = 1) after every
  operation.
*/

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace wsd {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when a configured size cap is exceeded (n > 16 vertices,
// Fourier-Motzkin row explosion, chamber enumeration above the hard cap).
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a formal-target descendant passes the dimension gate but has
// no table entry, or a needed ring product was never specified. Missing data
// must never silently become zero: the signed partition sums would absorb
// the error invisibly.
class OracleIncompleteError : public std::runtime_error {
public:
    explicit OracleIncompleteError(const std::string& what) : std::runtime_error(what) {}
};

BigInt factorial(unsigned n);
BigInt oddDoubleFactorial(int n);  // (2n+1)!! for n >= -1; (-1)!! = 1
BigInt binomial(unsigned n, unsigned k);

// Parses "p", "-p", "p/q" with q > 0 after normalization. Rejects empty
// strings, zero denominators and stray characters.
Rational parseRational(const std::string& text);

// "p/q", or "p" when the denominator is 1.
std::string toString(const Rational& value);

}  // namespace wsd

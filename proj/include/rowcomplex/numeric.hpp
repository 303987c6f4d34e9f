#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

namespace rowcomplex {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact counts indexed by cardinality k = 0..w.
using CountVector = std::vector<BigInt>;

/// Integer polynomial, coefficients in ascending degree order.
using Poly = std::vector<BigInt>;

/// Thrown when an operation would exceed its desk-scale guard.
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown on malformed input text (row strings, facet files, weights files).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Row n of Pascal's triangle: C(n,0) .. C(n,n).
CountVector binomial_row(int n);

BigInt binomial(int n, int k);

BigInt pow2(int n);

/// p * q with every coefficient beyond degree `cap` discarded.
Poly poly_mul(const Poly& p, const Poly& q, int cap);

/// (1+x)^n truncated beyond degree `cap`.
Poly binomial_poly(int n, int cap);

/// Drop trailing zero coefficients ({} stays {}).
void poly_trim(Poly& p);

}  // namespace rowcomplex

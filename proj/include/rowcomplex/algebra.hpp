#pragma once

#include <vector>

#include "rowcomplex/complex.hpp"
#include "rowcomplex/numeric.hpp"

namespace rowcomplex {

/// Coefficients of h(t) = sum over i = 0..d of f[i] t^i (1-t)^(d-i), where
/// f[i] counts the cardinality-i faces. d must be at least the largest i
/// with f[i] != 0; the usual choice is the maximum facet cardinality.
Poly h_polynomial(const CountVector& f, int d);

/// The same transform with the alternate range sum over i = 1..w of
/// f[i-1] t^i (1-t)^(w-i), exposed for comparison.
Poly h_polynomial_shifted(const CountVector& f, int w);

/// Inverse transform: recovers f from the h coefficients,
/// f[k] = sum over i of h[i] C(d-i, k-i).
CountVector f_from_h(const Poly& h, int d);

/// Boundary matrix from cardinality-k faces to cardinality-(k-1) faces over
/// GF(p): column j is the signed support of the j-th k-face (faces sorted
/// lexicographically), the face minus its i-th smallest element picking up
/// sign (-1)^i. Row-major, entries reduced mod p.
std::vector<std::vector<int>> boundary_matrix(const FacetFamily& f, int k,
                                              int p);

/// Rank of a matrix over GF(p) by Gaussian elimination.
int rank_mod_p(std::vector<std::vector<int>> m, int p);

/// Dimensions of the reduced homology over GF(p), indexed by dimension
/// i = 0 .. max facet cardinality - 1:
///   dim H~_i = f_{i+1} - rank(δ_{i+1}) - rank(δ_{i+2}),
/// with the chain group in degree 0 spanned by the empty face. p must be
/// prime; total face count is guarded.
std::vector<int> homology_dims(const FacetFamily& f, int p);

bool is_prime(int p);

}  // namespace rowcomplex

#pragma once

#include <map>

#include "rowcomplex/complex.hpp"
#include "rowcomplex/split.hpp"

namespace rowcomplex {

/// Entry k = number of k-element transversals of {W∖F_i}, i.e. of k-element
/// non-faces. Computed by imposing all transversal constraints on the full
/// cube and summing per-row histograms. `threads` > 1 spreads the per-row
/// sums over that many workers; the reduction is exact integer addition, so
/// the result is identical.
CountVector transversal_counts(const FacetFamily& f, int threads = 1);

/// f_k = C(w,k) − transversal_counts[k] for k >= 1, f_0 = 1.
CountVector face_numbers(const FacetFamily& f, int threads = 1);

/// |SC| by inclusion-exclusion over all nonempty facet subsets, each term
/// ±2^|intersection|. The running intersection is maintained along a
/// depth-first walk of the subset tree, one set operation per subset.
/// Guard: at most 25 facets.
BigInt inclusion_exclusion_count(const FacetFamily& f);

/// Kind-N partition of the index sets with potentially nonzero terms in the
/// inclusion-exclusion expansion, given the generators of the irrelevant set
/// filter. Total cardinality = number of nonzero-eligible terms, the empty
/// index set included.
Partition nonzero_term_partition(const NonfaceFamily& irrelevant);

/// N = N0 + sum over k = 1..m of (-1)^k g(k) f[k]. g must be total on 0..m;
/// a missing entry is an error, not zero.
BigInt symmetric_inclusion_exclusion(const BigInt& n0,
                                     const std::map<int, BigInt>& g,
                                     const CountVector& f, int m);

}  // namespace rowcomplex

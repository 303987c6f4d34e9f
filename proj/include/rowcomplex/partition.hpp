#pragma once

#include <vector>

#include "rowcomplex/complex.hpp"
#include "rowcomplex/split.hpp"

namespace rowcomplex {

/// Integer weight per position 1..w, extended to faces by summation.
using Weights = std::vector<long long>;

/// Kind-E partition of the complex: row 1 is the powerset of the first
/// facet; for each further facet the powerset row is made disjoint from all
/// earlier powersets by imposing X ∩ (W∖F_i) ≠ ∅ for i = 1..p in order.
Partition partition_from_facets(const FacetFamily& f);

/// Kind-N partition of the complex of all noncovers of the generators,
/// built by imposing the noncover constraints in order on the full cube.
Partition partition_from_nonfaces(const NonfaceFamily& g);

struct MaxResult {
    long long value = 0;
    FaceSet witness;
};

/// max { sum of weights over X : X a member } over all rows, with one
/// attaining face. Ties: first row attaining the maximum, and within a row
/// the witness takes exactly the strictly positive free and bubble
/// positions (a bubble with no positive weight contributes its best single
/// position, lowest position on equal weight). Kind N is handled by
/// complementing rows and weights.
MaxResult maximize(const Partition& p, const Weights& weights);

/// Intermediate rows of a link computation, kept for inspection.
struct LinkTrace {
    std::vector<Row> disjoint;  // rows of {Y ∈ Δ : Y ∩ X = ∅}
    std::vector<Row> minus;     // rows of {Z∖X : Z ∈ Δ, X ⊆ Z}
    int empty_pairs = 0;
    Partition link;
};

/// Partition of link(X) = {Y ∈ Δ : Y ∪ X ∈ Δ, Y ∩ X = ∅} from an existing
/// partition of Δ, via the pairwise intersections of the Disjoint and Minus
/// row families (i-major, j-minor order). X must be a face.
LinkTrace link_of_face(const Partition& p, const FacetFamily& f,
                       const FaceSet& x);

/// Cross-check route: the facets of the link are the maximal F_i∖X over
/// facets containing X; partition those directly.
Partition link_via_facets(const FacetFamily& f, const FaceSet& x);

}  // namespace rowcomplex

#pragma once

#include <vector>

#include "rowcomplex/face_set.hpp"
#include "rowcomplex/numeric.hpp"

namespace rowcomplex {

/// A simplicial complex given by its facets (maximal faces). The stored
/// collection is always an antichain; construction reduces the input and can
/// report whether anything was dropped.
struct FacetFamily {
    int w = 0;
    std::vector<FaceSet> facets;

    /// Validates the range of all members, reduces to an antichain (input
    /// order preserved among survivors) and sets *reduced when sets were
    /// dropped. Throws on empty input or out-of-range members.
    static FacetFamily from_sets(int w, std::vector<FaceSet> sets,
                                 bool* reduced = nullptr);

    int max_facet_size() const;
};

/// The same complex described from the other side: the minimal non-faces
/// (generators of the complementary set filter).
struct NonfaceFamily {
    int w = 0;
    std::vector<FaceSet> generators;

    /// Generators must be nonempty sets; the collection is antichain-reduced.
    /// An empty collection is legal (the complex is the full powerset).
    static NonfaceFamily from_sets(int w, std::vector<FaceSet> sets);
};

/// Removes every set contained in another (duplicates keep one survivor),
/// preserving input order. Throws on empty input.
std::vector<FaceSet> antichain_reduce(const std::vector<FaceSet>& sets);

/// True iff x is a subset of some facet.
bool is_face(const FacetFamily& f, const FaceSet& x);

/// Exact f-vector by scanning all 2^w subsets. Guard: w <= 22.
CountVector fvector_bruteforce(const FacetFamily& f);

/// The minimal non-faces, computed as the minimal transversals of the facet
/// complements via iterated Berge multiplication with minimization after
/// every step. Desk scale only; guarded against intermediate blowup.
NonfaceFamily minimal_nonfaces(const FacetFamily& f);

/// All k-element faces, by binary recursion on the lowest vertex present in
/// some facet (branch: vertex in the face / vertex deleted). Cost is
/// proportional to the number of faces found times a polynomial in w.
std::vector<FaceSet> faces_of_size(const FacetFamily& f, int k);

}  // namespace rowcomplex

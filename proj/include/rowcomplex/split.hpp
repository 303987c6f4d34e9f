#pragma once

#include <vector>

#include "rowcomplex/face_set.hpp"
#include "rowcomplex/row.hpp"

namespace rowcomplex {

/// A constraint the splitting engine can impose on a row family:
/// Transversal(H) keeps the members with X ∩ H ≠ ∅ (E rows),
/// Noncover(G) keeps the members with G ⊄ X (N rows).
struct Constraint {
    enum class Kind { Transversal, Noncover };
    Kind kind;
    FaceSet set;

    static Constraint transversal(FaceSet h);
    static Constraint noncover(FaceSet g);
};

/// A pairwise-disjoint collection of same-width, same-kind rows.
struct Partition {
    int w = 0;
    RowKind kind = RowKind::E;
    std::vector<Row> rows;

    BigInt total_cardinality() const;
    /// Entry k = number of k-element members over all rows.
    CountVector size_histogram(int upto) const;
};

/// Splits an E row against X ∩ H ≠ ∅. The output rows are pairwise disjoint
/// and their union is exactly {X ∈ r : X ∩ H ≠ ∅}; empty output is legal.
///
/// Pivot order: bubbles overlapping H properly, in ascending id, each
/// yielding a satisfied son (overlap becomes the whole bubble, remainder
/// freed to 2) and a recursed son (overlap zeroed); once only free positions
/// of H remain they become a single fresh bubble.
std::vector<Row> impose_transversal(const Row& r, const FaceSet& h);

/// Splits an N row against G ⊄ X, by complementing, imposing the transversal
/// constraint with H = G, and complementing back.
std::vector<Row> impose_noncover(const Row& r, const FaceSet& g);

/// Imposes every constraint in order on every start row. Constraints must be
/// all Transversal (kind E rows) or all Noncover (kind N rows); start rows
/// must already be pairwise disjoint. Deterministic: depth-first over a work
/// stack, a row's sons kept in split order.
Partition impose_all(int w, RowKind kind, const std::vector<Row>& start,
                     const std::vector<Constraint>& constraints);

/// Disjoint rows whose union is the set intersection of the two row families.
/// Fixed-symbol conflicts give {}; both rows' bubbles are replayed as
/// transversal constraints on the merged fixed skeleton. Kind N pairs are
/// handled via complementation.
std::vector<Row> intersect_rows(const Row& a, const Row& b);

}  // namespace rowcomplex

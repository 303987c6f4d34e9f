#pragma once

#include <vector>

#include "rowcomplex/complex.hpp"
#include "rowcomplex/split.hpp"

namespace rowcomplex {
namespace fsm {

/// A transaction database over {1..w}.
struct Database {
    int w = 0;
    std::vector<FaceSet> transactions;

    static Database from_sets(int w, std::vector<FaceSet> transactions);
    int size() const { return static_cast<int>(transactions.size()); }
};

/// fr(s,k) = number of k-element itemsets contained in exactly s
/// transactions, for s = 0..m and k = 0..w. Every column k sums to C(w,k).
struct FrequencyTable {
    int w = 0;
    int m = 0;
    std::vector<CountVector> fr;  // fr[s][k]

    /// fr(s+,k): itemsets of size k in at least s transactions.
    BigInt at_least(int s, int k) const;
    /// Sum of a row over k = 1..w (the k = 0 column is bookkeeping only,
    /// matching the rendered table).
    BigInt row_sum(int s) const;
};

/// Facets of the complex of s+-frequent sets: the maximal intersections of
/// s transactions. Brute force over C(m,s) index sets; guarded at 10^6.
FacetFamily frequent_facets(const Database& d, int s);

FrequencyTable frequency_table(const Database& d, int threads = 1);

struct ProbabilityQuery {
    enum class Form {
        FrequentGivenSize,    // P(s+-frequent | |X| = k)
        SizeGivenFrequent,    // P(|X| = k | s+-frequent)
        ExactGivenFrequent,   // P(s-frequent | s+-frequent, |X| >= k)
    };
    Form form;
    int s = 1;
    int k = 1;
};

struct ProbabilityResult {
    bool defined = false;  // false when the conditioning event is empty
    Rational value;
};

/// Exact conditional probabilities read off the table. Matching the printed
/// table, all sums run over k >= 1 (the empty itemset never counts).
ProbabilityResult probability(const FrequencyTable& t,
                              const ProbabilityQuery& q);

/// cl(X) = intersection of the transactions containing X when at least s of
/// them do, and the full ground set otherwise.
FaceSet closure(const Database& d, int s, const FaceSet& x);

/// All closed sets other than the full ground set, in lectic order, via
/// next-closure over cl.
std::vector<FaceSet> closed_sets(const Database& d, int s);

/// Kind-E partition of {X : supp(X) = supp(Y)} for a closed Y: the powerset
/// row of Y with X ∩ (Y∖Y_i) ≠ ∅ imposed for every lower cover Y_i of Y in
/// the closed-set lattice. Throws when Y is not closed.
Partition support_class_partition(const Database& d, int s, const FaceSet& y);

}  // namespace fsm
}  // namespace rowcomplex

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rowcomplex/face_set.hpp"
#include "rowcomplex/numeric.hpp"

namespace rowcomplex {

/// Bubble flavor of a row. In an E row a bubble demands at least one 1 among
/// its positions, in an N row at least one 0.
enum class RowKind { E, N };

RowKind flipped(RowKind k);
char kind_letter(RowKind k);

/// A width-w wildcard row. Every position carries 0, 1, 2 (free) or a bubble
/// id. The members of the row are the X ⊆ {1..w} with ones(r) ⊆ X,
/// X ∩ zeros(r) = ∅, and every bubble hit according to the kind.
///
/// Rows are immutable values. Bubble ids are canonical: 1..t in order of each
/// bubble's smallest position. Singleton bubbles are legal to construct but
/// normalized() promotes them to a fixed 1 (E) or 0 (N).
class Row {
public:
    /// Build from a symbol array: entries 0, 1, 2, or bubble_symbol(id).
    /// Distinct ids are renumbered canonically; positions of each id become
    /// one bubble.
    static Row from_symbols(RowKind kind, std::vector<int> symbols);

    /// The all-2 row: every subset of {1..w} is a member.
    static Row full_cube(RowKind kind, int w);

    /// The {0,2} row whose members are exactly the subsets of `inside`.
    static Row powerset(RowKind kind, int w, const FaceSet& inside);

    int width() const { return static_cast<int>(symbols_.size()); }
    RowKind kind() const { return kind_; }

    bool is_zero(int pos) const { return symbol(pos) == 0; }
    bool is_one(int pos) const { return symbol(pos) == 1; }
    bool is_two(int pos) const { return symbol(pos) == 2; }
    /// Bubble id at pos, or 0 when the symbol is fixed or free.
    int bubble_id(int pos) const;
    /// Raw symbol value: 0, 1, 2, or bubble_symbol(id).
    int symbol(int pos) const;

    static int bubble_symbol(int id) { return 2 + id; }

    int bubble_count() const { return static_cast<int>(bubbles_.size()); }
    const FaceSet& bubble(int id) const { return bubbles_[id - 1]; }
    const std::vector<FaceSet>& bubbles() const { return bubbles_; }

    FaceSet zeros() const;
    FaceSet ones() const;
    FaceSet twos() const;
    int two_count() const;
    int one_count() const;

    /// Membership test for x ⊆ {1..w}. Throws on out-of-range positions.
    bool contains(const FaceSet& x) const;

    /// Number of members: 2^twos * prod over bubbles of (2^size - 1).
    /// The formula is kind-independent; each bubble forbids exactly one of
    /// its 2^size local patterns.
    BigInt cardinality() const;

    /// Entry k = number of k-element members, for k = 0..upto.
    CountVector size_histogram(int upto) const;

    /// Swaps 0 and 1 and flips the kind; members become complements.
    Row complemented() const;

    /// Promotes singleton bubbles to fixed symbols and renumbers ids.
    /// The empty marker (nullopt) is reserved for bubbles with no positions,
    /// which this representation cannot hold; see with_zero / with_one for
    /// the operations that do signal emptiness.
    std::optional<Row> normalized() const;

    /// Restriction to members without pos, i.e. {X ∈ r : pos ∉ X}, as a row.
    /// nullopt when that family is empty.
    std::optional<Row> with_zero(int pos) const;

    /// Restriction to members containing pos. nullopt when empty.
    std::optional<Row> with_one(int pos) const;

    /// Whitespace-separated symbols: 0 1 2 e1 e2 ... (n1 ... for kind N),
    /// exactly the table format used by partition dumps.
    std::string render() const;

    /// Inverse of render(). Accepts a bare "e"/"n" token as id 1. A row with
    /// no bubbles gets `fallback` as its kind.
    static Row parse(const std::string& line, RowKind fallback);

    bool operator==(const Row&) const = default;

private:
    Row() = default;
    void check_pos(int pos) const;

    RowKind kind_ = RowKind::E;
    std::vector<int> symbols_;      // index pos-1
    std::vector<FaceSet> bubbles_;  // index id-1
};

}  // namespace rowcomplex

#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace rowcomplex {

/// A subset of the ground set {1..w}, kept as a sorted list of 1-based
/// positions. The width w is not stored; operations that need it take it as
/// a parameter or read it off the row or family involved.
class FaceSet {
public:
    FaceSet() = default;
    FaceSet(std::initializer_list<int> elems);
    explicit FaceSet(std::vector<int> elems);

    bool contains(int pos) const;
    bool empty() const { return elems_.empty(); }
    int size() const { return static_cast<int>(elems_.size()); }
    /// Largest element, 0 when empty.
    int max_element() const { return elems_.empty() ? 0 : elems_.back(); }

    bool subset_of(const FaceSet& other) const;
    bool intersects(const FaceSet& other) const;

    FaceSet intersect(const FaceSet& other) const;
    FaceSet unite(const FaceSet& other) const;
    FaceSet minus(const FaceSet& other) const;
    FaceSet complement(int w) const;

    const std::vector<int>& elements() const { return elems_; }

    /// Bit i-1 of the mask encodes membership of position i. Requires w <= 63.
    static FaceSet from_mask(std::uint64_t mask, int w);
    std::uint64_t to_mask() const;

    bool operator==(const FaceSet&) const = default;
    /// Lexicographic on the sorted element lists, so {} < {1,3} < {2}.
    bool operator<(const FaceSet& other) const { return elems_ < other.elems_; }

    std::string to_string() const;

private:
    std::vector<int> elems_;
};

}  // namespace rowcomplex

#include "rowcomplex/face_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace rowcomplex {

namespace {
std::vector<int> cleaned(std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (!elems.empty() && elems.front() < 1)
        throw std::invalid_argument("FaceSet: positions are 1-based");
    return elems;
}
}  // namespace

FaceSet::FaceSet(std::initializer_list<int> elems)
    : elems_(cleaned(std::vector<int>(elems))) {}

FaceSet::FaceSet(std::vector<int> elems) : elems_(cleaned(std::move(elems))) {}

bool FaceSet::contains(int pos) const {
    return std::binary_search(elems_.begin(), elems_.end(), pos);
}

bool FaceSet::subset_of(const FaceSet& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(),
                         elems_.begin(), elems_.end());
}

bool FaceSet::intersects(const FaceSet& other) const {
    auto a = elems_.begin();
    auto b = other.elems_.begin();
    while (a != elems_.end() && b != other.elems_.end()) {
        if (*a == *b) return true;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return false;
}

FaceSet FaceSet::intersect(const FaceSet& other) const {
    std::vector<int> out;
    std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(),
                          other.elems_.end(), std::back_inserter(out));
    FaceSet r;
    r.elems_ = std::move(out);
    return r;
}

FaceSet FaceSet::unite(const FaceSet& other) const {
    std::vector<int> out;
    std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(),
                   other.elems_.end(), std::back_inserter(out));
    FaceSet r;
    r.elems_ = std::move(out);
    return r;
}

FaceSet FaceSet::minus(const FaceSet& other) const {
    std::vector<int> out;
    std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(),
                        other.elems_.end(), std::back_inserter(out));
    FaceSet r;
    r.elems_ = std::move(out);
    return r;
}

FaceSet FaceSet::complement(int w) const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(w) - elems_.size());
    auto it = elems_.begin();
    for (int i = 1; i <= w; ++i) {
        if (it != elems_.end() && *it == i)
            ++it;
        else
            out.push_back(i);
    }
    FaceSet r;
    r.elems_ = std::move(out);
    return r;
}

FaceSet FaceSet::from_mask(std::uint64_t mask, int w) {
    if (w < 0 || w > 63) throw std::invalid_argument("from_mask: w > 63");
    std::vector<int> out;
    for (int i = 1; i <= w; ++i)
        if (mask & (std::uint64_t{1} << (i - 1))) out.push_back(i);
    FaceSet r;
    r.elems_ = std::move(out);
    return r;
}

std::uint64_t FaceSet::to_mask() const {
    if (max_element() > 63) throw std::invalid_argument("to_mask: w > 63");
    std::uint64_t mask = 0;
    for (int e : elems_) mask |= std::uint64_t{1} << (e - 1);
    return mask;
}

std::string FaceSet::to_string() const {
    std::string s = "{";
    for (size_t i = 0; i < elems_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(elems_[i]);
    }
    s += '}';
    return s;
}

}  // namespace rowcomplex

#include "rowcomplex/complex.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace rowcomplex {

std::vector<FaceSet> antichain_reduce(const std::vector<FaceSet>& sets) {
    if (sets.empty())
        throw std::invalid_argument("antichain_reduce: empty input");
    std::vector<FaceSet> out;
    for (size_t i = 0; i < sets.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < sets.size() && !dominated; ++j) {
            if (j == i || !sets[i].subset_of(sets[j])) continue;
            if (sets[i] == sets[j])
                dominated = j < i;  // duplicates: first one survives
            else
                dominated = true;
        }
        if (!dominated) out.push_back(sets[i]);
    }
    return out;
}

FacetFamily FacetFamily::from_sets(int w, std::vector<FaceSet> sets,
                                   bool* reduced) {
    if (w < 1) throw std::invalid_argument("FacetFamily: w must be >= 1");
    for (const FaceSet& s : sets)
        if (s.max_element() > w)
            throw std::invalid_argument("FacetFamily: facet exceeds ground set");
    size_t before = sets.size();
    FacetFamily f;
    f.w = w;
    f.facets = antichain_reduce(sets);
    if (reduced) *reduced = f.facets.size() != before;
    return f;
}

int FacetFamily::max_facet_size() const {
    int d = 0;
    for (const FaceSet& f : facets) d = std::max(d, f.size());
    return d;
}

NonfaceFamily NonfaceFamily::from_sets(int w, std::vector<FaceSet> sets) {
    if (w < 1) throw std::invalid_argument("NonfaceFamily: w must be >= 1");
    for (const FaceSet& s : sets) {
        if (s.empty())
            throw std::invalid_argument("NonfaceFamily: empty generator");
        if (s.max_element() > w)
            throw std::invalid_argument(
                "NonfaceFamily: generator exceeds ground set");
    }
    NonfaceFamily g;
    g.w = w;
    if (!sets.empty()) g.generators = antichain_reduce(sets);
    return g;
}

bool is_face(const FacetFamily& f, const FaceSet& x) {
    for (const FaceSet& facet : f.facets)
        if (x.subset_of(facet)) return true;
    return false;
}

CountVector fvector_bruteforce(const FacetFamily& f) {
    if (f.w > 22)
        throw GuardExceeded("fvector_bruteforce: w > 22");
    std::vector<std::uint64_t> facet_masks;
    facet_masks.reserve(f.facets.size());
    for (const FaceSet& facet : f.facets) facet_masks.push_back(facet.to_mask());
    CountVector counts(static_cast<size_t>(f.w) + 1);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << f.w); ++x) {
        for (std::uint64_t fm : facet_masks) {
            if ((x & fm) == x) {
                ++counts[__builtin_popcountll(x)];
                break;
            }
        }
    }
    return counts;
}

namespace {

// Insert a transversal candidate, keeping the collection an antichain of
// minimal sets.
void insert_minimal(std::vector<FaceSet>& mins, const FaceSet& cand) {
    for (const FaceSet& t : mins)
        if (t.subset_of(cand)) return;
    mins.erase(std::remove_if(mins.begin(), mins.end(),
                              [&](const FaceSet& t) { return cand.subset_of(t); }),
               mins.end());
    mins.push_back(cand);
}

}  // namespace

NonfaceFamily minimal_nonfaces(const FacetFamily& f) {
    constexpr size_t kMaxIntermediate = 500000;
    std::vector<FaceSet> hyperedges;
    for (const FaceSet& facet : f.facets) {
        FaceSet h = facet.complement(f.w);
        if (h.empty()) return NonfaceFamily::from_sets(f.w, {});  // facet = W
        hyperedges.push_back(h);
    }
    // Berge multiplication: cross the running minimal transversals with each
    // hyperedge, minimizing after every step.
    std::vector<FaceSet> trans{FaceSet{}};
    for (const FaceSet& h : hyperedges) {
        std::vector<FaceSet> next;
        for (const FaceSet& t : trans) {
            if (t.intersects(h)) {
                insert_minimal(next, t);
                continue;
            }
            for (int x : h.elements()) insert_minimal(next, t.unite(FaceSet{x}));
        }
        if (next.size() > kMaxIntermediate)
            throw GuardExceeded("minimal_nonfaces: transversal blowup");
        trans = std::move(next);
    }
    std::sort(trans.begin(), trans.end());
    return NonfaceFamily::from_sets(f.w, std::move(trans));
}

namespace {

void faces_rec(const std::vector<FaceSet>& facets, int k, FaceSet& prefix,
               std::vector<FaceSet>& out) {
    if (k == 0) {
        out.push_back(prefix);
        return;
    }
    int max_size = 0;
    int pivot = 0;
    for (const FaceSet& f : facets) {
        max_size = std::max(max_size, f.size());
        if (!f.empty() && (pivot == 0 || f.elements()[0] < pivot))
            pivot = f.elements()[0];
    }
    if (k > max_size) return;
    // Branch "pivot in X": faces of {F ∖ pivot : pivot ∈ F}, size k-1.
    FaceSet u{pivot};
    std::vector<FaceSet> with;
    for (const FaceSet& f : facets)
        if (f.contains(pivot)) with.push_back(f.minus(u));
    prefix = prefix.unite(u);
    faces_rec(antichain_reduce(with), k - 1, prefix, out);
    prefix = prefix.minus(u);
    // Branch "pivot not in X": delete the pivot everywhere.
    std::vector<FaceSet> without;
    for (const FaceSet& f : facets) without.push_back(f.minus(u));
    faces_rec(antichain_reduce(without), k, prefix, out);
}

}  // namespace

std::vector<FaceSet> faces_of_size(const FacetFamily& f, int k) {
    if (k < 0 || k > f.w)
        throw std::invalid_argument("faces_of_size: k out of range");
    std::vector<FaceSet> out;
    FaceSet prefix;
    faces_rec(f.facets, k, prefix, out);
    return out;
}

}  // namespace rowcomplex

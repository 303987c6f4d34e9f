#pragma once

// Shared helpers for the test suites: brute-force expansion of rows and
// partitions over small ground sets, oracle face enumeration straight from
// the definitions, and random instance generators. Everything here is
// independent of the splitting engine it is used to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "rowcomplex/complex.hpp"
#include "rowcomplex/row.hpp"
#include "rowcomplex/split.hpp"

namespace testsupport {

using rowcomplex::FaceSet;
using rowcomplex::FacetFamily;
using rowcomplex::Partition;
using rowcomplex::Row;
using rowcomplex::RowKind;

/// All members of a row as bitmasks, by filtering the whole powerset
/// through Row::contains. Only sensible for small widths.
inline std::vector<std::uint64_t> expand_row(const Row& r) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << r.width()); ++x)
        if (r.contains(FaceSet::from_mask(x, r.width()))) out.push_back(x);
    return out;
}

/// Union of the row expansions, without deduplication: a valid partition
/// must not produce the same mask twice.
inline std::vector<std::uint64_t> expand_rows(const std::vector<Row>& rows) {
    std::vector<std::uint64_t> all;
    for (const Row& r : rows)
        for (std::uint64_t x : expand_row(r)) all.push_back(x);
    std::sort(all.begin(), all.end());
    return all;
}

inline bool has_duplicates(const std::vector<std::uint64_t>& sorted) {
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

/// Faces of the complex straight from the definition.
inline std::vector<std::uint64_t> oracle_faces(const FacetFamily& f) {
    std::vector<std::uint64_t> masks;
    for (const FaceSet& facet : f.facets) masks.push_back(facet.to_mask());
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << f.w); ++x)
        for (std::uint64_t fm : masks)
            if ((x & fm) == x) {
                out.push_back(x);
                break;
            }
    return out;
}

inline std::vector<std::uint64_t> sorted(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

/// A normalized random row: symbols drawn per position, singleton bubbles
/// promoted away by construction.
inline Row random_row(std::mt19937& rng, int w, RowKind kind) {
    std::uniform_int_distribution<int> nbubbles(0, 3);
    int t = nbubbles(rng);
    std::uniform_int_distribution<int> sym(0, 2 + t);
    std::vector<int> symbols(static_cast<size_t>(w));
    for (int& s : symbols) s = sym(rng);
    return *Row::from_symbols(kind, std::move(symbols)).normalized();
}

inline FaceSet random_subset(std::mt19937& rng, int w, double p = 0.4) {
    std::bernoulli_distribution take(p);
    std::vector<int> elems;
    for (int i = 1; i <= w; ++i)
        if (take(rng)) elems.push_back(i);
    if (elems.empty()) {
        std::uniform_int_distribution<int> any(1, w);
        elems.push_back(any(rng));
    }
    return FaceSet(std::move(elems));
}

inline FacetFamily random_family(std::mt19937& rng, int w, int h) {
    std::vector<FaceSet> facets;
    for (int i = 0; i < h; ++i) facets.push_back(random_subset(rng, w));
    return FacetFamily::from_sets(w, std::move(facets));
}

}  // namespace testsupport

#include "rowcomplex/count.hpp"

#include <cstdint>
#include <stdexcept>
#include <thread>

#include "rowcomplex/partition.hpp"

namespace rowcomplex {

namespace {

// Sum of per-row size histograms, optionally spread over worker threads.
// Exact integer addition commutes, so the result is thread-count invariant.
CountVector histogram_sum(const std::vector<Row>& rows, int w, int threads) {
    if (threads < 2 || rows.size() < 64) {
        CountVector total(static_cast<size_t>(w) + 1);
        for (const Row& r : rows) {
            CountVector h = r.size_histogram(w);
            for (int k = 0; k <= w; ++k) total[k] += h[k];
        }
        return total;
    }
    int n = std::min<int>(threads, static_cast<int>(rows.size()));
    std::vector<CountVector> parts(n, CountVector(static_cast<size_t>(w) + 1));
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) {
        pool.emplace_back([&, t] {
            for (size_t i = t; i < rows.size(); i += n) {
                CountVector h = rows[i].size_histogram(w);
                for (int k = 0; k <= w; ++k) parts[t][k] += h[k];
            }
        });
    }
    for (auto& th : pool) th.join();
    CountVector total(static_cast<size_t>(w) + 1);
    for (const CountVector& p : parts)
        for (int k = 0; k <= w; ++k) total[k] += p[k];
    return total;
}

}  // namespace

CountVector transversal_counts(const FacetFamily& f, int threads) {
    std::vector<Constraint> cs;
    for (const FaceSet& facet : f.facets) {
        FaceSet h = facet.complement(f.w);
        if (h.empty())  // a facet equal to W: there are no transversals
            return CountVector(static_cast<size_t>(f.w) + 1);
        cs.push_back(Constraint::transversal(std::move(h)));
    }
    Partition p = impose_all(f.w, RowKind::E,
                             {Row::full_cube(RowKind::E, f.w)}, cs);
    return histogram_sum(p.rows, f.w, threads);
}

CountVector face_numbers(const FacetFamily& f, int threads) {
    CountVector tau = transversal_counts(f, threads);
    CountVector binom = binomial_row(f.w);
    CountVector out(static_cast<size_t>(f.w) + 1);
    out[0] = 1;
    for (int k = 1; k <= f.w; ++k) out[k] = binom[k] - tau[k];
    return out;
}

namespace {

void ie_rec(const std::vector<std::uint64_t>& masks, size_t from,
            std::uint64_t inter, bool positive, BigInt& total) {
    for (size_t j = from; j < masks.size(); ++j) {
        std::uint64_t ni = inter & masks[j];
        BigInt term = pow2(__builtin_popcountll(ni));
        if (positive)
            total += term;
        else
            total -= term;
        ie_rec(masks, j + 1, ni, !positive, total);
    }
}

void ie_rec_sets(const std::vector<FaceSet>& facets, size_t from,
                 const FaceSet& inter, bool positive, BigInt& total) {
    for (size_t j = from; j < facets.size(); ++j) {
        FaceSet ni = inter.intersect(facets[j]);
        BigInt term = pow2(ni.size());
        if (positive)
            total += term;
        else
            total -= term;
        ie_rec_sets(facets, j + 1, ni, !positive, total);
    }
}

}  // namespace

BigInt inclusion_exclusion_count(const FacetFamily& f) {
    if (static_cast<int>(f.facets.size()) > 25)
        throw GuardExceeded("inclusion_exclusion_count: more than 25 facets");
    BigInt total = 0;
    if (f.w <= 63) {
        std::vector<std::uint64_t> masks;
        for (const FaceSet& facet : f.facets) masks.push_back(facet.to_mask());
        std::uint64_t full = f.w == 63 ? ~std::uint64_t{0} >> 1
                                       : (std::uint64_t{1} << f.w) - 1;
        ie_rec(masks, 0, full, true, total);
    } else {
        FaceSet full = FaceSet{}.complement(f.w);
        ie_rec_sets(f.facets, 0, full, true, total);
    }
    return total;
}

Partition nonzero_term_partition(const NonfaceFamily& irrelevant) {
    return partition_from_nonfaces(irrelevant);
}

BigInt symmetric_inclusion_exclusion(const BigInt& n0,
                                     const std::map<int, BigInt>& g,
                                     const CountVector& f, int m) {
    if (m < 0) throw std::invalid_argument("symmetric ie: negative m");
    if (static_cast<int>(f.size()) < m + 1)
        throw std::invalid_argument("symmetric ie: f too short");
    for (int k = 0; k <= m; ++k)
        if (!g.count(k))
            throw std::invalid_argument("symmetric ie: g missing entry " +
                                        std::to_string(k));
    BigInt n = n0;
    for (int k = 1; k <= m; ++k) {
        BigInt term = g.at(k) * f[k];
        if (k % 2)
            n -= term;
        else
            n += term;
    }
    return n;
}

}  // namespace rowcomplex

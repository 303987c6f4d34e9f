#include "rowcomplex/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace rowcomplex {

Partition partition_from_facets(const FacetFamily& f) {
    Partition out{f.w, RowKind::E, {}};
    out.rows.push_back(Row::powerset(RowKind::E, f.w, f.facets[0]));
    std::vector<Constraint> cs;
    for (size_t p = 1; p < f.facets.size(); ++p) {
        // Disjointness from P(F_i) means X ∩ (W∖F_i) ≠ ∅, imposed for
        // i = 1..p in order.
        cs.push_back(
            Constraint::transversal(f.facets[p - 1].complement(f.w)));
        Partition piece =
            impose_all(f.w, RowKind::E,
                       {Row::powerset(RowKind::E, f.w, f.facets[p])}, cs);
        for (Row& r : piece.rows) out.rows.push_back(std::move(r));
    }
    return out;
}

Partition partition_from_nonfaces(const NonfaceFamily& g) {
    std::vector<Constraint> cs;
    for (const FaceSet& gen : g.generators)
        cs.push_back(Constraint::noncover(gen));
    return impose_all(g.w, RowKind::N, {Row::full_cube(RowKind::N, g.w)}, cs);
}

namespace {

long long row_max(const Row& r, const Weights& weights, FaceSet* witness) {
    long long value = 0;
    std::vector<int> take;
    for (int pos = 1; pos <= r.width(); ++pos) {
        if (r.is_one(pos)) {
            value += weights[pos - 1];
            take.push_back(pos);
        } else if (r.is_two(pos) && weights[pos - 1] > 0) {
            value += weights[pos - 1];
            take.push_back(pos);
        }
    }
    for (const FaceSet& b : r.bubbles()) {
        long long pos_sum = 0;
        bool any_positive = false;
        int best_pos = 0;
        long long best = 0;
        for (int e : b.elements()) {
            long long we = weights[e - 1];
            if (we > 0) {
                any_positive = true;
                pos_sum += we;
            }
            if (best_pos == 0 || we > best) {
                best_pos = e;
                best = we;
            }
        }
        if (any_positive) {
            value += pos_sum;
            for (int e : b.elements())
                if (weights[e - 1] > 0) take.push_back(e);
        } else {
            value += best;
            take.push_back(best_pos);
        }
    }
    if (witness) *witness = FaceSet(std::move(take));
    return value;
}

}  // namespace

MaxResult maximize(const Partition& p, const Weights& weights) {
    if (p.rows.empty())
        throw std::invalid_argument("maximize: empty partition");
    if (static_cast<int>(weights.size()) != p.w)
        throw std::invalid_argument("maximize: weights size != w");
    if (p.kind == RowKind::N) {
        Partition flipped_p{p.w, RowKind::E, {}};
        for (const Row& r : p.rows) flipped_p.rows.push_back(r.complemented());
        Weights neg(weights.size());
        long long total = 0;
        for (size_t i = 0; i < weights.size(); ++i) {
            total += weights[i];
            neg[i] = -weights[i];
        }
        MaxResult sub = maximize(flipped_p, neg);
        return {total + sub.value, sub.witness.complement(p.w)};
    }
    MaxResult best;
    bool first = true;
    for (const Row& r : p.rows) {
        long long value = row_max(r, weights, nullptr);
        if (first || value > best.value) {
            first = false;
            best.value = value;
            row_max(r, weights, &best.witness);
        }
    }
    return best;
}

namespace {

// {Y ∈ r : Y ∩ X = ∅} as a row, or nothing.
std::optional<Row> disjoint_part(const Row& r, const FaceSet& x) {
    if (r.ones().intersects(x)) return std::nullopt;
    for (const FaceSet& b : r.bubbles())
        if (b.subset_of(x)) return std::nullopt;
    Row cur = r;
    for (int pos : x.elements()) cur = *cur.with_zero(pos);
    return cur;
}

// {Z∖X : Z ∈ r, X ⊆ Z} as a row over the same width, X positions masked
// to 0, or nothing.
std::optional<Row> minus_part(const Row& r, const FaceSet& x) {
    if (r.zeros().intersects(x)) return std::nullopt;
    Row cur = r;
    for (int pos : x.elements()) cur = *cur.with_one(pos);
    // Reindex from Z to Z∖X: the forced ones become zeros.
    std::vector<int> syms;
    syms.reserve(cur.width());
    for (int pos = 1; pos <= cur.width(); ++pos) syms.push_back(cur.symbol(pos));
    for (int pos : x.elements()) syms[pos - 1] = 0;
    return Row::from_symbols(cur.kind(), std::move(syms));
}

}  // namespace

LinkTrace link_of_face(const Partition& p, const FacetFamily& f,
                       const FaceSet& x) {
    if (p.kind != RowKind::E)
        throw std::invalid_argument("link_of_face: kind E partition required");
    if (x.max_element() > f.w)
        throw std::invalid_argument("link_of_face: face out of range");
    if (!is_face(f, x))
        throw std::invalid_argument("link_of_face: X is not a face");
    LinkTrace trace;
    for (const Row& r : p.rows)
        if (auto d = disjoint_part(r, x)) trace.disjoint.push_back(*d);
    for (const Row& r : p.rows)
        if (auto m = minus_part(r, x)) trace.minus.push_back(*m);
    trace.link.w = p.w;
    trace.link.kind = RowKind::E;
    for (const Row& rho : trace.disjoint) {
        for (const Row& sigma : trace.minus) {
            std::vector<Row> piece = intersect_rows(rho, sigma);
            if (piece.empty()) {
                ++trace.empty_pairs;
                continue;
            }
            for (Row& r : piece) trace.link.rows.push_back(std::move(r));
        }
    }
    return trace;
}

Partition link_via_facets(const FacetFamily& f, const FaceSet& x) {
    std::vector<FaceSet> link_facets;
    for (const FaceSet& facet : f.facets)
        if (x.subset_of(facet)) link_facets.push_back(facet.minus(x));
    if (link_facets.empty())
        throw std::invalid_argument("link_via_facets: X is not a face");
    return partition_from_facets(FacetFamily::from_sets(f.w, link_facets));
}

}  // namespace rowcomplex

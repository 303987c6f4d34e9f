#include "rowcomplex/split.hpp"

#include <stdexcept>
#include <utility>

namespace rowcomplex {

Constraint Constraint::transversal(FaceSet h) {
    if (h.empty())
        throw std::invalid_argument("transversal constraint: empty set");
    return {Kind::Transversal, std::move(h)};
}

Constraint Constraint::noncover(FaceSet g) {
    if (g.empty()) throw std::invalid_argument("noncover constraint: empty set");
    return {Kind::Noncover, std::move(g)};
}

BigInt Partition::total_cardinality() const {
    BigInt n = 0;
    for (const Row& r : rows) n += r.cardinality();
    return n;
}

CountVector Partition::size_histogram(int upto) const {
    CountVector out(static_cast<size_t>(upto) + 1);
    for (const Row& r : rows) {
        CountVector h = r.size_histogram(upto);
        for (int k = 0; k <= upto; ++k) out[k] += h[k];
    }
    return out;
}

namespace {

// Appends the disjoint refinement of {X in r : X ∩ h ≠ ∅} to out. One son
// per bubble overlapping h properly (in ascending id), then one for the free
// positions; each son satisfies the constraint through its own pivot set, so
// the sons are pairwise disjoint.
void impose_transversal_into(const Row& r, const FaceSet& h,
                             std::vector<Row>& out) {
    if (r.ones().intersects(h)) {
        out.push_back(r);
        return;
    }
    for (int id = 1; id <= r.bubble_count(); ++id) {
        if (r.bubble(id).subset_of(h)) {
            out.push_back(r);
            return;
        }
    }
    for (int id = 1; id <= r.bubble_count(); ++id) {
        const FaceSet& b = r.bubble(id);
        FaceSet overlap = b.intersect(h);
        if (overlap.empty()) continue;
        // Proper overlap: son+ keeps exactly the overlap as the bubble and
        // frees the rest, son- zeroes the overlap and splits further.
        // normalized() promotes the singletons either side may leave.
        FaceSet rest = b.minus(overlap);
        std::vector<int> plus_syms, minus_syms;
        plus_syms.reserve(r.width());
        minus_syms.reserve(r.width());
        for (int pos = 1; pos <= r.width(); ++pos) {
            int s = r.symbol(pos);
            plus_syms.push_back(s);
            minus_syms.push_back(s);
        }
        for (int e : rest.elements()) plus_syms[e - 1] = 2;
        for (int e : overlap.elements()) minus_syms[e - 1] = 0;
        out.push_back(*Row::from_symbols(r.kind(), std::move(plus_syms))
                           .normalized());
        impose_transversal_into(
            *Row::from_symbols(r.kind(), std::move(minus_syms)).normalized(),
            h, out);
        return;
    }
    // Only free positions of h are left; they become one fresh bubble
    // ("at least one 1 here"), or a fixed 1 when there is a single one.
    FaceSet free = r.twos().intersect(h);
    if (free.empty()) return;
    if (free.size() == 1) {
        out.push_back(*r.with_one(free.elements()[0]));
        return;
    }
    std::vector<int> syms;
    syms.reserve(r.width());
    for (int pos = 1; pos <= r.width(); ++pos) syms.push_back(r.symbol(pos));
    int fresh = Row::bubble_symbol(r.bubble_count() + 1);
    for (int e : free.elements()) syms[e - 1] = fresh;
    out.push_back(Row::from_symbols(r.kind(), std::move(syms)));
}

}  // namespace

std::vector<Row> impose_transversal(const Row& r, const FaceSet& h) {
    if (r.kind() != RowKind::E)
        throw std::invalid_argument("impose_transversal: kind E required");
    if (h.empty() || h.max_element() > r.width())
        throw std::invalid_argument("impose_transversal: bad constraint set");
    std::vector<Row> out;
    impose_transversal_into(r, h, out);
    return out;
}

std::vector<Row> impose_noncover(const Row& r, const FaceSet& g) {
    if (r.kind() != RowKind::N)
        throw std::invalid_argument("impose_noncover: kind N required");
    std::vector<Row> sons = impose_transversal(r.complemented(), g);
    for (Row& s : sons) s = s.complemented();
    return sons;
}

Partition impose_all(int w, RowKind kind, const std::vector<Row>& start,
                     const std::vector<Constraint>& constraints) {
    Constraint::Kind expected = kind == RowKind::E
                                    ? Constraint::Kind::Transversal
                                    : Constraint::Kind::Noncover;
    for (const Constraint& c : constraints) {
        if (c.kind != expected)
            throw std::invalid_argument(
                "impose_all: constraint kind does not match row kind");
        if (c.set.max_element() > w)
            throw std::invalid_argument("impose_all: constraint out of range");
    }
    for (const Row& r : start) {
        if (r.width() != w || r.kind() != kind)
            throw std::invalid_argument("impose_all: start row mismatch");
    }

    Partition result{w, kind, {}};
    // Depth-first work stack; sons are pushed in reverse so that the first
    // son of a split comes out first and the final rows keep split order.
    std::vector<std::pair<Row, size_t>> work;
    for (auto it = start.rbegin(); it != start.rend(); ++it)
        work.emplace_back(*it, 0);
    while (!work.empty()) {
        auto [row, next] = std::move(work.back());
        work.pop_back();
        if (next == constraints.size()) {
            result.rows.push_back(std::move(row));
            continue;
        }
        const Constraint& c = constraints[next];
        std::vector<Row> sons = c.kind == Constraint::Kind::Transversal
                                    ? impose_transversal(row, c.set)
                                    : impose_noncover(row, c.set);
        for (auto it = sons.rbegin(); it != sons.rend(); ++it)
            work.emplace_back(std::move(*it), next + 1);
    }
    return result;
}

std::vector<Row> intersect_rows(const Row& a, const Row& b) {
    if (a.width() != b.width())
        throw std::invalid_argument("intersect_rows: width mismatch");
    if (a.kind() != b.kind())
        throw std::invalid_argument("intersect_rows: kind mismatch");
    if (a.kind() == RowKind::N) {
        std::vector<Row> rows = intersect_rows(a.complemented(), b.complemented());
        for (Row& r : rows) r = r.complemented();
        return rows;
    }
    int w = a.width();
    // Merge the fixed skeletons; bubbles are replayed as constraints below.
    std::vector<int> syms(static_cast<size_t>(w), 2);
    for (int pos = 1; pos <= w; ++pos) {
        int sa = a.symbol(pos) > 2 ? 2 : a.symbol(pos);
        int sb = b.symbol(pos) > 2 ? 2 : b.symbol(pos);
        if (sa == 2) {
            syms[pos - 1] = sb;
        } else if (sb == 2 || sb == sa) {
            syms[pos - 1] = sa;
        } else {
            return {};  // 0 against 1
        }
    }
    std::vector<Constraint> cs;
    for (const FaceSet& bub : a.bubbles())
        cs.push_back(Constraint::transversal(bub));
    for (const FaceSet& bub : b.bubbles())
        cs.push_back(Constraint::transversal(bub));
    Row skeleton = Row::from_symbols(RowKind::E, std::move(syms));
    return impose_all(w, RowKind::E, {skeleton}, cs).rows;
}

}  // namespace rowcomplex

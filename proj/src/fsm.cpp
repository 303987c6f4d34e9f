#include "rowcomplex/fsm.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rowcomplex/count.hpp"

namespace rowcomplex {
namespace fsm {

Database Database::from_sets(int w, std::vector<FaceSet> transactions) {
    if (w < 1) throw std::invalid_argument("Database: w must be >= 1");
    if (transactions.empty())
        throw std::invalid_argument("Database: at least one transaction");
    for (const FaceSet& t : transactions)
        if (t.max_element() > w)
            throw std::invalid_argument("Database: transaction exceeds ground set");
    return Database{w, std::move(transactions)};
}

BigInt FrequencyTable::at_least(int s, int k) const {
    BigInt n = 0;
    for (int t = std::max(s, 0); t <= m; ++t) n += fr[t][k];
    return n;
}

BigInt FrequencyTable::row_sum(int s) const {
    BigInt n = 0;
    for (int k = 1; k <= w; ++k) n += fr[s][k];
    return n;
}

FacetFamily frequent_facets(const Database& d, int s) {
    int m = d.size();
    if (s < 1 || s > m)
        throw std::invalid_argument("frequent_facets: s out of 1..m");
    if (binomial(m, s) > 1000000)
        throw GuardExceeded("frequent_facets: too many transaction subsets");
    // Every s+-frequent set lies under the intersection of some s
    // transactions; collect the maximal intersections.
    std::set<FaceSet> seen;
    std::vector<int> idx(static_cast<size_t>(s));
    for (int i = 0; i < s; ++i) idx[i] = i;
    while (true) {
        FaceSet inter = d.transactions[idx[0]];
        for (int i = 1; i < s; ++i)
            inter = inter.intersect(d.transactions[idx[i]]);
        seen.insert(std::move(inter));
        int i = s - 1;
        while (i >= 0 && idx[i] == m - s + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    return FacetFamily::from_sets(
        d.w, std::vector<FaceSet>(seen.begin(), seen.end()));
}

FrequencyTable frequency_table(const Database& d, int threads) {
    int m = d.size();
    FrequencyTable t;
    t.w = d.w;
    t.m = m;
    std::vector<CountVector> plus(static_cast<size_t>(m) + 2,
                                  CountVector(static_cast<size_t>(d.w) + 1));
    for (int s = 1; s <= m; ++s)
        plus[s] = face_numbers(frequent_facets(d, s), threads);
    CountVector binom = binomial_row(d.w);
    t.fr.assign(static_cast<size_t>(m) + 1,
                CountVector(static_cast<size_t>(d.w) + 1));
    for (int k = 0; k <= d.w; ++k)
        t.fr[0][k] = binom[k] - plus[1][k];
    for (int s = 1; s <= m; ++s)
        for (int k = 0; k <= d.w; ++k)
            t.fr[s][k] = plus[s][k] - plus[s + 1][k];
    return t;
}

ProbabilityResult probability(const FrequencyTable& t,
                              const ProbabilityQuery& q) {
    if (q.s < 0 || q.s > t.m)
        throw std::invalid_argument("probability: s out of range");
    if (q.k < 0 || q.k > t.w)
        throw std::invalid_argument("probability: k out of range");
    BigInt num = 0, den = 0;
    switch (q.form) {
        case ProbabilityQuery::Form::FrequentGivenSize:
            num = t.at_least(q.s, q.k);
            den = binomial(t.w, q.k);
            break;
        case ProbabilityQuery::Form::SizeGivenFrequent:
            num = t.at_least(q.s, q.k);
            for (int j = 1; j <= t.w; ++j) den += t.at_least(q.s, j);
            break;
        case ProbabilityQuery::Form::ExactGivenFrequent:
            for (int j = std::max(q.k, 1); j <= t.w; ++j) {
                num += t.fr[q.s][j];
                den += t.at_least(q.s, j);
            }
            break;
    }
    if (den == 0) return {false, Rational(0)};
    return {true, Rational(num, den)};
}

FaceSet closure(const Database& d, int s, const FaceSet& x) {
    if (s < 1 || s > d.size())
        throw std::invalid_argument("closure: s out of 1..m");
    if (x.max_element() > d.w)
        throw std::invalid_argument("closure: set exceeds ground set");
    std::vector<const FaceSet*> supp;
    for (const FaceSet& t : d.transactions)
        if (x.subset_of(t)) supp.push_back(&t);
    if (static_cast<int>(supp.size()) < s) return FaceSet{}.complement(d.w);
    FaceSet inter = *supp[0];
    for (size_t i = 1; i < supp.size(); ++i) inter = inter.intersect(*supp[i]);
    return inter;
}

std::vector<FaceSet> closed_sets(const Database& d, int s) {
    FaceSet full = FaceSet{}.complement(d.w);
    std::vector<FaceSet> out;
    FaceSet a = closure(d, s, FaceSet{});
    while (true) {
        if (a == full) break;
        out.push_back(a);
        // Next-closure: the lectically next closed set after a.
        bool found = false;
        for (int i = d.w; i >= 1 && !found; --i) {
            if (a.contains(i)) continue;
            std::vector<int> below;
            for (int e : a.elements())
                if (e < i) below.push_back(e);
            below.push_back(i);
            FaceSet cand = closure(d, s, FaceSet(std::move(below)));
            bool ok = true;
            for (int e : cand.elements()) {
                if (e >= i) break;
                if (!a.contains(e)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                a = cand;
                found = true;
            }
        }
        if (!found) break;
    }
    return out;
}

Partition support_class_partition(const Database& d, int s, const FaceSet& y) {
    if (y.max_element() > d.w)
        throw std::invalid_argument("support_class_partition: set exceeds w");
    FaceSet full = FaceSet{}.complement(d.w);
    if (y == full || closure(d, s, y) != y)
        throw std::invalid_argument("support_class_partition: Y is not closed");
    // Lower covers of Y: the maximal closed proper subsets.
    std::vector<FaceSet> proper;
    for (const FaceSet& z : closed_sets(d, s))
        if (z != y && z.subset_of(y)) proper.push_back(z);
    std::vector<Constraint> cs;
    for (size_t i = 0; i < proper.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < proper.size() && maximal; ++j)
            if (i != j && proper[i].subset_of(proper[j])) maximal = false;
        if (maximal) cs.push_back(Constraint::transversal(y.minus(proper[i])));
    }
    return impose_all(d.w, RowKind::E, {Row::powerset(RowKind::E, d.w, y)}, cs);
}

}  // namespace fsm
}  // namespace rowcomplex

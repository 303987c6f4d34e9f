// Acceptance suite: one line per criterion, PASS or FAIL with detail.
// Returns the number of failed criteria.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rowcomplex/algebra.hpp"
#include "rowcomplex/cli.hpp"
#include "rowcomplex/count.hpp"
#include "rowcomplex/fsm.hpp"
#include "rowcomplex/io.hpp"
#include "rowcomplex/partition.hpp"
#include "support.hpp"

using namespace rowcomplex;
using namespace testsupport;

namespace {

const std::string kFixtures = FIXTURES_DIR;

struct Check {
    bool ok = true;
    std::ostringstream detail;

    template <typename A, typename B>
    void equal(const A& got, const B& want, const std::string& what) {
        if (!(got == want)) {
            ok = false;
            detail << "  " << what << ": got " << got << ", want " << want
                   << "\n";
        }
    }
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << "  " << what << "\n";
        }
    }
};

FacetFamily sc_prime() {
    SetFile f = load_set_file(kFixtures + "/sc_prime.facets");
    return FacetFamily::from_sets(f.w, std::move(f.sets));
}

fsm::Database table6() {
    SetFile f = load_set_file(kFixtures + "/table6.txn");
    return fsm::Database::from_sets(f.w, std::move(f.sets));
}

std::string run_cli(std::vector<std::string> args, int* code = nullptr) {
    std::ostringstream out, err;
    int c = cli::run(args, out, err);
    if (code) *code = c;
    return out.str();
}

// 1. count == 7600 on all three routes; tau total 8784; 7600 + 8784 = 2^14.
bool criterion1(Check& c) {
    std::string facets = kFixtures + "/sc_prime.facets";
    for (std::string route : {"ie", "partition", "fvector"})
        c.equal(run_cli({"count", facets, "--route", route}),
                std::string("7600\n"), "count --route " + route);
    CountVector tau = transversal_counts(sc_prime());
    BigInt tau_total = 0;
    for (const BigInt& t : tau) tau_total += t;
    c.equal(tau_total, BigInt(8784), "sum of tau_k");
    c.equal(BigInt(7600) + tau_total, pow2(14), "7600 + 8784 = 2^14");
    return c.ok;
}

// 2. f-vector and tau values match the reference values entry for entry.
bool criterion2(Check& c) {
    CountVector fv = face_numbers(sc_prime());
    CountVector expect{1,   14,  91, 364, 935, 1583, 1832, 1487,
                       851, 338, 89, 14,  1,   0,    0};
    for (int k = 0; k <= 14; ++k)
        c.equal(fv[k], expect[k], "f_" + std::to_string(k));
    CountVector tau = transversal_counts(sc_prime());
    c.equal(tau[4], BigInt(66), "tau_4");
    c.equal(tau[5], BigInt(419), "tau_5");
    return c.ok;
}

// 3. The facet partition is exactly the seven reference rows, and its
// expansion is exactly the face set.
bool criterion3(Check& c) {
    FacetFamily f = sc_prime();
    Partition p = partition_from_facets(f);
    std::vector<std::string> rows{
        "2 2 0 0 2 2 2 2 0 2 2 2 2 2",
        "2 2 e1 e1 0 2 2 2 e1 0 2 2 2 2",
        "2 2 e1 e1 e2 0 0 2 e1 e2 0 0 2 2",
        "2 2 e1 e1 e2 e3 e3 0 e1 e2 e3 e3 0 0",
        "0 0 0 0 0 0 0 0 1 1 e1 e1 e2 e2",
        "2 2 0 0 0 e1 e1 0 1 1 2 0 0 1",
        "e1 e1 0 0 0 0 0 0 1 1 1 0 0 1"};
    std::vector<BigInt> cards{2048, 3584, 672, 1260, 9, 24, 3};
    c.equal(p.rows.size(), rows.size(), "row count");
    for (size_t i = 0; i < rows.size() && i < p.rows.size(); ++i) {
        c.equal(p.rows[i].render(), rows[i], "row " + std::to_string(i + 1));
        c.equal(p.rows[i].cardinality(), cards[i],
                "|row " + std::to_string(i + 1) + "|");
    }
    auto got = expand_rows(p.rows);
    c.require(!has_duplicates(got), "rows are pairwise disjoint");
    c.require(got == sorted(oracle_faces(f)),
              "expansion equals the brute-force face set");
    return c.ok;
}

// 4. 74 minimal non-faces; the noncover partition over them totals 7600.
bool criterion4(Check& c) {
    NonfaceFamily g = minimal_nonfaces(sc_prime());
    c.equal(g.generators.size(), size_t{74}, "generator count");
    Partition p = partition_from_nonfaces(g);
    c.equal(p.total_cardinality(), BigInt(7600), "noncover partition total");
    return c.ok;
}

// 5. The worked optimization example, then 200 random pairs against
// exhaustive search.
bool criterion5(Check& c) {
    Partition p{15, RowKind::E,
                {Row::parse("0 0 1 1 2 2 2 2 e1 e1 e1 e1 e2 e2 e2",
                            RowKind::E)}};
    Weights weights{8, 5, -6, -2, 3, -5, -7, 8, -4, -2, 5, 4, -10, -8, -9};
    MaxResult r = maximize(p, weights);
    c.equal(r.value, 4LL, "mu of the worked row");
    c.equal(r.witness.to_string(), std::string("{3,4,5,8,11,12,14}"),
            "witness of the worked row");

    std::mt19937 rng(20240917);
    std::uniform_int_distribution<long long> weight(-10, 10);
    for (int iter = 0; iter < 200; ++iter) {
        int w = 2 + iter % 11;  // w <= 12
        RowKind kind = iter % 2 ? RowKind::E : RowKind::N;
        Row row = random_row(rng, w, kind);
        Weights ws(static_cast<size_t>(w));
        for (auto& x : ws) x = weight(rng);
        MaxResult got = maximize(Partition{w, kind, {row}}, ws);
        long long best = 0;
        bool first = true;
        for (std::uint64_t xm : expand_row(row)) {
            long long v = 0;
            for (int i = 0; i < w; ++i)
                if (xm & (std::uint64_t{1} << i)) v += ws[i];
            if (first || v > best) best = v;
            first = false;
        }
        if (got.value != best) {
            c.require(false, "exhaustive mismatch at iteration " +
                                 std::to_string(iter));
            return c.ok;
        }
        long long attained = 0;
        for (int e : got.witness.elements()) attained += ws[e - 1];
        c.require(attained == got.value && row.contains(got.witness),
                  "witness attains the value");
        if (!c.ok) return false;
    }
    return c.ok;
}

// 6. The link of {6,7,10,11}: 4 Disjoint rows, 3 Minus rows, 7 empty pairs,
// the five reference intersection rows, and the brute-force count.
bool criterion6(Check& c) {
    FacetFamily f = sc_prime();
    Partition p = partition_from_facets(f);
    FaceSet x{6, 7, 10, 11};
    LinkTrace t = link_of_face(p, f, x);
    c.equal(t.disjoint.size(), size_t{4}, "Disjoint row count");
    c.equal(t.minus.size(), size_t{3}, "Minus row count");
    c.equal(t.empty_pairs, 7, "empty intersections");
    std::vector<std::string> rows{
        "2 2 0 0 2 0 0 2 0 0 0 2 2 2",
        "2 2 e1 e1 0 0 0 0 e1 0 0 2 0 0",
        "2 2 0 0 0 0 0 0 1 0 0 0 0 1",
        "2 2 e1 e1 1 0 0 0 e1 0 0 0 0 0",
        "2 2 e1 e1 1 0 0 0 e1 0 0 1 0 0"};
    c.equal(t.link.rows.size(), rows.size(), "link row count");
    for (size_t i = 0; i < rows.size() && i < t.link.rows.size(); ++i)
        c.equal(t.link.rows[i].render(), rows[i],
                "link row " + std::to_string(i + 1));
    // Brute-force count straight from the definition.
    BigInt expect = 0;
    std::uint64_t xm = x.to_mask();
    for (std::uint64_t y : oracle_faces(f))
        if (!(y & xm) && is_face(f, FaceSet::from_mask(y | xm, 14))) ++expect;
    c.equal(t.link.total_cardinality(), expect, "link cardinality");
    return c.ok;
}

// 7. The frequency table, its marginals, and the three probabilities.
bool criterion7(Check& c) {
    fsm::FrequencyTable t = fsm::frequency_table(table6());
    const BigInt expect[8][9] = {
        {0, 2, 23, 69, 97, 76, 35, 9, 1}, {0, 13, 44, 53, 29, 8, 1, 0, 0},
        {2, 11, 12, 3, 0, 0, 0, 0, 0},    {2, 4, 4, 1, 0, 0, 0, 0, 0},
        {2, 6, 1, 0, 0, 0, 0, 0, 0},      {2, 0, 0, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, 0, 0, 0, 0, 0},      {0, 0, 0, 0, 0, 0, 0, 0, 0}};
    for (int s = 0; s <= 7; ++s)
        for (int k = 1; k <= 9; ++k)
            c.equal(t.fr[s][k], expect[s][k - 1],
                    "fr(" + std::to_string(s) + "," + std::to_string(k) + ")");
    const BigInt row_sums[8] = {312, 148, 28, 11, 9, 2, 1, 0};
    for (int s = 0; s <= 7; ++s)
        c.equal(t.row_sum(s), row_sums[s], "row sum s=" + std::to_string(s));
    for (int k = 1; k <= 9; ++k) {
        BigInt col = 0;
        for (int s = 0; s <= 7; ++s) col += t.fr[s][k];
        c.equal(col, binomial(9, k), "column sum k=" + std::to_string(k));
    }
    using Form = fsm::ProbabilityQuery::Form;
    auto r1 = fsm::probability(t, {Form::FrequentGivenSize, 2, 3});
    c.require(r1.defined && r1.value == Rational(17, 84),
              "P(2+-frequent | |X|=3) = 17/84");
    auto r2 = fsm::probability(t, {Form::SizeGivenFrequent, 2, 3});
    c.require(r2.defined && r2.value == Rational(17, 51),
              "P(|X|=3 | 2+-frequent) = 17/51");
    auto r3 = fsm::probability(t, {Form::ExactGivenFrequent, 2, 1});
    c.require(r3.defined && r3.value == Rational(28, 51),
              "P(2-frequent | 2+-frequent) = 28/51");
    return c.ok;
}

// 8. Five randomized property suites, 500 cases each, zero failures.
bool criterion8(Check& c) {
    std::mt19937 rng(8);

    // (a) Partition expansions equal the oracle face sets, no duplicates,
    // via facets and via minimal non-faces.
    for (int iter = 0; iter < 500 && c.ok; ++iter) {
        int w = 2 + iter % 11;
        FacetFamily f = random_family(rng, w, 1 + iter % 8);
        auto expect = sorted(oracle_faces(f));
        auto got = expand_rows(partition_from_facets(f).rows);
        c.require(!has_duplicates(got) && got == expect,
                  "facet partition mismatch at iteration " +
                      std::to_string(iter));
        auto got_n =
            expand_rows(partition_from_nonfaces(minimal_nonfaces(f)).rows);
        c.require(!has_duplicates(got_n) && got_n == expect,
                  "nonface partition mismatch at iteration " +
                      std::to_string(iter));
    }

    // (b) Per-size counts equal expansion histograms.
    for (int iter = 0; iter < 500 && c.ok; ++iter) {
        int w = 1 + iter % 12;
        Row r = random_row(rng, w, iter % 2 ? RowKind::E : RowKind::N);
        CountVector hist(static_cast<size_t>(w) + 1);
        for (std::uint64_t m : expand_row(r)) ++hist[__builtin_popcountll(m)];
        c.require(hist == r.size_histogram(w),
                  "size histogram mismatch at iteration " +
                      std::to_string(iter));
    }

    // (c) e/n duality through complementation.
    for (int iter = 0; iter < 500 && c.ok; ++iter) {
        int w = 2 + iter % 11;
        Row r = random_row(rng, w, RowKind::N);
        FaceSet g = random_subset(rng, w);
        std::set<std::uint64_t> expect;
        std::uint64_t full = (std::uint64_t{1} << w) - 1;
        for (const Row& s : impose_transversal(r.complemented(), g))
            for (std::uint64_t y : expand_row(s)) expect.insert(full & ~y);
        auto got = expand_rows(impose_noncover(r, g));
        c.require(!has_duplicates(got) &&
                      got == std::vector<std::uint64_t>(expect.begin(),
                                                        expect.end()),
                  "duality mismatch at iteration " + std::to_string(iter));
    }

    // (d) Row intersection against expanded set intersection.
    for (int iter = 0; iter < 500 && c.ok; ++iter) {
        int w = 2 + iter % 11;
        RowKind kind = iter % 2 ? RowKind::E : RowKind::N;
        Row a = random_row(rng, w, kind);
        Row b = random_row(rng, w, kind);
        std::set<std::uint64_t> ea;
        for (std::uint64_t y : expand_row(a)) ea.insert(y);
        std::vector<std::uint64_t> expect;
        for (std::uint64_t y : expand_row(b))
            if (ea.count(y)) expect.push_back(y);
        auto got = expand_rows(intersect_rows(a, b));
        c.require(!has_duplicates(got) && got == sorted(std::move(expect)),
                  "intersection mismatch at iteration " + std::to_string(iter));
    }

    // (e) Boundary maps square to zero; the reduced Euler characteristic
    // matches the alternating face-count sum.
    int primes[] = {2, 3, 5};
    for (int iter = 0; iter < 500 && c.ok; ++iter) {
        int w = 2 + iter % 7;
        FacetFamily f = random_family(rng, w, 1 + iter % 5);
        int p = primes[iter % 3];
        int d = f.max_facet_size();
        for (int k = 2; k <= d && c.ok; ++k) {
            auto a = boundary_matrix(f, k - 1, p);
            auto b = boundary_matrix(f, k, p);
            if (a.empty() || b.empty()) continue;
            for (size_t i = 0; i < a.size() && c.ok; ++i)
                for (size_t j = 0; j < b[0].size(); ++j) {
                    long long acc = 0;
                    for (size_t m = 0; m < b.size(); ++m)
                        acc += static_cast<long long>(a[i][m]) * b[m][j];
                    if (acc % p != 0) {
                        c.require(false, "delta o delta != 0 at iteration " +
                                             std::to_string(iter));
                        break;
                    }
                }
        }
        std::vector<int> dims = homology_dims(f, p);
        CountVector fv = fvector_bruteforce(f);
        BigInt lhs = 0;
        for (size_t i = 0; i < dims.size(); ++i)
            lhs += (i % 2 ? -1 : 1) * BigInt(dims[i]);
        BigInt rhs = 0;
        for (size_t k = 0; k < fv.size(); ++k)
            rhs += (k % 2 ? 1 : -1) * fv[k];
        c.require(lhs == rhs, "Euler characteristic mismatch at iteration " +
                                  std::to_string(iter));
    }
    return c.ok;
}

// 9. The random w=30, h=17, m=10 instance partitions and counts in under a
// minute; R and the times are informational.
bool criterion9(Check& c, std::string& info) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    int code = 0;
    std::string out = run_cli({"bench", "--random", "--w", "30", "--h", "17",
                               "--m", "10", "--seed", "20240917"},
                              &code);
    auto seconds =
        std::chrono::duration_cast<std::chrono::duration<double>>(clock::now() -
                                                                  t0)
            .count();
    c.equal(code, 0, "bench exit code");
    c.require(seconds < 60.0, "bench finished in " + std::to_string(seconds) +
                                  " s (limit 60)");
    std::ostringstream condensed;
    for (char ch : out)
        condensed << (ch == '\n' ? ' ' : ch);
    info = condensed.str();
    return c.ok;
}

int report(int n, const std::string& name, bool ok, const Check& c,
           const std::string& info = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << n << "  " << name;
    if (!info.empty()) std::cout << "  [" << info << "]";
    std::cout << "\n";
    if (!ok) std::cout << c.detail.str();
    return ok ? 0 : 1;
}

}  // namespace

int main() {
    int failures = 0;
    {
        Check c;
        bool ok = criterion1(c);
        failures += report(1, "cardinality triangle: 7600 by three routes, "
                              "8784 transversals, sums to 2^14", ok, c);
    }
    {
        Check c;
        bool ok = criterion2(c);
        failures += report(2, "f-vector and transversal counts match the "
                              "reference values", ok, c);
    }
    {
        Check c;
        bool ok = criterion3(c);
        failures += report(3, "facet partition reproduces the seven reference "
                              "rows and the exact face set", ok, c);
    }
    {
        Check c;
        bool ok = criterion4(c);
        failures += report(4, "74 minimal non-faces; noncover partition "
                              "totals 7600", ok, c);
    }
    {
        Check c;
        bool ok = criterion5(c);
        failures += report(5, "optimization: worked example plus 200 random "
                              "instances against exhaustive search", ok, c);
    }
    {
        Check c;
        bool ok = criterion6(c);
        failures += report(6, "link of {6,7,10,11} matches the reference "
                              "rows and the brute-force count", ok, c);
    }
    {
        Check c;
        bool ok = criterion7(c);
        failures += report(7, "frequency table, marginals and probabilities "
                              "are exact", ok, c);
    }
    {
        Check c;
        bool ok = criterion8(c);
        failures += report(8, "randomized property suites (5 x 500 cases)",
                           ok, c);
    }
    {
        Check c;
        std::string info;
        bool ok = criterion9(c, info);
        failures += report(9, "bench on random w=30 h=17 m=10 under 60 s",
                           ok, c, info);
    }
    if (failures)
        std::cout << failures << " criterion(s) failed\n";
    else
        std::cout << "all criteria passed\n";
    return failures;
}

#include "rowcomplex/cli.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "rowcomplex/algebra.hpp"
#include "rowcomplex/complex.hpp"
#include "rowcomplex/count.hpp"
#include "rowcomplex/fsm.hpp"
#include "rowcomplex/io.hpp"
#include "rowcomplex/partition.hpp"

namespace rowcomplex {
namespace cli {

namespace {

using nlohmann::json;

std::string str(const BigInt& n) { return n.str(); }

json to_json(const CountVector& v) {
    json a = json::array();
    for (const BigInt& n : v) a.push_back(str(n));
    return a;
}

json to_json(const FaceSet& s) {
    json a = json::array();
    for (int e : s.elements()) a.push_back(e);
    return a;
}

json to_json(const Partition& p) {
    json rows = json::array();
    for (const Row& r : p.rows) rows.push_back(r.render());
    return json{{"kind", p.kind == RowKind::E ? "E" : "N"},
                {"rows", rows},
                {"total", str(p.total_cardinality())},
                {"w", p.w}};
}

std::string decimal(const Rational& r) {
    double d = boost::multiprecision::numerator(r).convert_to<double>() /
               boost::multiprecision::denominator(r).convert_to<double>();
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << d;
    return out.str();
}

FacetFamily load_facets(const std::string& path, std::ostream& err) {
    SetFile file = load_set_file(path);
    bool reduced = false;
    FacetFamily f = FacetFamily::from_sets(file.w, std::move(file.sets), &reduced);
    if (reduced)
        err << "warning: facet list was not an antichain; reduced to "
            << f.facets.size() << " facets\n";
    return f;
}

NonfaceFamily load_generators(const std::string& path) {
    SetFile file = load_set_file(path);
    return NonfaceFamily::from_sets(file.w, std::move(file.sets));
}

fsm::Database load_transactions(const std::string& path) {
    SetFile file = load_set_file(path);
    return fsm::Database::from_sets(file.w, std::move(file.sets));
}

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

struct Options {
    bool as_json = false;
    int threads = 1;
};

void run_count(const std::string& path, const std::string& route,
               const Options& opt, std::ostream& out, std::ostream& err) {
    FacetFamily f = load_facets(path, err);
    BigInt count;
    json extra;
    if (route == "ie") {
        count = inclusion_exclusion_count(f);
    } else if (route == "partition") {
        count = partition_from_facets(f).total_cardinality();
    } else {
        CountVector tau = transversal_counts(f, opt.threads);
        BigInt tau_total = 0;
        for (const BigInt& t : tau) tau_total += t;
        count = pow2(f.w) - tau_total;
        extra["tau_total"] = str(tau_total);
    }
    if (opt.as_json) {
        json j{{"count", str(count)}, {"route", route}};
        for (auto& [k, v] : extra.items()) j[k] = v;
        emit(out, j);
    } else {
        out << count << "\n";
    }
}

void run_fvector(const FacetFamily& f, const CountVector& fv,
                 const Options& opt, std::ostream& out) {
    if (opt.as_json) {
        emit(out, json{{"f", to_json(fv)}, {"w", f.w}});
        return;
    }
    for (int k = 0; k <= f.w; ++k) out << k << " " << fv[k] << "\n";
}

void run_partition_dump(const Partition& p, const Options& opt,
                        std::ostream& out) {
    if (opt.as_json)
        emit(out, to_json(p));
    else
        out << format_partition(p);
}

void print_table(const fsm::FrequencyTable& t, std::ostream& out) {
    // Table layout: one row per frequency s, columns k = 1..w, then the row
    // sum; the last line holds the column sums C(w,k).
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{"s\\k"};
    for (int k = 1; k <= t.w; ++k) head.push_back(std::to_string(k));
    head.push_back("sum");
    cells.push_back(head);
    BigInt grand = 0;
    for (int s = 0; s <= t.m; ++s) {
        std::vector<std::string> row{std::to_string(s)};
        for (int k = 1; k <= t.w; ++k) row.push_back(str(t.fr[s][k]));
        BigInt rs = t.row_sum(s);
        grand += rs;
        row.push_back(str(rs));
        cells.push_back(std::move(row));
    }
    std::vector<std::string> foot{"C(w,k)"};
    for (int k = 1; k <= t.w; ++k) foot.push_back(str(binomial(t.w, k)));
    foot.push_back(str(grand));
    cells.push_back(std::move(foot));
    std::vector<size_t> width(cells[0].size(), 0);
    for (const auto& row : cells)
        for (size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    for (const auto& row : cells) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out << "  ";
            out << std::setw(static_cast<int>(width[i])) << row[i];
        }
        out << "\n";
    }
}

void run_bench(const FacetFamily& f, const Options& opt, std::ostream& out) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    Partition p = partition_from_facets(f);
    auto t1 = clock::now();
    CountVector fv = face_numbers(f, opt.threads);
    auto t2 = clock::now();
    auto ms = [](auto a, auto b) {
        return std::chrono::duration_cast<std::chrono::milliseconds>(b - a)
            .count();
    };
    BigInt total = 0;
    for (const BigInt& c : fv) total += c;
    if (opt.as_json) {
        emit(out, json{{"R", p.rows.size()},
                       {"count", str(total)},
                       {"fvector_ms", ms(t1, t2)},
                       {"h", f.facets.size()},
                       {"partition_ms", ms(t0, t1)},
                       {"w", f.w}});
    } else {
        out << "w=" << f.w << " h=" << f.facets.size() << "\n"
            << "R=" << p.rows.size() << "\n"
            << "count=" << total << "\n"
            << "partition_ms=" << ms(t0, t1) << "\n"
            << "fvector_ms=" << ms(t1, t2) << "\n";
    }
}

FacetFamily random_facets(int w, int h, int m, unsigned seed) {
    if (w < 1 || m < 1 || m > w || h < 1)
        throw std::invalid_argument("bench: need 1 <= m <= w and h >= 1");
    std::mt19937_64 rng(seed);
    std::vector<int> verts(static_cast<size_t>(w));
    for (int i = 0; i < w; ++i) verts[i] = i + 1;
    std::vector<FaceSet> facets;
    for (int i = 0; i < h; ++i) {
        std::shuffle(verts.begin(), verts.end(), rng);
        facets.emplace_back(std::vector<int>(verts.begin(), verts.begin() + m));
    }
    return FacetFamily::from_sets(w, std::move(facets));
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"disjoint wildcard-row representations of simplicial complexes"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--json", opt.as_json, "machine-readable output");
    bool parallel = false;
    app.add_flag("--parallel", parallel,
                 "use worker threads for per-row counting sums");

    std::string facets_path, generators_path, txn_path, weights_path, face_list;
    std::string route = "fvector";
    int prime = 2, s_value = 1, k_value = 1, degree = -1, ground = 0;
    bool shifted = false, via_facets = false, trace = false;

    auto* count = app.add_subcommand("count", "number of faces, three routes");
    count->add_option("facets", facets_path)->required();
    count->add_option("--route", route)
        ->check(CLI::IsMember({"ie", "partition", "fvector"}));

    auto* fvec = app.add_subcommand("fvector", "face numbers f_0..f_w");
    fvec->add_option("facets", facets_path)->required();

    auto* part = app.add_subcommand("partition",
                                    "disjoint wildcard rows of the complex");
    part->add_option("facets", facets_path);
    part->add_option("--nonfaces", generators_path,
                     "build from minimal non-faces instead");

    auto* nonf = app.add_subcommand("nonfaces", "minimal non-faces");
    nonf->add_option("facets", facets_path)->required();

    auto* link = app.add_subcommand("link", "link of a face");
    link->add_option("facets", facets_path)->required();
    link->add_option("--face", face_list, "comma-separated positions")
        ->required();
    link->add_flag("--via-facets", via_facets,
                   "partition the link's own facets instead");
    link->add_flag("--trace", trace, "also print the Disjoint/Minus rows");

    auto* maxi = app.add_subcommand("maximize", "maximal weight of a face");
    maxi->add_option("facets", facets_path)->required();
    maxi->add_option("--weights", weights_path)->required();

    auto* hpoly = app.add_subcommand("hpoly", "h-polynomial coefficients");
    hpoly->add_option("facets", facets_path)->required();
    hpoly->add_option("--degree", degree,
                      "transform degree (default: max facet cardinality)");
    hpoly->add_flag("--shifted-range", shifted,
                    "use the shifted-index variant over degree w");

    auto* homo = app.add_subcommand("homology", "reduced homology dimensions");
    homo->add_option("facets", facets_path)->required();
    homo->add_option("--prime", prime, "field characteristic");

    auto* ie = app.add_subcommand("ie-terms",
                                  "nonzero inclusion-exclusion index sets");
    ie->add_option("generators", generators_path)->required();
    ie->add_option("--m", ground, "number of properties (overrides the file)");

    auto* fsm_cmd = app.add_subcommand("fsm", "frequent set mining");
    fsm_cmd->require_subcommand(1);
    auto* table = fsm_cmd->add_subcommand("table", "fr(s,k) frequency table");
    table->add_option("transactions", txn_path)->required();
    auto* closed = fsm_cmd->add_subcommand("closed", "closed sets, lectic order");
    closed->add_option("transactions", txn_path)->required();
    closed->add_option("-s", s_value, "support threshold");
    auto* prob = fsm_cmd->add_subcommand("prob", "exact probability queries");
    prob->add_option("transactions", txn_path)->required();
    prob->add_option("-s", s_value, "support threshold");
    prob->add_option("-k", k_value, "itemset cardinality");
    std::string form = "freq-given-size";
    prob->add_option("--form", form)
        ->check(CLI::IsMember(
            {"freq-given-size", "size-given-freq", "exact-given-freq"}));

    auto* oracle = app.add_subcommand("oracle", "brute-force counterparts");
    oracle->require_subcommand(1);
    auto* ofv = oracle->add_subcommand("fvector", "f-vector by powerset scan");
    ofv->add_option("facets", facets_path)->required();
    auto* ocount = oracle->add_subcommand("count", "face count by powerset scan");
    ocount->add_option("facets", facets_path)->required();
    auto* omember = oracle->add_subcommand("membership", "is --face a face?");
    omember->add_option("facets", facets_path)->required();
    omember->add_option("--face", face_list)->required();

    auto* bench = app.add_subcommand("bench",
                                     "report R and wall time (informational)");
    bench->set_help_flag("--help", "print help");  // frees -h for --h below
    bench->add_option("facets", facets_path);
    bool random_instance = false;
    int bw = 30, bh = 17, bm = 10;
    unsigned seed = 1;
    bench->add_flag("--random", random_instance, "use a random instance");
    bench->add_option("--w", bw);
    bench->add_option("--h", bh);
    bench->add_option("--m", bm);
    bench->add_option("--seed", seed);

    std::vector<const char*> argv;
    argv.push_back("rowcomplex");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    if (parallel) {
        unsigned hw = std::thread::hardware_concurrency();
        opt.threads = hw > 1 ? static_cast<int>(hw) : 2;
    }

    if (*count) {
        run_count(facets_path, route, opt, out, err);
    } else if (*fvec) {
        FacetFamily f = load_facets(facets_path, err);
        run_fvector(f, face_numbers(f, opt.threads), opt, out);
    } else if (*part) {
        if (facets_path.empty() == generators_path.empty())
            throw CLI::ValidationError(
                "partition", "give exactly one of <facets> or --nonfaces");
        Partition p = generators_path.empty()
                          ? partition_from_facets(load_facets(facets_path, err))
                          : partition_from_nonfaces(
                                load_generators(generators_path));
        run_partition_dump(p, opt, out);
    } else if (*nonf) {
        FacetFamily f = load_facets(facets_path, err);
        NonfaceFamily g = minimal_nonfaces(f);
        if (opt.as_json) {
            json gens = json::array();
            for (const FaceSet& gen : g.generators) gens.push_back(to_json(gen));
            emit(out, json{{"count", g.generators.size()},
                           {"generators", gens},
                           {"w", g.w}});
        } else {
            out << format_set_file(g.w, g.generators);
        }
    } else if (*link) {
        FacetFamily f = load_facets(facets_path, err);
        FaceSet x = parse_position_list(face_list);
        if (via_facets) {
            run_partition_dump(link_via_facets(f, x), opt, out);
        } else {
            LinkTrace t = link_of_face(partition_from_facets(f), f, x);
            if (opt.as_json) {
                json dj = json::array(), mj = json::array();
                for (const Row& r : t.disjoint) dj.push_back(r.render());
                for (const Row& r : t.minus) mj.push_back(r.render());
                emit(out, json{{"disjoint", dj},
                               {"empty_pairs", t.empty_pairs},
                               {"link", to_json(t.link)},
                               {"minus", mj}});
            } else {
                if (trace) {
                    out << "disjoint=" << t.disjoint.size() << "\n";
                    for (const Row& r : t.disjoint) out << r.render() << "\n";
                    out << "minus=" << t.minus.size() << "\n";
                    for (const Row& r : t.minus) out << r.render() << "\n";
                    out << "empty_pairs=" << t.empty_pairs << "\n";
                }
                out << format_partition(t.link);
            }
        }
    } else if (*maxi) {
        FacetFamily f = load_facets(facets_path, err);
        Weights weights = load_weights(weights_path, f.w);
        MaxResult r = maximize(partition_from_facets(f), weights);
        if (opt.as_json)
            emit(out, json{{"value", r.value}, {"witness", to_json(r.witness)}});
        else
            out << "value=" << r.value << "\nwitness=" << r.witness.to_string()
                << "\n";
    } else if (*hpoly) {
        FacetFamily f = load_facets(facets_path, err);
        CountVector fv = face_numbers(f, opt.threads);
        Poly h;
        int d;
        if (shifted) {
            d = f.w;
            h = h_polynomial_shifted(fv, f.w);
        } else {
            d = degree >= 0 ? degree : f.max_facet_size();
            h = h_polynomial(fv, d);
        }
        if (opt.as_json) {
            emit(out, json{{"d", d}, {"h", to_json(h)}});
        } else {
            for (size_t i = 0; i < h.size(); ++i)
                out << (i ? " " : "") << h[i];
            out << "\n";
        }
    } else if (*homo) {
        FacetFamily f = load_facets(facets_path, err);
        std::vector<int> dims = homology_dims(f, prime);
        if (opt.as_json) {
            emit(out, json{{"dims", dims}, {"prime", prime}});
        } else {
            for (size_t i = 0; i < dims.size(); ++i)
                out << i << " " << dims[i] << "\n";
        }
    } else if (*ie) {
        SetFile file = load_set_file(generators_path);
        int m = ground > 0 ? ground : file.w;
        NonfaceFamily g = NonfaceFamily::from_sets(m, std::move(file.sets));
        Partition p = nonzero_term_partition(g);
        if (opt.as_json) {
            emit(out, json{{"partition", to_json(p)},
                           {"terms", str(p.total_cardinality())}});
        } else {
            out << format_partition(p);
            out << "terms=" << p.total_cardinality() << "\n";
        }
    } else if (*fsm_cmd) {
        fsm::Database db = load_transactions(txn_path);
        if (*table) {
            fsm::FrequencyTable t = fsm::frequency_table(db, opt.threads);
            if (opt.as_json) {
                json fr = json::array();
                for (int s = 0; s <= t.m; ++s) fr.push_back(to_json(t.fr[s]));
                json row_sums = json::array();
                for (int s = 0; s <= t.m; ++s) row_sums.push_back(str(t.row_sum(s)));
                emit(out, json{{"fr", fr},
                               {"m", t.m},
                               {"row_sums", row_sums},
                               {"w", t.w}});
            } else {
                print_table(t, out);
            }
        } else if (*closed) {
            std::vector<FaceSet> sets = fsm::closed_sets(db, s_value);
            if (opt.as_json) {
                json a = json::array();
                for (const FaceSet& c : sets) a.push_back(to_json(c));
                emit(out, json{{"closed", a}, {"s", s_value}});
            } else {
                for (const FaceSet& c : sets) out << c.to_string() << "\n";
            }
        } else {
            fsm::FrequencyTable t = fsm::frequency_table(db, opt.threads);
            fsm::ProbabilityQuery q;
            q.s = s_value;
            q.k = k_value;
            if (form == "freq-given-size")
                q.form = fsm::ProbabilityQuery::Form::FrequentGivenSize;
            else if (form == "size-given-freq")
                q.form = fsm::ProbabilityQuery::Form::SizeGivenFrequent;
            else
                q.form = fsm::ProbabilityQuery::Form::ExactGivenFrequent;
            fsm::ProbabilityResult r = fsm::probability(t, q);
            if (opt.as_json) {
                json j{{"defined", r.defined}, {"form", form}};
                if (r.defined) {
                    j["num"] = str(boost::multiprecision::numerator(r.value));
                    j["den"] = str(boost::multiprecision::denominator(r.value));
                    j["decimal"] = decimal(r.value);
                }
                emit(out, j);
            } else if (!r.defined) {
                out << "undefined\n";
            } else {
                out << boost::multiprecision::numerator(r.value) << "/"
                    << boost::multiprecision::denominator(r.value) << " ~ "
                    << decimal(r.value) << "\n";
            }
        }
    } else if (*oracle) {
        FacetFamily f = load_facets(facets_path, err);
        if (*ofv) {
            run_fvector(f, fvector_bruteforce(f), opt, out);
        } else if (*ocount) {
            CountVector fv = fvector_bruteforce(f);
            BigInt total = 0;
            for (const BigInt& c : fv) total += c;
            if (opt.as_json)
                emit(out, json{{"count", str(total)}});
            else
                out << total << "\n";
        } else {
            FaceSet x = parse_position_list(face_list);
            if (x.max_element() > f.w)
                throw std::invalid_argument("membership: face out of range");
            bool member = is_face(f, x);
            if (opt.as_json)
                emit(out, json{{"face", to_json(x)}, {"member", member}});
            else
                out << (member ? "true" : "false") << "\n";
        }
    } else if (*bench) {
        if (random_instance == !facets_path.empty())
            throw CLI::ValidationError(
                "bench", "give exactly one of <facets> or --random");
        FacetFamily f = random_instance ? random_facets(bw, bh, bm, seed)
                                        : load_facets(facets_path, err);
        run_bench(f, opt, out);
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kGuard;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace cli
}  // namespace rowcomplex

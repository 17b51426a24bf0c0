#include "acceptance.hh"
#include "oracles.hh"

#include <gridram/bridging.hh>
#include <gridram/cnf.hh>
#include <gridram/embed.hh>
#include <gridram/exact.hh>
#include <gridram/hyper.hh>
#include <gridram/patterns.hh>
#include <gridram/ramsey.hh>

#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

using std::string;
using std::uint64_t;
using std::vector;

namespace gridram::acceptance
{
    using std::to_string;

    namespace
    {
        // Accumulates named checks; the first failure is kept for the report.
        class Checks
        {
        public:
            auto expect(bool ok, const string & what) -> bool
            {
                ++_total;
                if (! ok) {
                    ++_failed;
                    if (_first_failure.empty())
                        _first_failure = what;
                }
                return ok;
            }

            auto note(const string & s) -> void { _notes.push_back(s); }

            [[nodiscard]] auto ok() const -> bool { return _failed == 0; }

            [[nodiscard]] auto summary() const -> string
            {
                std::ostringstream out;
                out << _total - _failed << "/" << _total << " checks";
                for (auto & n : _notes)
                    out << "; " << n;
                if (! _first_failure.empty())
                    out << "; first failure: " << _first_failure;
                return out.str();
            }

        private:
            int _total = 0, _failed = 0;
            string _first_failure;
            vector<string> _notes;
        };

        auto identity(int n) -> vector<int>
        {
            vector<int> v(n);
            for (int i = 0; i < n; ++i)
                v[i] = i + 1;
            return v;
        }

        auto criterion_1(const Options & o, Checks & c) -> void
        {
            struct Case
            {
                const char * name;
                int expected;
            };
            for (auto [name, expected] : {Case{"hedge", 2}, Case{"hpath:3", 3}}) {
                auto h = named(name);
                auto gr = gr_exact(h, 2, 3, AvoiderMethod::brute_force, o.workers, o.caps);
                c.expect(gr.value && *gr.value == expected,
                    string("gr(") + name + ", K_2) = " + (gr.value ? to_string(*gr.value) : "undecided"));
                for (auto & level : gr.levels) {
                    bool oracle = oracle::avoider_exists(h, 2, level.n);
                    c.expect(oracle == (level.result.status == AvoiderStatus::found),
                        string(name) + " at N = " + to_string(level.n) + " disagrees with the oracle");
                    if (level.result.witness) {
                        auto & w = *level.result.witness;
                        c.expect(is_avoider(h, w, 2, o.caps), string(name) + " witness fails is_avoider");
                        c.expect(! oracle::has_coclique(w, 2) && oracle::count_embeddings(h, w) == 0,
                            string(name) + " witness fails the oracle check");
                    }
                }
                if (gr.value)
                    c.expect(gr.levels.at(*gr.value - 2).result.witness.has_value(),
                        string(name) + " has no witness at N - 1");
                c.note(string("gr(") + name + ",K_2)=" + (gr.value ? to_string(*gr.value) : "?"));
            }
        }

        auto criterion_2(const Options & o, Checks & c) -> void
        {
            auto ac6 = alternating_cycle(6);
            auto script = ac_script(6);
            c.expect(script.steps.size() == 4, "the AC_6 script has 4 steps");
            auto g = replay(script);
            c.expect(g.columns() == 3 && g.rows() == 3, "replay is 3 x 3");

            // The construction names the cycle, not the whole replay: take the
            // copy found by search and compare its image with AC_6.
            auto e = contains(ac6, g);
            c.expect(e.has_value(), "replay contains AC_6");
            if (e) {
                auto img = image(ac6, *e);
                auto cycle = GridSubgraph::from_edges(3, 3, img.h_edges, img.v_edges);
                c.expect(canonical_form(cycle, false, o.caps) == canonical_form(ac6, false, o.caps),
                    "the cycle in the replay has the canonical form of AC_6");
            }
            c.expect(is_embedding(ac6, g, {identity(3), identity(3)}), "identity labelling embeds AC_6");
            c.note("replay has " + to_string(g.edge_count()) + " edges, AC_6 has 6");

            for (int s : {3, 4}) {
                auto base = alternating_cycle(2 * s);
                auto grown = base;
                for (auto & step : ac_extension_steps(s))
                    grown = bridge(grown, step);
                auto target = alternating_cycle(2 * s + 2);
                c.expect(contains(target, grown).has_value(),
                    "two bridgings of AC_" + to_string(2 * s) + " contain AC_" + to_string(2 * s + 2));
                c.expect(is_embedding(target, grown, {identity(s + 1), identity(s + 1)}),
                    "identity labelling of AC_" + to_string(2 * s + 2));
            }
        }

        auto criterion_3(const Options & o, Checks & c) -> void
        {
            struct Case
            {
                const char * name;
                bool constructible;
            };
            for (auto [name, expected] : {Case{"ac:6", true}, Case{"row_clique:3", true}, Case{"row_clique:4", true},
                     Case{"column_clique:3", true}, Case{"square", false}, Case{"nz_stool", false}}) {
                auto h = named(name);
                auto r = is_bridging_constructible(h, false, o.caps);
                c.expect(r.has_value() == expected,
                    string(name) + (expected ? " should be constructible" : " should not be constructible"));
                if (r) {
                    c.expect(verify_constructibility(h, *r, false), string(name) + " script does not verify");
                    auto g = replay(r->script);
                    c.expect(oracle::embeds(h, g, r->embedding.column_map, r->embedding.row_map),
                        string(name) + " embedding fails the oracle check");
                    c.note(string(name) + ": " + to_string(r->script.steps.size()) + " steps");
                }
                else
                    c.note(string(name) + ": none");
            }
        }

        auto criterion_4(const Options & o, Checks & c) -> void
        {
            auto report = product_lower_bound(cycle_graph(5), 3, o.caps);
            c.expect(report.triangle_free, "C_5 is triangle-free");
            c.expect(report.independence == 2, "C_5 has independence number 2");
            c.expect(report.ac6_free, "C_5 x K_5 has no AC_6 (search)");
            c.expect(! report.coclique, "C_5 x K_5 has no 3-coclique (search)");
            c.expect(report.certifies, "report certifies gr(AC_6, K_3) > 5");
            c.expect(oracle::count_embeddings(alternating_cycle(6), report.grid) == 0,
                "oracle finds no AC_6 in C_5 x K_5");
            c.expect(! oracle::has_coclique(report.grid, 3), "oracle finds no 3-coclique");
            c.expect(oracle::has_coclique(report.grid, 2), "a 2-coclique exists, so k = 3 is tight");
            c.note("gr(AC_6,K_3) >= 6");
        }

        auto criterion_5(const Options & o, Checks & c) -> void
        {
            std::mt19937_64 rng(o.seed * 1000003 + 5);
            int k = 3, trials = 0, rejected = 0;
            uint64_t total_edges = 0;
            auto vertex = GridSubgraph::single_vertex();
            auto vedge = named("vedge");
            while (trials < 100) {
                int n = oracle::uniform(rng, 2, 5);
                auto g = oracle::random_grid(rng, n, n, 75);
                if (oracle::has_coclique(g, k)) {
                    ++rejected;
                    continue;
                }
                ++trials;
                for (auto * h : {&vertex, &vedge}) {
                    auto rep = supersaturation_identity_check(*h, 1, 1, g, o.workers);
                    c.expect(rep.equal, "identity fails on trial " + to_string(trials));
                    c.expect(rep.t_bridged == oracle::count_embeddings(rep.bridged, g),
                        "direct count disagrees with the oracle on trial " + to_string(trials));
                    total_edges += rep.sum_f_edges;
                    for (auto & cls : rep.classes) {
                        auto p = static_cast<long>(cls.extensions.size());
                        if (p >= k)
                            c.expect(Rational(static_cast<long>(cls.f_edges)) >= turan_f(p, k),
                                "extension count below turan_f on trial " + to_string(trials));
                    }
                }
            }
            c.note(to_string(trials) + " grids (" + to_string(rejected) + " rejected for a 3-coclique), sum |E(F)| = " +
                to_string(total_edges));
        }

        auto random_property_b(std::mt19937_64 & rng, int max_side, int percent) -> ThreeGraph
        {
            int nx = oracle::uniform(rng, 1, max_side), ny = oracle::uniform(rng, 1, max_side);
            vector<int> labels = identity(nx + ny);
            for (int i = nx + ny - 1; i > 0; --i)
                std::swap(labels[i], labels[oracle::uniform(rng, 0, i)]);
            Bipartition b{vector<int>(labels.begin(), labels.begin() + nx), vector<int>(labels.begin() + nx, labels.end())};
            vector<Triple> es;
            for (int i = 0; i < nx; ++i)
                for (int j = i + 1; j < nx; ++j)
                    for (int y = 0; y < ny; ++y)
                        if (oracle::uniform(rng, 0, 99) < percent)
                            es.push_back({b.x[i], b.x[j], b.y[y]});
            for (int x = 0; x < nx; ++x)
                for (int i = 0; i < ny; ++i)
                    for (int j = i + 1; j < ny; ++j)
                        if (oracle::uniform(rng, 0, 99) < percent)
                            es.push_back({b.x[x], b.y[i], b.y[j]});
            return make_three_graph(labels, es, b);
        }

        auto criterion_6(const Options & o, Checks & c) -> void
        {
            std::mt19937_64 rng(o.seed * 1000003 + 6);
            for (int i = 0; i < 200; ++i) {
                auto h = random_property_b(rng, 5, 40);
                auto f = fg_to_grid(h);
                c.expect(fg_from_grid(f.grid, f.column_labels, f.row_labels) == h,
                    "round trip from the 3-graph side, sample " + to_string(i));
                auto back = fg_to_grid(fg_from_grid(f.grid)).grid;
                c.expect(back == f.grid, "round trip from the grid side, sample " + to_string(i));
            }
            uint64_t nonzero = 0;
            for (int i = 0; i < 100; ++i) {
                auto h = random_property_b(rng, 3, 50);
                auto g = random_property_b(rng, 5, 70);
                auto t3 = count_embeddings_3(h, g, true, o.caps);
                auto tg = count_embeddings(fg_to_grid(h).grid, fg_to_grid(g).grid, o.workers);
                c.expect(t3 == tg, "t_3 != t_g on pair " + to_string(i));
                c.expect(t3 == oracle::count_embeddings_3(h, g, true), "t_3 disagrees with the oracle on pair " +
                    to_string(i));
                nonzero += t3 > 0;
            }
            for (int t : {3, 4, 5})
                c.expect(canonical_form(fg_to_grid(tight_cycle(2 * t)).grid, false, o.caps) ==
                        canonical_form(alternating_cycle(2 * t), false, o.caps),
                    "f_g(C_" + to_string(2 * t) + ") vs AC_" + to_string(2 * t));
            c.expect(canonical_form(fg_to_grid(tight_cycle(9)).grid, false, o.caps) ==
                    canonical_form(aligned_staircase(4), false, o.caps),
                "f_g(C_9) vs AS_3");
            c.note(to_string(nonzero) + "/100 pairs with a nonzero count");
        }

        auto criterion_7(const Options & o, Checks & c) -> void
        {
            auto h = named("hedge");
            for (int n : {1, 2}) {
                auto cnf = encode_cnf(h, 2, n);
                auto model = evaluate_cnf(cnf, o.caps);
                auto reference = oracle::dpll(cnf.variables(), cnf.clauses);
                c.expect(model.has_value() == reference.has_value(),
                    "exhaustive evaluation and DPLL disagree at N = " + to_string(n));
                c.expect(model.has_value() == (n == 1), "N = " + to_string(n) + (n == 1 ? " should be SAT" : " should be UNSAT"));
                c.expect(model.has_value() == oracle::avoider_exists(h, 2, n),
                    "CNF disagrees with avoider enumeration at N = " + to_string(n));
                if (model) {
                    auto d = decode_model(cnf, *model, o.caps);
                    c.expect(d.ok(), "decoded model does not re-verify at N = " + to_string(n));
                    c.expect(! oracle::has_coclique(d.witness, 2) && oracle::count_embeddings(h, d.witness) == 0,
                        "decoded model fails the oracle check");
                }
                auto round = parse_dimacs(to_dimacs(cnf));
                c.expect(round.clauses == cnf.clauses && round.slots == cnf.slots, "DIMACS round trip");
                c.note("N=" + to_string(n) + ": " + to_string(cnf.variables()) + " vars, " +
                    to_string(cnf.clauses.size()) + " clauses, " + (model ? "SAT" : "UNSAT"));
            }
        }

        auto criterion_8(const Options & o, Checks & c) -> void
        {
            std::mt19937_64 rng(o.seed * 1000003 + 8);
            auto ac6 = alternating_cycle(6);
            int embeddings = 0, cocliques = 0, inconclusive = 0, checked = 0;
            for (int i = 0; i < 200; ++i) {
                int n = oracle::uniform(rng, 2, 12);
                int k = oracle::uniform(rng, 2, 3);
                int density = oracle::uniform(rng, 20, 95);
                auto g = oracle::random_grid(rng, n, n, density);
                auto r = find_ac6_or_coclique(g, k, o.caps);
                auto & cert = r.certificate;
                c.expect(verify_certificate(cert, ac6, g, k, o.caps), "certificate fails re-verification, sample " +
                    to_string(i));
                if (cert.kind == CertificateKind::embedding) {
                    ++embeddings;
                    c.expect(oracle::embeds(ac6, g, cert.embedding->column_map, cert.embedding->row_map),
                        "embedding fails the oracle, sample " + to_string(i));
                }
                else if (cert.kind == CertificateKind::coclique) {
                    ++cocliques;
                    c.expect(static_cast<int>(cert.coclique->positions.size()) == k &&
                            oracle::is_coclique(g, *cert.coclique),
                        "coclique fails the oracle, sample " + to_string(i));
                }
                else
                    ++inconclusive;
                if (n <= 4) {
                    ++checked;
                    bool has_ac6 = oracle::count_embeddings(ac6, g) > 0;
                    bool has_coclique = oracle::has_coclique(g, k);
                    if (cert.kind == CertificateKind::embedding)
                        c.expect(has_ac6, "embedding where none exists, sample " + to_string(i));
                    if (cert.kind == CertificateKind::coclique)
                        c.expect(has_coclique, "coclique where none exists, sample " + to_string(i));
                    if (! has_ac6 && ! has_coclique)
                        c.expect(cert.kind == CertificateKind::inconclusive,
                            "certificate on an instance with neither, sample " + to_string(i));
                }
            }
            c.note(to_string(embeddings) + " embeddings, " + to_string(cocliques) + " cocliques, " +
                to_string(inconclusive) + " inconclusive, " + to_string(checked) + " ground-truth checked");
        }

        auto criterion_9(const Options & o, Checks & c) -> void
        {
            std::mt19937_64 rng(o.seed * 1000003 + 9);
            vector<GridSubgraph> trees{GridSubgraph::single_vertex(), named("hedge"), named("vedge"), named("hpath:3"),
                named("vpath:3"), GridSubgraph::from_edges(2, 2, {{1, 2, 1}}, {{1, 1, 2}})};
            vector<GridSubgraph> hosts;
            for (int n = 2; n <= 5; ++n)
                hosts.push_back(GridSubgraph::complete(n, n));
            for (int i = 0; i < 8; ++i) {
                int n = oracle::uniform(rng, 3, 5);
                hosts.push_back(oracle::random_grid(rng, n, n, oracle::uniform(rng, 40, 90)));
            }
            int cases = 0, positive = 0;
            for (auto & host : hosts)
                for (auto & tree : trees)
                    for (auto & tv : tree.vertices())
                        for (int n = 1; n <= 2; ++n)
                            for (int x = 1; x <= host.columns(); ++x)
                                for (int y = 1; y <= host.rows(); ++y) {
                                    Point hv{x, y};
                                    auto r = is_n_diverse(host, hv, tree, tv, n, o.caps);
                                    bool truth = oracle::n_diverse(host, hv, tree, tv, n);
                                    ++cases;
                                    positive += truth;
                                    c.expect(r.diverse == truth, "is_n_diverse disagrees with the oracle");
                                    if (r.diverse)
                                        c.expect(verify_n_diverse(host, hv, tree, tv, r.witnesses) &&
                                                static_cast<int>(r.witnesses.size()) == n,
                                            "n-diverse witness does not verify");
                                }
            c.note(to_string(cases) + " cases, " + to_string(positive) + " diverse");
        }

        auto criterion_10(const Options & o, Checks & c) -> void
        {
            std::mt19937_64 rng(o.seed * 1000003 + 10);
            int found = 0;
            for (int i = 0; i < 100; ++i) {
                auto colouring = oracle::random_grid(rng, 6, 6, 50);
                auto r = uniform_subgrid(colouring, 2);
                bool truth = oracle::uniform_subgrid_exists(colouring, 2);
                c.expect(r.has_value() == truth, "existence disagrees with the oracle, sample " + to_string(i));
                if (r) {
                    ++found;
                    c.expect(verify_uniform_subgrid(colouring, 2, *r), "returned subgrid is not uniform");
                }
            }
            c.note(to_string(found) + "/100 colourings with a uniform 2 x 2 subgrid");
        }

        struct Entry
        {
            int id;
            const char * title;
            double budget;
            std::function<void(const Options &, Checks &)> run;
        };

        auto entries() -> const vector<Entry> &
        {
            static const vector<Entry> list{
                {1, "exact grid Ramsey values", 5, criterion_1},
                {2, "bridging scripts", 5, criterion_2},
                {3, "constructibility decisions", 60, criterion_3},
                {4, "lower-bound witness C5 x K5", 10, criterion_4},
                {5, "supersaturation identity", 60, criterion_5},
                {6, "f_g correspondence", 60, criterion_6},
                {7, "CNF soundness", 5, criterion_7},
                {8, "corner search certificates", 120, criterion_8},
                {9, "n-diverse predicate", 60, criterion_9},
                {10, "uniform subgrid", 30, criterion_10},
            };
            return list;
        }
    }

    auto run_one(int id, const Options & o) -> Criterion
    {
        for (auto & e : entries()) {
            if (e.id != id)
                continue;
            Criterion r{e.id, e.title, false, "", 0.0, e.budget};
            Checks checks;
            auto start = std::chrono::steady_clock::now();
            try {
                e.run(o, checks);
            }
            catch (const std::exception & ex) {
                checks.expect(false, string("exception: ") + ex.what());
            }
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            checks.expect(r.seconds <= r.budget_seconds, "over the time budget");
            r.pass = checks.ok();
            r.detail = checks.summary();
            return r;
        }
        throw InvalidArgument("no acceptance criterion " + to_string(id));
    }

    auto run_all(const Options & o) -> vector<Criterion>
    {
        vector<Criterion> out;
        for (auto & e : entries())
            out.push_back(run_one(e.id, o));
        return out;
    }

    auto print(std::ostream & out, const Criterion & c, bool with_timing) -> void
    {
        out << (c.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  " << c.title;
        if (with_timing)
            out << "  (" << std::fixed << std::setprecision(2) << c.seconds << " s / " << std::setprecision(0)
                << c.budget_seconds << " s)";
        out << "  " << c.detail << "\n";
        out.unsetf(std::ios::fixed);
    }
}

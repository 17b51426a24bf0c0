#include <gridram/bridging.hh>
#include <gridram/cnf.hh>
#include <gridram/embed.hh>
#include <gridram/hyper.hh>
#include <gridram/json_io.hh>
#include <gridram/meh_color.hh>
#include <gridram/patterns.hh>
#include <gridram/ramsey.hh>

#include "acceptance.hh"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using std::cerr;
using std::cout;
using std::string;
using std::vector;

using namespace gridram;

namespace
{
    // exit codes
    constexpr int ok = 0, verification_failed = 1, usage = 2;

    struct Globals
    {
        std::uint64_t seed = 1;
        int workers = 1;
        string out_dir;
    };

    Globals globals;

    auto out_path(const string & name) -> string
    {
        std::filesystem::path p(name);
        if (globals.out_dir.empty() || p.is_absolute())
            return p.string();
        std::filesystem::create_directories(globals.out_dir);
        return (std::filesystem::path(globals.out_dir) / p).string();
    }

    auto emit(const string & contents, const string & out) -> void
    {
        if (out.empty())
            cout << contents << "\n";
        else {
            auto path = out_path(out);
            write_file(path, contents + "\n");
            cout << "wrote " << path << "\n";
        }
    }

    auto load_grid(const string & path) -> GridSubgraph { return grid_from_json(read_file(path)); }

    auto pattern_or_file(const string & arg) -> GridSubgraph
    {
        if (std::filesystem::exists(arg))
            return load_grid(arg);
        return named(arg);
    }

    auto embedding_json(const Embedding & e) -> json
    {
        json j;
        j["column_map"] = e.column_map;
        j["row_map"] = e.row_map;
        return j;
    }

    auto coclique_json(const Coclique & c) -> json
    {
        json j;
        j["line"] = to_string(c.kind);
        j["index"] = c.index;
        json ps = json::array();
        for (auto & p : c.positions)
            ps.push_back({p.x, p.y});
        j["positions"] = ps;
        return j;
    }

    auto script_json(const ConstructionScript & s) -> json
    {
        json steps = json::array();
        for (auto & step : s.steps) {
            json j;
            j["axis"] = step.axis == LineKind::column ? "col" : "row";
            j["source"] = step.source;
            j["anchor"] = step.anchor;
            steps.push_back(j);
        }
        return steps;
    }

    auto parse_axis(const string & s) -> LineKind
    {
        if (s == "col" || s == "column")
            return LineKind::column;
        if (s == "row")
            return LineKind::row;
        throw InvalidArgument("axis must be col or row");
    }

    auto parse_script_name(const string & s) -> ConstructionScript
    {
        auto colon = s.find(':');
        if (colon == string::npos)
            throw InvalidArgument("script name must be ac:t or as:d");
        auto kind = s.substr(0, colon);
        int n;
        try {
            n = std::stoi(s.substr(colon + 1));
        }
        catch (const std::exception &) {
            throw InvalidArgument("bad script parameter in '" + s + "'");
        }
        if (kind == "ac")
            return ac_script(n);
        if (kind == "as")
            return as_script(n);
        throw InvalidArgument("script name must be ac:t or as:d");
    }

    auto parse_method(const string & s) -> AvoiderMethod
    {
        if (s == "auto")
            return AvoiderMethod::automatic;
        if (s == "brute")
            return AvoiderMethod::brute_force;
        if (s == "backtrack")
            return AvoiderMethod::backtracking;
        throw InvalidArgument("method must be auto, brute or backtrack");
    }

    // "5:43-48,6:102-165" extends the diagonal Ramsey table
    auto parse_ramsey_table(const string & s) -> RamseyTable
    {
        auto table = known_diagonal_ramsey();
        std::istringstream in(s);
        string item;
        while (std::getline(in, item, ',')) {
            if (item.empty())
                continue;
            auto colon = item.find(':');
            if (colon == string::npos)
                throw InvalidArgument("table entries look like n:lo-hi or n:value");
            int n = std::stoi(item.substr(0, colon));
            auto range = item.substr(colon + 1);
            auto dash = range.find('-');
            BigInt lo(range.substr(0, dash)), hi(dash == string::npos ? range : range.substr(dash + 1));
            table[n] = {lo, hi};
        }
        return table;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"gridram: grid Ramsey workbench"};
    app.require_subcommand(1);
    app.add_option("--seed", globals.seed, "Seed for randomized suites");
    app.add_option("--workers", globals.workers, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--out-dir", globals.out_dir, "Directory for written artifacts");

    std::function<int()> action;
    auto on = [&](CLI::App * sub, std::function<int()> f) { sub->callback([&action, f] { action = f; }); };

    // pattern
    string pattern_name, out;
    auto * pattern = app.add_subcommand("pattern", "Emit a named pattern as JSON");
    pattern->add_option("name", pattern_name, "square, nz_stool, ac:t, as:d, row_clique:m, ...")->required();
    pattern->add_option("--out", out, "Output file");
    on(pattern, [&] {
        emit(grid_to_json(named(pattern_name)), out);
        return ok;
    });

    // validate
    string grid_file;
    auto * validate_cmd = app.add_subcommand("validate", "Check a grid JSON file against all invariants");
    validate_cmd->add_option("grid", grid_file)->required();
    on(validate_cmd, [&] {
        auto draft = grid_draft_from_json(read_file(grid_file));
        auto report = validate(draft);
        if (report.ok()) {
            cout << "ok\n";
            return ok;
        }
        cout << report.to_string() << "\n";
        return verification_failed;
    });

    // embed
    string h_file, g_file;
    auto * embed = app.add_subcommand("embed", "Embedding search");
    embed->require_subcommand(1);
    auto * embed_count = embed->add_subcommand("count", "Count labelled embeddings t_g(H, G)");
    embed_count->add_option("H", h_file)->required();
    embed_count->add_option("G", g_file)->required();
    on(embed_count, [&] {
        cout << count_embeddings(pattern_or_file(h_file), load_grid(g_file), globals.workers) << "\n";
        return ok;
    });
    auto * embed_find = embed->add_subcommand("find", "First embedding in lexicographic order");
    embed_find->add_option("H", h_file)->required();
    embed_find->add_option("G", g_file)->required();
    on(embed_find, [&] {
        auto e = contains(pattern_or_file(h_file), load_grid(g_file));
        cout << (e ? embedding_json(*e).dump() : "none") << "\n";
        return ok;
    });

    // coclique
    int k = 0;
    auto * coclique = app.add_subcommand("coclique", "Largest coclique, or one of size k");
    coclique->add_option("G", g_file)->required();
    coclique->add_option("--k", k, "Look for a coclique of this size");
    on(coclique, [&] {
        auto g = load_grid(g_file);
        if (k > 0) {
            auto c = find_coclique(g, k);
            cout << (c ? coclique_json(*c).dump() : "none") << "\n";
        }
        else {
            auto m = max_coclique(g);
            cout << "size " << m.size << " " << coclique_json(m.witness).dump() << "\n";
        }
        return ok;
    });

    // bridge
    auto * bridge_cmd = app.add_subcommand("bridge", "Bridging calculus");
    bridge_cmd->require_subcommand(1);
    string axis = "col";
    int src = 1, anchor = 1;
    auto * bridge_apply = bridge_cmd->add_subcommand("apply", "Apply one bridging step");
    bridge_apply->add_option("grid", g_file)->required();
    bridge_apply->add_option("--axis", axis, "col or row");
    bridge_apply->add_option("--src", src, "Line to duplicate")->required();
    bridge_apply->add_option("--anchor", anchor, "Line carrying the bridge edge")->required();
    bridge_apply->add_option("--out", out);
    on(bridge_apply, [&] {
        emit(grid_to_json(bridge(pattern_or_file(g_file), {parse_axis(axis), src, anchor})), out);
        return ok;
    });

    bool exact_mode = false;
    auto * bridge_constructible = bridge_cmd->add_subcommand("constructible", "Backward constructibility search");
    bridge_constructible->add_option("pattern", h_file)->required();
    bridge_constructible->add_flag("--exact", exact_mode, "Require the replay to be isomorphic, not a supergraph");
    on(bridge_constructible, [&] {
        auto h = pattern_or_file(h_file);
        auto r = is_bridging_constructible(h, exact_mode);
        if (! r) {
            cout << "not constructible\n";
            return ok;
        }
        if (! verify_constructibility(h, *r, exact_mode)) {
            cerr << "script failed re-verification\n";
            return verification_failed;
        }
        json j;
        j["steps"] = script_json(r->script);
        j["embedding"] = embedding_json(r->embedding);
        cout << "constructible in " << r->script.steps.size() << " steps\n" << j.dump() << "\n";
        return ok;
    });

    string script_name;
    bool do_replay = false;
    auto * bridge_script = bridge_cmd->add_subcommand("script", "Built-in construction scripts");
    bridge_script->add_option("name", script_name, "ac:t or as:d")->required();
    bridge_script->add_flag("--replay", do_replay, "Replay and check containment");
    bridge_script->add_option("--out", out, "Write the replayed grid here");
    on(bridge_script, [&] {
        auto s = parse_script_name(script_name);
        cout << script_json(s).dump() << "\n";
        if (! do_replay)
            return ok;
        auto g = replay(s);
        auto colon = script_name.find(':');
        int n = std::stoi(script_name.substr(colon + 1));
        auto target = script_name.substr(0, colon) == "ac" ? alternating_cycle(n) : aligned_staircase(n);
        auto e = contains(target, g);
        cout << "replay: " << g.columns() << " columns, " << g.rows() << " rows, " << g.edge_count() << " edges\n";
        cout << "contains target: " << (e ? "yes " + embedding_json(*e).dump() : "no") << "\n";
        if (! out.empty())
            emit(grid_to_json(g), out);
        return e ? ok : verification_failed;
    });

    // ramsey
    auto * ramsey = app.add_subcommand("ramsey", "Grid Ramsey search");
    ramsey->require_subcommand(1);
    int nmax = 3, n = 1, m = 2;
    string method = "auto";
    auto * ramsey_exact = ramsey->add_subcommand("exact", "Exact gr(H, K_k) by exhaustive search");
    ramsey_exact->add_option("H", h_file)->required();
    ramsey_exact->add_option("--k", k)->required();
    ramsey_exact->add_option("--nmax", nmax);
    ramsey_exact->add_option("--method", method, "auto, brute or backtrack");
    on(ramsey_exact, [&] {
        auto h = pattern_or_file(h_file);
        auto start = std::chrono::steady_clock::now();
        auto r = gr_exact(h, k, nmax, parse_method(method), globals.workers);
        int status = ok;
        for (auto & level : r.levels) {
            cout << "N = " << level.n << ": " << to_string(level.result.status) << " (" << level.result.method
                 << ", " << level.result.nodes << " nodes)";
            if (level.result.witness) {
                auto & w = *level.result.witness;
                bool good = is_avoider(h, w, k);
                if (! good)
                    status = verification_failed;
                cout << " witness " << grid_to_json(w) << (good ? "" : " FAILED re-verification");
                if (! globals.out_dir.empty())
                    write_file(out_path("witness_n" + std::to_string(level.n) + ".json"), grid_to_json(w) + "\n");
            }
            cout << "\n";
        }
        cout << r.status << "\n";
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        cerr << "time " << secs << " s\n";
        return status;
    });

    string cnf_out;
    auto * ramsey_cnf = ramsey->add_subcommand("cnf", "Export the avoidance formula as DIMACS");
    ramsey_cnf->add_option("H", h_file)->required();
    ramsey_cnf->add_option("--k", k)->required();
    ramsey_cnf->add_option("--n", n)->required();
    ramsey_cnf->add_option("--out", cnf_out);
    on(ramsey_cnf, [&] {
        auto cnf = encode_cnf(pattern_or_file(h_file), k, n);
        auto text = to_dimacs(cnf);
        if (cnf_out.empty())
            cout << text;
        else {
            auto path = out_path(cnf_out);
            write_file(path, text);
            cout << "wrote " << path << ": " << cnf.variables() << " variables, " << cnf.clauses.size()
                 << " clauses\n";
        }
        return ok;
    });

    string cnf_file, model_file;
    bool evaluate = false;
    auto * ramsey_decode = ramsey->add_subcommand("decode", "Check a solver model against a CNF export");
    ramsey_decode->add_option("cnf", cnf_file)->required();
    ramsey_decode->add_option("model", model_file, "Solver output (omit with --evaluate)");
    ramsey_decode->add_flag("--evaluate", evaluate, "Solve by exhaustive evaluation instead of reading a model");
    on(ramsey_decode, [&] {
        auto cnf = parse_dimacs(read_file(cnf_file));
        std::optional<vector<bool>> values;
        if (evaluate) {
            values = evaluate_cnf(cnf);
            if (! values) {
                cout << "UNSAT: gr <= " << cnf.n << "\n";
                return ok;
            }
        }
        else {
            if (model_file.empty())
                throw InvalidArgument("need a model file or --evaluate");
            auto model = parse_model(read_file(model_file), cnf.variables());
            if (model.unsatisfiable) {
                cout << "solver reports UNSATISFIABLE: gr <= " << cnf.n << " (not independently checked)\n";
                return ok;
            }
            values = model.values;
        }
        auto d = decode_model(cnf, *values);
        cout << "clauses satisfied: " << (d.satisfies_clauses ? "yes" : "no") << "\n";
        cout << "avoids pattern: " << (d.avoids_pattern ? "yes" : "no") << "\n";
        cout << "avoids " << cnf.k << "-cocliques: " << (d.avoids_cocliques ? "yes" : "no") << "\n";
        cout << "witness " << grid_to_json(d.witness) << "\n";
        if (d.ok())
            cout << "SAT: gr > " << cnf.n << "\n";
        return d.ok() ? ok : verification_failed;
    });

    string edge_list;
    auto * ramsey_lower = ramsey->add_subcommand("lower", "Product lower-bound witness G x K_N");
    ramsey_lower->add_option("--col-graph", edge_list, "Edge list file")->required();
    ramsey_lower->add_option("--k", k)->required();
    ramsey_lower->add_option("--out", out, "Write the product grid here");
    on(ramsey_lower, [&] {
        auto graph = parse_edge_list(read_file(edge_list));
        auto r = product_lower_bound(graph, k);
        cout << "N = " << graph.n << "\n";
        cout << "triangle-free: " << (r.triangle_free ? "yes" : "no") << "\n";
        cout << "independence number: " << r.independence << "\n";
        cout << "AC_6-free: " << (r.ac6_free ? "yes" : "no " + embedding_json(*r.ac6_copy).dump()) << "\n";
        cout << k << "-coclique: " << (r.coclique ? coclique_json(*r.coclique).dump() : "none") << "\n";
        if (r.certifies)
            cout << "certifies gr(AC_6, K_" << k << ") >= " << graph.n + 1 << "\n";
        else
            cout << "does not certify a bound\n";
        if (! out.empty())
            emit(grid_to_json(r.grid), out);
        return r.certifies ? ok : verification_failed;
    });

    auto * ramsey_ac6 = ramsey->add_subcommand("find-ac6", "Corner search for AC_6 or a k-coclique");
    ramsey_ac6->add_option("G", g_file)->required();
    ramsey_ac6->add_option("--k", k)->required();
    on(ramsey_ac6, [&] {
        auto g = load_grid(g_file);
        auto r = find_ac6_or_coclique(g, k);
        for (auto & t : r.trace)
            cout << "# " << t << "\n";
        auto & c = r.certificate;
        cout << to_string(c.kind);
        if (c.embedding)
            cout << " " << embedding_json(*c.embedding).dump();
        if (c.coclique)
            cout << " " << coclique_json(*c.coclique).dump();
        cout << "\n" << c.note << "\n";
        return verify_certificate(c, alternating_cycle(6), g, k) ? ok : verification_failed;
    });

    bool threshold = false;
    string table_spec;
    auto * ramsey_subgrid = ramsey->add_subcommand("subgrid", "Uniform M x M subgrid of a 2-colouring");
    ramsey_subgrid->add_option("coloring", g_file, "Spanning grid JSON; present edges are colour 1")->required();
    ramsey_subgrid->add_option("--m", m)->required();
    ramsey_subgrid->add_flag("--threshold", threshold, "Also evaluate the existence threshold");
    ramsey_subgrid->add_option("--ramsey", table_spec, "Extra R(n,n) entries, e.g. 5:43-48");
    on(ramsey_subgrid, [&] {
        auto colouring = load_grid(g_file);
        auto s = uniform_subgrid(colouring, m);
        int status = ok;
        if (s) {
            json j;
            j["columns"] = s->columns;
            j["rows"] = s->rows;
            j["colours"] = {s->horizontal_colour, s->vertical_colour};
            cout << j.dump() << "\n";
            if (! verify_uniform_subgrid(colouring, m, *s))
                status = verification_failed;
        }
        else
            cout << "none\n";
        if (threshold) {
            try {
                auto t = uniform_subgrid_threshold(m, parse_ramsey_table(table_spec));
                cout << "threshold L = " << t.l << ", N > " << t.lower;
                if (! t.exact())
                    cout << " .. " << t.upper;
                cout << "\n";
            }
            catch (const InvalidArgument & e) {
                cout << "threshold: " << e.what() << "\n";
            }
        }
        return status;
    });

    // hyper
    auto * hyper = app.add_subcommand("hyper", "3-uniform hypergraph side");
    hyper->require_subcommand(1);
    string h3_file;
    bool from_grid = false;
    auto * hyper_fg = hyper->add_subcommand("fg", "Apply f_g (or its inverse with --from-grid)");
    hyper_fg->add_option("input", h3_file)->required();
    hyper_fg->add_flag("--from-grid", from_grid, "Input is a grid; output the 3-graph");
    hyper_fg->add_option("--out", out);
    on(hyper_fg, [&] {
        if (from_grid)
            emit(three_graph_to_json(fg_from_grid(pattern_or_file(h3_file))), out);
        else
            emit(grid_to_json(fg_to_grid(three_graph_from_json(read_file(h3_file))).grid), out);
        return ok;
    });
    int t = 4;
    auto * hyper_tight = hyper->add_subcommand("tight", "Tight cycle C_t as JSON");
    hyper_tight->add_option("t", t)->required();
    hyper_tight->add_option("--out", out);
    on(hyper_tight, [&] {
        emit(three_graph_to_json(tight_cycle(t)), out);
        return ok;
    });
    bool sides = false;
    auto * hyper_count = hyper->add_subcommand("count", "Count embeddings t_3(H, G)");
    hyper_count->add_option("H", h_file)->required();
    hyper_count->add_option("G", g_file)->required();
    hyper_count->add_flag("--sides", sides, "Only maps sending X into X and Y into Y");
    on(hyper_count, [&] {
        cout << count_embeddings_3(three_graph_from_json(read_file(h_file)), three_graph_from_json(read_file(g_file)),
                    sides)
             << "\n";
        return ok;
    });
    auto * hyper_star = hyper->add_subcommand("star-bound", "Bound R(H, S_k) through gr(f_g(H), K_k)");
    hyper_star->add_option("H", h_file)->required();
    hyper_star->add_option("--k", k)->required();
    hyper_star->add_option("--nmax", nmax, "Compute gr exactly up to this N (0 to skip)");
    on(hyper_star, [&] {
        auto r = star_ramsey_bound(three_graph_from_json(read_file(h_file)), k, nmax, globals.workers);
        cout << "f_g(H) = " << grid_to_json(r.grid) << "\n";
        for (auto & note : r.notes)
            cout << note << "\n";
        return ok;
    });

    // meh
    auto * meh = app.add_subcommand("meh", "Column colourings");
    meh->require_subcommand(1);
    auto * meh_color = meh->add_subcommand("color", "Print chi_G for every column pair");
    meh_color->add_option("G", g_file)->required();
    on(meh_color, [&] {
        auto chi = column_coloring(load_grid(g_file));
        for (int a = 1; a <= chi.columns(); ++a)
            for (int b = a + 1; b <= chi.columns(); ++b)
                cout << a << " " << b << " " << colour_string(chi.colour(a, b)) << "\n";
        return ok;
    });
    bool no_aligned = false;
    auto * meh_find = meh->add_subcommand("find", "Colour-compatible column injection for H");
    meh_find->add_option("G", g_file)->required();
    meh_find->add_option("H", h_file)->required();
    meh_find->add_flag("--no-aligned", no_aligned, "Reject H with two edges between the same columns");
    on(meh_find, [&] {
        auto chi = column_coloring(load_grid(g_file));
        auto r = find_colored_pattern(chi, pattern_or_file(h_file), no_aligned);
        if (r) {
            json j;
            j["column_map"] = *r;
            cout << j.dump() << "\n";
        }
        else
            cout << "none\n";
        return ok;
    });
    string colour_text;
    auto * meh_avoid = meh->add_subcommand("avoid", "Largest column set with no pair coloured exactly T");
    meh_avoid->add_option("G", g_file)->required();
    meh_avoid->add_option("--color", colour_text, "Rows of T, e.g. \"1,3\"")->required();
    on(meh_avoid, [&] {
        auto chi = column_coloring(load_grid(g_file));
        auto r = color_restricted_subset(chi, parse_colour(colour_text, chi.rows()));
        json j;
        j["columns"] = r.columns;
        j["size"] = r.columns.size();
        j["exact"] = r.exact;
        cout << j.dump() << "\n";
        return ok;
    });

    // reproduce
    vector<int> only;
    auto * reproduce = app.add_subcommand("reproduce", "Run the acceptance suite");
    reproduce->add_option("--only", only, "Criterion numbers to run");
    on(reproduce, [&] {
        acceptance::Options o;
        o.seed = globals.seed;
        o.workers = globals.workers;
        vector<acceptance::Criterion> results;
        if (only.empty())
            results = acceptance::run_all(o);
        else
            for (int id : only)
                results.push_back(acceptance::run_one(id, o));
        std::ostringstream report;
        bool all = true;
        for (auto & c : results) {
            acceptance::print(cout, c, true);
            acceptance::print(report, c, false);
            all = all && c.pass;
        }
        if (! globals.out_dir.empty())
            write_file(out_path("acceptance.txt"), report.str());
        cout << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
        return all ? ok : verification_failed;
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return usage;
    }

    try {
        return action ? action() : usage;
    }
    catch (const InvalidGrid & e) {
        cerr << "invalid grid: " << e.what() << "\n";
        return verification_failed;
    }
    catch (const gridram::ParseError & e) {
        cerr << "parse error: " << e.what() << "\n";
        return verification_failed;
    }
    catch (const InvalidArgument & e) {
        cerr << "error: " << e.what() << "\n";
        return usage;
    }
    catch (const CapExceeded & e) {
        cerr << "cap exceeded: " << e.what() << "\n";
        return verification_failed;
    }
    catch (const std::exception & e) {
        cerr << "error: " << e.what() << "\n";
        return verification_failed;
    }
}

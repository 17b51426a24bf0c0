// Python bindings. Grids and 3-graphs cross the boundary as the same JSON
// text the command line reads and writes.

#include <gridram/bridging.hh>
#include <gridram/cnf.hh>
#include <gridram/embed.hh>
#include <gridram/hyper.hh>
#include <gridram/json_io.hh>
#include <gridram/meh_color.hh>
#include <gridram/patterns.hh>
#include <gridram/ramsey.hh>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;

using namespace gridram;
using std::string;

namespace
{
    auto grid(const string & text) -> GridSubgraph { return grid_from_json(text); }

    auto embedding_dict(const Embedding & e) -> py::dict
    {
        py::dict d;
        d["column_map"] = e.column_map;
        d["row_map"] = e.row_map;
        return d;
    }

    auto coclique_dict(const Coclique & c) -> py::dict
    {
        py::dict d;
        d["line"] = to_string(c.kind);
        d["index"] = c.index;
        py::list ps;
        for (auto & p : c.positions)
            ps.append(py::make_tuple(p.x, p.y));
        d["positions"] = ps;
        return d;
    }

    auto steps_list(const ConstructionScript & s) -> py::list
    {
        py::list out;
        for (auto & step : s.steps)
            out.append(py::make_tuple(step.axis == LineKind::column ? "col" : "row", step.source, step.anchor));
        return out;
    }

    auto parse_axis(const string & axis) -> LineKind
    {
        if (axis == "col" || axis == "column")
            return LineKind::column;
        if (axis == "row")
            return LineKind::row;
        throw InvalidArgument("axis must be col or row");
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

    auto big(const BigInt & b) -> py::object
    {
        std::ostringstream s;
        s << b;
        return py::module_::import("builtins").attr("int")(s.str());
    }
}

PYBIND11_MODULE(_gridram, m)
{
    m.doc() = "Grid Ramsey numbers: grid subgraphs, embeddings, bridging and avoider search";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceeded", error.ptr());
    py::register_exception<gridram::ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("pattern", [](const string & name) { return grid_to_json(named(name)); }, py::arg("name"),
        "Named pattern (square, nz_stool, ac:t, as:d, row_clique:m, ...) as grid JSON.");
    m.def("pattern_names", &pattern_names);

    m.def(
        "validate",
        [](const string & text) {
            py::list out;
            for (auto & v : validate(grid_draft_from_json(text)).violations)
                out.append(py::make_tuple(v.kind, v.detail));
            return out;
        },
        py::arg("grid"), "List of (kind, detail) invariant violations; empty when valid.");

    m.def("complement", [](const string & g) { return grid_to_json(complement(grid(g))); }, py::arg("grid"));
    m.def("transpose", [](const string & g) { return grid_to_json(transpose(grid(g))); }, py::arg("grid"));
    m.def(
        "isomorphic",
        [](const string & a, const string & b, bool allow_transpose) {
            return isomorphic(grid(a), grid(b), allow_transpose);
        },
        py::arg("a"), py::arg("b"), py::arg("allow_transpose") = false);

    m.def(
        "count_embeddings",
        [](const string & h, const string & g, int workers) {
            auto p = grid(h), host = grid(g);
            py::gil_scoped_release release;
            return count_embeddings(p, host, workers);
        },
        py::arg("pattern"), py::arg("host"), py::arg("workers") = 1);
    m.def(
        "find_embedding",
        [](const string & h, const string & g) -> py::object {
            auto e = contains(grid(h), grid(g));
            if (! e)
                return py::none();
            return embedding_dict(*e);
        },
        py::arg("pattern"), py::arg("host"));

    m.def(
        "max_coclique",
        [](const string & g) {
            auto r = max_coclique(grid(g));
            return py::make_tuple(r.size, coclique_dict(r.witness));
        },
        py::arg("host"));
    m.def(
        "find_coclique",
        [](const string & g, int k) -> py::object {
            auto c = find_coclique(grid(g), k);
            if (! c)
                return py::none();
            return coclique_dict(*c);
        },
        py::arg("host"), py::arg("k"));

    m.def(
        "bridge",
        [](const string & g, const string & axis, int source, int anchor) {
            return grid_to_json(bridge(grid(g), {parse_axis(axis), source, anchor}));
        },
        py::arg("grid"), py::arg("axis"), py::arg("source"), py::arg("anchor"));
    m.def(
        "construction_script",
        [](const string & kind, int n) {
            if (kind == "ac")
                return steps_list(ac_script(n));
            if (kind == "as")
                return steps_list(as_script(n));
            throw InvalidArgument("script kind must be ac or as");
        },
        py::arg("kind"), py::arg("n"));
    m.def(
        "replay",
        [](const std::vector<std::tuple<string, int, int>> & steps) {
            ConstructionScript s;
            for (auto & [axis, src, anchor] : steps)
                s.steps.push_back({parse_axis(axis), src, anchor});
            return grid_to_json(replay(s));
        },
        py::arg("steps"));
    m.def(
        "is_bridging_constructible",
        [](const string & h, bool exact) -> py::object {
            auto r = is_bridging_constructible(grid(h), exact);
            if (! r)
                return py::none();
            py::dict d;
            d["steps"] = steps_list(r->script);
            d["embedding"] = embedding_dict(r->embedding);
            return d;
        },
        py::arg("pattern"), py::arg("exact") = false);

    m.def(
        "gr_exact",
        [](const string & h, int k, int n_max, const string & method, int workers) {
            auto p = grid(h);
            auto mth = parse_method(method);
            GrResult r;
            {
                py::gil_scoped_release release;
                r = gr_exact(p, k, n_max, mth, workers);
            }
            py::dict d;
            d["value"] = r.value ? py::object(py::int_(*r.value)) : py::object(py::none());
            d["lower_bound"] = r.lower_bound;
            d["status"] = r.status;
            py::list witnesses;
            for (auto & level : r.levels)
                if (level.result.witness)
                    witnesses.append(py::make_tuple(level.n, grid_to_json(*level.result.witness)));
            d["witnesses"] = witnesses;
            return d;
        },
        py::arg("pattern"), py::arg("k"), py::arg("n_max"), py::arg("method") = "auto", py::arg("workers") = 1);

    m.def(
        "encode_cnf", [](const string & h, int k, int n) { return to_dimacs(encode_cnf(grid(h), k, n)); },
        py::arg("pattern"), py::arg("k"), py::arg("n"), "Avoidance formula as DIMACS text.");
    m.def(
        "decode_model",
        [](const string & dimacs, const string & model) {
            auto cnf = parse_dimacs(dimacs);
            auto parsed = parse_model(model, cnf.variables());
            py::dict d;
            d["unsatisfiable"] = parsed.unsatisfiable;
            if (parsed.unsatisfiable)
                return d;
            auto r = decode_model(cnf, parsed.values);
            d["satisfies_clauses"] = r.satisfies_clauses;
            d["avoids_pattern"] = r.avoids_pattern;
            d["avoids_cocliques"] = r.avoids_cocliques;
            d["ok"] = r.ok();
            d["witness"] = grid_to_json(r.witness);
            return d;
        },
        py::arg("dimacs"), py::arg("model"));
    m.def(
        "evaluate_cnf",
        [](const string & dimacs) -> py::object {
            auto model = evaluate_cnf(parse_dimacs(dimacs));
            if (! model)
                return py::none();
            return py::cast(*model);
        },
        py::arg("dimacs"), "Exhaustive evaluation: the least model, or None if unsatisfiable.");

    m.def(
        "product_lower_bound",
        [](const string & edge_list, int k) {
            auto r = product_lower_bound(parse_edge_list(edge_list), k);
            py::dict d;
            d["grid"] = grid_to_json(r.grid);
            d["triangle_free"] = r.triangle_free;
            d["independence"] = r.independence;
            d["ac6_free"] = r.ac6_free;
            d["certifies"] = r.certifies;
            return d;
        },
        py::arg("edge_list"), py::arg("k"));
    m.def(
        "find_ac6_or_coclique",
        [](const string & g, int k) {
            auto r = find_ac6_or_coclique(grid(g), k);
            py::dict d;
            d["kind"] = to_string(r.certificate.kind);
            d["embedding"] = r.certificate.embedding ? py::object(embedding_dict(*r.certificate.embedding))
                                                     : py::object(py::none());
            d["coclique"] = r.certificate.coclique ? py::object(coclique_dict(*r.certificate.coclique))
                                                   : py::object(py::none());
            d["note"] = r.certificate.note;
            d["completeness_threshold"] = big(r.completeness_threshold);
            return d;
        },
        py::arg("host"), py::arg("k"));
    m.def(
        "uniform_subgrid",
        [](const string & g, int m) -> py::object {
            auto s = uniform_subgrid(grid(g), m);
            if (! s)
                return py::none();
            py::dict d;
            d["columns"] = s->columns;
            d["rows"] = s->rows;
            d["colours"] = py::make_tuple(s->horizontal_colour, s->vertical_colour);
            return d;
        },
        py::arg("colouring"), py::arg("m"));

    m.def("tight_cycle", [](int t) { return three_graph_to_json(tight_cycle(t)); }, py::arg("t"));
    m.def("star", [](int k) { return three_graph_to_json(star(k)); }, py::arg("k"));
    m.def(
        "fg_to_grid", [](const string & h) { return grid_to_json(fg_to_grid(three_graph_from_json(h)).grid); },
        py::arg("three_graph"));
    m.def(
        "fg_from_grid", [](const string & g) { return three_graph_to_json(fg_from_grid(grid(g))); }, py::arg("grid"));
    m.def(
        "count_embeddings_3",
        [](const string & h, const string & g, bool sides) {
            return count_embeddings_3(three_graph_from_json(h), three_graph_from_json(g), sides);
        },
        py::arg("pattern"), py::arg("host"), py::arg("respect_bipartition") = false);

    m.def(
        "column_coloring",
        [](const string & g) {
            auto chi = column_coloring(grid(g));
            py::dict d;
            for (int a = 1; a <= chi.columns(); ++a)
                for (int b = a + 1; b <= chi.columns(); ++b) {
                    py::list rows;
                    for (int y = 1; y <= chi.rows(); ++y)
                        if ((chi.colour(a, b) >> (y - 1)) & 1)
                            rows.append(y);
                    d[py::make_tuple(a, b)] = rows;
                }
            return d;
        },
        py::arg("grid"), "Maps each column pair (a, b), a < b, to the rows joining them.");
}

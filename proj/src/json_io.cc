#include <gridram/json_io.hh>

#include "json.hpp"

#include <fstream>
#include <sstream>

using json = nlohmann::ordered_json;
using std::string;
using std::vector;

namespace gridram
{
    namespace
    {
        auto parse(const string & text) -> json
        {
            try {
                return json::parse(text);
            }
            catch (const json::exception & e) {
                throw ParseError(string("invalid JSON: ") + e.what());
            }
        }

        auto need(const json & j, const char * key) -> const json &
        {
            if (! j.is_object() || ! j.contains(key))
                throw ParseError(string("missing field '") + key + "'");
            return j.at(key);
        }

        auto as_int(const json & j, const char * what) -> int
        {
            if (! j.is_number_integer())
                throw ParseError(string(what) + " must hold integers");
            return j.get<int>();
        }

        auto int_tuple(const json & j, std::size_t n, const char * what) -> vector<int>
        {
            if (! j.is_array() || j.size() != n)
                throw ParseError(string(what) + " entries must be arrays of " + std::to_string(n) + " integers");
            vector<int> result;
            for (auto & v : j)
                result.push_back(as_int(v, what));
            return result;
        }

        auto int_list(const json & j, const char * what) -> vector<int>
        {
            if (! j.is_array())
                throw ParseError(string(what) + " must be an array");
            vector<int> result;
            for (auto & v : j)
                result.push_back(as_int(v, what));
            return result;
        }

        auto tuples(const json & j, const char * key, std::size_t n) -> vector<vector<int>>
        {
            vector<vector<int>> result;
            if (! j.contains(key))
                return result;
            if (! j[key].is_array())
                throw ParseError(string(key) + " must be an array");
            for (auto & e : j[key])
                result.push_back(int_tuple(e, n, key));
            return result;
        }
    }

    auto grid_to_json(const GridSubgraph & g) -> string
    {
        json j;
        j["columns"] = g.columns();
        j["rows"] = g.rows();
        j["spanning"] = g.spanning();
        if (! g.spanning()) {
            json vs = json::array();
            for (auto & p : g.vertices())
                vs.push_back({p.x, p.y});
            j["vertices"] = vs;
        }
        json hs = json::array(), ws = json::array();
        for (auto & e : g.h_edges())
            hs.push_back({e.x1, e.x2, e.y});
        for (auto & e : g.v_edges())
            ws.push_back({e.x, e.y1, e.y2});
        j["h_edges"] = hs;
        j["v_edges"] = ws;
        return j.dump();
    }

    auto grid_draft_from_json(const string & text) -> GridDraft
    {
        auto j = parse(text);
        GridDraft d;
        d.columns = as_int(need(j, "columns"), "columns");
        d.rows = as_int(need(j, "rows"), "rows");
        if (j.contains("spanning")) {
            if (! j["spanning"].is_boolean())
                throw ParseError("spanning must be a boolean");
            d.spanning = j["spanning"].get<bool>();
        }
        if (j.contains("vertices")) {
            vector<Point> vs;
            for (auto & t : tuples(j, "vertices", 2))
                vs.push_back({t[0], t[1]});
            d.vertices = vs;
        }
        for (auto & t : tuples(j, "h_edges", 3))
            d.edges.push_back({{t[0], t[2]}, {t[1], t[2]}});
        for (auto & t : tuples(j, "v_edges", 3))
            d.edges.push_back({{t[0], t[1]}, {t[0], t[2]}});
        return d;
    }

    auto grid_from_json(const string & text) -> GridSubgraph
    {
        return GridSubgraph::from_draft(grid_draft_from_json(text));
    }

    auto three_graph_to_json(const ThreeGraph & h) -> string
    {
        json j;
        j["vertices"] = h.vertices;
        json es = json::array();
        for (auto & e : h.edges)
            es.push_back({e[0], e[1], e[2]});
        j["edges"] = es;
        if (h.bipartition) {
            json b;
            b["X"] = h.bipartition->x;
            b["Y"] = h.bipartition->y;
            j["bipartition"] = b;
        }
        return j.dump();
    }

    auto three_graph_from_json(const string & text) -> ThreeGraph
    {
        auto j = parse(text);
        auto vertices = int_list(need(j, "vertices"), "vertices");
        vector<Triple> edges;
        for (auto & t : tuples(j, "edges", 3))
            edges.push_back({t[0], t[1], t[2]});
        std::optional<Bipartition> b;
        if (j.contains("bipartition") && ! j["bipartition"].is_null()) {
            auto & jb = j["bipartition"];
            b = Bipartition{int_list(need(jb, "X"), "X"), int_list(need(jb, "Y"), "Y")};
        }
        return make_three_graph(std::move(vertices), std::move(edges), std::move(b));
    }

    auto read_file(const string & path) -> string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw Error("cannot read " + path);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    auto write_file(const string & path, const string & contents) -> void
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw Error("cannot write " + path);
        out << contents;
        if (! out)
            throw Error("write failed for " + path);
    }
}

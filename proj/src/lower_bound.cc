#include <gridram/patterns.hh>
#include <gridram/ramsey.hh>

#include <algorithm>
#include <sstream>

using std::pair;
using std::string;
using std::vector;

namespace gridram
{
    using std::to_string;

    auto make_simple_graph(int n, vector<pair<int, int>> edges) -> SimpleGraph
    {
        if (n < 0)
            throw InvalidArgument("vertex count must be nonnegative");
        for (auto & [u, v] : edges) {
            if (u < 1 || u > n || v < 1 || v > n)
                throw InvalidArgument("edge {" + to_string(u) + "," + to_string(v) + "} has an endpoint outside 1.." +
                    to_string(n));
            if (u == v)
                throw InvalidArgument("loop at vertex " + to_string(u));
            if (u > v)
                std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        return {n, std::move(edges)};
    }

    auto cycle_graph(int n) -> SimpleGraph
    {
        if (n < 3)
            throw InvalidArgument("a cycle needs at least 3 vertices");
        vector<pair<int, int>> e;
        for (int i = 1; i <= n; ++i)
            e.push_back({i, i % n + 1});
        return make_simple_graph(n, e);
    }

    auto complete_graph(int n) -> SimpleGraph
    {
        vector<pair<int, int>> e;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                e.push_back({u, v});
        return make_simple_graph(n, e);
    }

    namespace
    {
        auto as_line(const SimpleGraph & g) -> LineGraph
        {
            return LineGraph{LineKind::row, 1, g.n, g.edges};
        }
    }

    auto is_triangle_free(const SimpleGraph & g) -> bool
    {
        auto line = as_line(g);
        for (auto & [u, v] : g.edges)
            for (int w = v + 1; w <= g.n; ++w)
                if (line.adjacent(u, w) && line.adjacent(v, w))
                    return false;
        return true;
    }

    auto independence_number(const SimpleGraph & g) -> int
    {
        if (g.n == 0)
            return 0;
        Caps caps = default_caps();
        caps.coclique_line = std::max(caps.coclique_line, g.n);
        return static_cast<int>(max_independent_set(as_line(g), caps).size());
    }

    auto parse_edge_list(const string & text) -> SimpleGraph
    {
        std::istringstream in(text);
        string line;
        int n = -1;
        vector<pair<int, int>> edges;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (auto hash = line.find('#'); hash != string::npos)
                line.erase(hash);
            std::istringstream words(line);
            vector<long> values;
            string token;
            while (words >> token) {
                try {
                    std::size_t used = 0;
                    values.push_back(std::stol(token, &used));
                    if (used != token.size())
                        throw std::invalid_argument(token);
                }
                catch (const std::exception &) {
                    throw ParseError("line " + to_string(line_no) + ": '" + token + "' is not an integer");
                }
            }
            if (values.empty())
                continue;
            if (n < 0) {
                if (values.size() != 1)
                    throw ParseError("line " + to_string(line_no) + ": expected the vertex count");
                n = static_cast<int>(values[0]);
                continue;
            }
            if (values.size() != 2)
                throw ParseError("line " + to_string(line_no) + ": expected 'u v'");
            edges.push_back({static_cast<int>(values[0]), static_cast<int>(values[1])});
        }
        if (n < 0)
            throw ParseError("edge list has no vertex count");
        try {
            return make_simple_graph(n, std::move(edges));
        }
        catch (const InvalidArgument & e) {
            throw ParseError(e.what());
        }
    }

    auto format_edge_list(const SimpleGraph & g) -> string
    {
        std::ostringstream out;
        out << g.n << "\n";
        for (auto & [u, v] : g.edges)
            out << u << " " << v << "\n";
        return out.str();
    }

    auto product_grid(const SimpleGraph & col_graph) -> GridSubgraph
    {
        int n = col_graph.n;
        if (n < 1)
            throw InvalidArgument("the column graph needs at least one vertex");
        vector<HEdge> h;
        vector<VEdge> v;
        for (int y = 1; y <= n; ++y)
            for (auto & [a, b] : col_graph.edges)
                h.push_back({a, b, y});
        for (int x = 1; x <= n; ++x)
            for (int y1 = 1; y1 <= n; ++y1)
                for (int y2 = y1 + 1; y2 <= n; ++y2)
                    v.push_back({x, y1, y2});
        return GridSubgraph::from_edges(n, n, std::move(h), std::move(v), std::nullopt, true);
    }

    auto product_lower_bound(const SimpleGraph & col_graph, int k, const Caps & caps) -> LowerBoundReport
    {
        if (k < 1)
            throw InvalidArgument("k must be positive");
        LowerBoundReport r;
        r.grid = product_grid(col_graph);
        r.k = k;
        r.triangle_free = is_triangle_free(col_graph);
        r.independence = independence_number(col_graph);
        r.ac6_copy = contains(alternating_cycle(6), r.grid);
        r.ac6_free = ! r.ac6_copy;
        r.coclique = find_coclique(r.grid, k, caps);
        r.certifies = r.ac6_free && ! r.coclique;
        return r;
    }
}

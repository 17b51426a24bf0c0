#include <gridram/patterns.hh>

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

using std::optional;
using std::pair;
using std::string;
using std::string_view;
using std::vector;

namespace gridram
{
    using std::to_string;

    namespace
    {
        auto find(vector<int> & parent, int a) -> int
        {
            while (parent[a] != a)
                a = parent[a] = parent[parent[a]];
            return a;
        }

        auto parse_parameter(string_view name, string_view text) -> int
        {
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size())
                throw InvalidArgument("pattern '" + string(name) + "' needs an integer parameter, got '" + string(text) + "'");
            return value;
        }
    }

    auto alternating_cycle(int t) -> GridSubgraph
    {
        if (t < 4 || t % 2 != 0)
            throw InvalidArgument("alternating cycle needs an even length of at least 4, got " + to_string(t));
        int m = t / 2;
        vector<HEdge> h;
        vector<VEdge> v;
        for (int i = 1; i < m; ++i) {
            h.push_back({i, i + 1, i});
            v.push_back({i + 1, i, i + 1});
        }
        h.push_back({1, m, m});
        v.push_back({1, 1, m});
        return GridSubgraph::from_edges(m, m, std::move(h), std::move(v));
    }

    auto aligned_staircase(int d) -> GridSubgraph
    {
        if (d < 2)
            throw InvalidArgument("aligned staircase needs d >= 2, got " + to_string(d));
        std::set<HEdge> h;
        std::set<VEdge> v;
        for (int i = 1; i <= d; ++i)
            h.insert({i, i + 1, i});
        for (int i = 1; i < d; ++i)
            v.insert({i + 1, i, i + 1});
        h.insert({1, d + 1, 1});
        h.insert({1, d + 1, d});
        return GridSubgraph::from_edges(d + 1, d, {h.begin(), h.end()}, {v.begin(), v.end()});
    }

    auto first_disconnected_line(const GridSubgraph & g) -> optional<pair<LineKind, int>>
    {
        // union-find over the positions of one line at a time
        auto check = [&](LineKind kind, int index) -> bool {
            int n = kind == LineKind::row ? g.columns() : g.rows();
            vector<int> parent(n + 1);
            std::iota(parent.begin(), parent.end(), 0);
            vector<int> present;
            for (auto & p : g.vertices())
                if ((kind == LineKind::row ? p.y : p.x) == index)
                    present.push_back(kind == LineKind::row ? p.x : p.y);
            if (present.size() <= 1)
                return true;
            if (kind == LineKind::row) {
                for (auto & e : g.h_edges())
                    if (e.y == index)
                        parent[find(parent, e.x1)] = find(parent, e.x2);
            }
            else {
                for (auto & e : g.v_edges())
                    if (e.x == index)
                        parent[find(parent, e.y1)] = find(parent, e.y2);
            }
            int root = find(parent, present.front());
            return std::all_of(present.begin(), present.end(), [&](int a) { return find(parent, a) == root; });
        };

        for (int y = 1; y <= g.rows(); ++y)
            if (! check(LineKind::row, y))
                return pair{LineKind::row, y};
        for (int x = 1; x <= g.columns(); ++x)
            if (! check(LineKind::column, x))
                return pair{LineKind::column, x};
        return std::nullopt;
    }

    auto is_simple(const GridSubgraph & g) -> bool
    {
        return ! first_disconnected_line(g).has_value();
    }

    auto is_connected(const GridSubgraph & g) -> bool
    {
        auto & vs = g.vertices();
        if (vs.empty())
            return true;
        auto index = [&](Point p) {
            return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), p) - vs.begin());
        };
        vector<int> parent(vs.size());
        std::iota(parent.begin(), parent.end(), 0);
        for (auto & e : g.h_edges())
            parent[find(parent, index({e.x1, e.y}))] = find(parent, index({e.x2, e.y}));
        for (auto & e : g.v_edges())
            parent[find(parent, index({e.x, e.y1}))] = find(parent, index({e.x, e.y2}));
        int root = find(parent, 0);
        for (int i = 0; i < static_cast<int>(vs.size()); ++i)
            if (find(parent, i) != root)
                return false;
        return true;
    }

    auto is_simple_tree(const GridSubgraph & g) -> bool
    {
        return ! g.vertices().empty() && g.edge_count() + 1 == g.vertices().size() && is_connected(g) && is_simple(g);
    }

    auto simple_cycle_from_waypoints(const WaypointCycle & w) -> GridSubgraph
    {
        auto & pts = w.waypoints;
        if (pts.size() < 3)
            throw InvalidArgument("a waypoint cycle needs at least 3 points, got " + to_string(pts.size()));
        std::set<Point> distinct(pts.begin(), pts.end());
        if (distinct.size() != pts.size())
            throw InvalidArgument("waypoints must be distinct");

        int columns = 0, rows = 0;
        for (auto & p : pts) {
            if (p.x < 1 || p.y < 1)
                throw InvalidArgument("waypoint coordinates must be positive");
            columns = std::max(columns, p.x);
            rows = std::max(rows, p.y);
        }

        vector<HEdge> h;
        vector<VEdge> v;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            auto a = pts[i], b = pts[(i + 1) % pts.size()];
            if (a.y == b.y)
                h.push_back({std::min(a.x, b.x), std::max(a.x, b.x), a.y});
            else if (a.x == b.x)
                v.push_back({a.x, std::min(a.y, b.y), std::max(a.y, b.y)});
            else
                throw InvalidArgument("waypoints " + to_string(i + 1) + " and " + to_string((i + 1) % pts.size() + 1) +
                    " share neither a row nor a column");
        }

        auto g = GridSubgraph::from_edges(columns, rows, std::move(h), std::move(v), vector<Point>(pts.begin(), pts.end()));
        if (auto bad = first_disconnected_line(g))
            throw InvalidArgument("cycle is not simple: its intersection with " + to_string(bad->first) + " " +
                to_string(bad->second) + " is disconnected");
        return g;
    }

    auto row_clique(int m) -> GridSubgraph
    {
        if (m < 1)
            throw InvalidArgument("clique size must be positive");
        vector<HEdge> h;
        for (int a = 1; a <= m; ++a)
            for (int b = a + 1; b <= m; ++b)
                h.push_back({a, b, 1});
        vector<Point> vs;
        for (int a = 1; a <= m; ++a)
            vs.push_back({a, 1});
        return GridSubgraph::from_edges(m, 1, std::move(h), {}, std::move(vs));
    }

    auto column_clique(int m) -> GridSubgraph
    {
        return transpose(row_clique(m));
    }

    auto nz_stool() -> GridSubgraph
    {
        return GridSubgraph::from_edges(4, 2,
            {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {1, 3, 2}, {1, 4, 2}, {2, 4, 2}},
            {{1, 1, 2}, {2, 1, 2}, {3, 1, 2}, {4, 1, 2}});
    }

    auto named(string_view name) -> GridSubgraph
    {
        auto colon = name.find(':');
        auto base = name.substr(0, colon);
        optional<int> param;
        if (colon != string_view::npos)
            param = parse_parameter(name, name.substr(colon + 1));

        auto no_param = [&](GridSubgraph g) {
            if (param)
                throw InvalidArgument("pattern '" + string(base) + "' takes no parameter");
            return g;
        };
        auto need_param = [&]() {
            if (! param)
                throw InvalidArgument("pattern '" + string(base) + "' needs a parameter, as in " + string(base) + ":n");
            return *param;
        };

        if (base == "square")
            return no_param(alternating_cycle(4));
        if (base == "nz_stool")
            return no_param(nz_stool());
        if (base == "vertex")
            return no_param(GridSubgraph::single_vertex());
        if (base == "hedge")
            return no_param(GridSubgraph::from_edges(2, 1, {{1, 2, 1}}, {}));
        if (base == "vedge")
            return no_param(GridSubgraph::from_edges(1, 2, {}, {{1, 1, 2}}));
        if (base == "staircase_path")
            return no_param(GridSubgraph::from_edges(3, 3, {{1, 2, 3}, {2, 3, 2}, {1, 2, 1}, {2, 3, 1}},
                {{1, 2, 3}, {2, 2, 3}, {3, 1, 2}}));
        if (base == "hpath" || base == "vpath") {
            int n = need_param();
            if (n < 1)
                throw InvalidArgument("path needs at least one vertex");
            vector<HEdge> h;
            for (int a = 1; a < n; ++a)
                h.push_back({a, a + 1, 1});
            vector<Point> vs;
            for (int a = 1; a <= n; ++a)
                vs.push_back({a, 1});
            auto g = GridSubgraph::from_edges(n, 1, std::move(h), {}, std::move(vs));
            return base == "hpath" ? g : transpose(g);
        }
        if (base == "row_clique")
            return row_clique(need_param());
        if (base == "column_clique")
            return column_clique(need_param());
        if (base == "ac")
            return alternating_cycle(need_param());
        if (base == "as")
            return aligned_staircase(need_param());

        string known;
        for (auto & n : pattern_names())
            known += (known.empty() ? "" : ", ") + n;
        throw InvalidArgument("unknown pattern '" + string(name) + "' (known: " + known + ")");
    }

    auto pattern_names() -> vector<string>
    {
        return {"square", "nz_stool", "vertex", "hedge", "vedge", "staircase_path", "hpath:n", "vpath:n",
            "row_clique:m", "column_clique:m", "ac:t", "as:d"};
    }
}

#include <gridram/grid.hh>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

using std::optional;
using std::pair;
using std::string;
using std::vector;

namespace gridram
{
    using std::to_string;

    namespace
    {
        auto point_string(Point p) -> string
        {
            return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
        }

        auto in_range(Point p, int columns, int rows) -> bool
        {
            return p.x >= 1 && p.x <= columns && p.y >= 1 && p.y <= rows;
        }

        auto check_bijection(const vector<int> & perm, int n, const char * what) -> void
        {
            if (static_cast<int>(perm.size()) != n)
                throw InvalidArgument(string(what) + " permutation has size " + to_string(perm.size()) +
                    ", expected " + to_string(n));
            vector<char> seen(n + 1, 0);
            for (int image : perm) {
                if (image < 1 || image > n || seen[image])
                    throw InvalidArgument(string(what) + " permutation is not a bijection on [" + to_string(n) + "]");
                seen[image] = 1;
            }
        }

        auto resolve_vertices(const GridDraft & draft) -> vector<Point>
        {
            if (draft.vertices)
                return *draft.vertices;
            vector<Point> result;
            if (draft.spanning) {
                for (int x = 1; x <= draft.columns; ++x)
                    for (int y = 1; y <= draft.rows; ++y)
                        result.push_back({x, y});
            }
            else {
                std::set<Point> ends;
                for (auto & [a, b] : draft.edges) {
                    ends.insert(a);
                    ends.insert(b);
                }
                result.assign(ends.begin(), ends.end());
            }
            return result;
        }
    }

    auto to_string(LineKind kind) -> string
    {
        return kind == LineKind::row ? "row" : "column";
    }

    auto ValidationReport::has(const string & kind) const -> bool
    {
        return std::any_of(violations.begin(), violations.end(), [&](auto & v) { return v.kind == kind; });
    }

    auto ValidationReport::to_string() const -> string
    {
        if (ok())
            return "ok";
        std::ostringstream out;
        for (std::size_t i = 0; i < violations.size(); ++i)
            out << (i ? "; " : "") << violations[i].kind << ": " << violations[i].detail;
        return out.str();
    }

    InvalidGrid::InvalidGrid(ValidationReport report) :
        InvalidArgument("invalid grid subgraph: " + report.to_string()),
        _report(std::move(report))
    {
    }

    auto validate(const GridDraft & draft) -> ValidationReport
    {
        ValidationReport report;
        auto fail = [&](string kind, string detail) { report.violations.push_back({std::move(kind), std::move(detail)}); };

        if (draft.columns < 1 || draft.rows < 1) {
            fail("bad dimensions", to_string(draft.columns) + "x" + to_string(draft.rows));
            return report;
        }

        auto vertices = resolve_vertices(draft);
        std::set<Point> vertex_set;
        for (auto & p : vertices) {
            if (! in_range(p, draft.columns, draft.rows))
                fail("vertex out of range", point_string(p));
            else if (! vertex_set.insert(p).second)
                fail("duplicate vertex", point_string(p));
        }

        std::set<pair<Point, Point>> seen_edges;
        for (auto [a, b] : draft.edges) {
            auto label = "{" + point_string(a) + "," + point_string(b) + "}";
            if (! in_range(a, draft.columns, draft.rows) || ! in_range(b, draft.columns, draft.rows)) {
                fail("edge endpoint out of range", label);
                continue;
            }
            if (a == b) {
                fail("self-loop", label);
                continue;
            }
            if (a.x != b.x && a.y != b.y) {
                fail("edge not within a row or column", label);
                continue;
            }
            if (! vertex_set.contains(a) || ! vertex_set.contains(b))
                fail("edge endpoint not a vertex", label);
            if (b < a)
                std::swap(a, b);
            if (! seen_edges.insert({a, b}).second)
                fail("duplicate edge", label);
        }

        if (draft.spanning && vertex_set.size() != static_cast<std::size_t>(draft.columns) * draft.rows)
            fail("spanning mismatch",
                to_string(vertex_set.size()) + " of " + to_string(draft.columns * draft.rows) + " lattice points present");

        return report;
    }

    auto validate(const GridSubgraph & g) -> ValidationReport
    {
        return validate(g.to_draft());
    }

    auto GridSubgraph::from_draft(const GridDraft & draft) -> GridSubgraph
    {
        auto report = validate(draft);
        if (! report.ok())
            throw InvalidGrid(std::move(report));

        GridSubgraph g;
        g._columns = draft.columns;
        g._rows = draft.rows;
        g._spanning = draft.spanning;
        g._vertices = resolve_vertices(draft);
        std::sort(g._vertices.begin(), g._vertices.end());
        for (auto [a, b] : draft.edges) {
            if (a.y == b.y)
                g._h_edges.push_back({std::min(a.x, b.x), std::max(a.x, b.x), a.y});
            else
                g._v_edges.push_back({a.x, std::min(a.y, b.y), std::max(a.y, b.y)});
        }
        std::sort(g._h_edges.begin(), g._h_edges.end());
        std::sort(g._v_edges.begin(), g._v_edges.end());
        return g;
    }

    auto GridSubgraph::from_edges(int columns, int rows, vector<HEdge> h_edges, vector<VEdge> v_edges,
        optional<vector<Point>> vertices, bool spanning) -> GridSubgraph
    {
        GridDraft draft{columns, rows, spanning, std::move(vertices), {}};
        draft.edges.reserve(h_edges.size() + v_edges.size());
        for (auto & e : h_edges)
            draft.edges.push_back({{e.x1, e.y}, {e.x2, e.y}});
        for (auto & e : v_edges)
            draft.edges.push_back({{e.x, e.y1}, {e.x, e.y2}});
        return from_draft(draft);
    }

    auto GridSubgraph::empty_spanning(int columns, int rows) -> GridSubgraph
    {
        return from_edges(columns, rows, {}, {}, std::nullopt, true);
    }

    auto GridSubgraph::complete(int columns, int rows) -> GridSubgraph
    {
        vector<HEdge> h;
        vector<VEdge> v;
        for (int y = 1; y <= rows; ++y)
            for (int x1 = 1; x1 <= columns; ++x1)
                for (int x2 = x1 + 1; x2 <= columns; ++x2)
                    h.push_back({x1, x2, y});
        for (int x = 1; x <= columns; ++x)
            for (int y1 = 1; y1 <= rows; ++y1)
                for (int y2 = y1 + 1; y2 <= rows; ++y2)
                    v.push_back({x, y1, y2});
        return from_edges(columns, rows, std::move(h), std::move(v), std::nullopt, true);
    }

    auto GridSubgraph::single_vertex() -> GridSubgraph
    {
        return from_edges(1, 1, {}, {}, vector<Point>{{1, 1}}, true);
    }

    auto GridSubgraph::has_vertex(Point p) const -> bool
    {
        return std::binary_search(_vertices.begin(), _vertices.end(), p);
    }

    auto GridSubgraph::has_h_edge(int x1, int x2, int y) const -> bool
    {
        if (x1 > x2)
            std::swap(x1, x2);
        return std::binary_search(_h_edges.begin(), _h_edges.end(), HEdge{x1, x2, y});
    }

    auto GridSubgraph::has_v_edge(int x, int y1, int y2) const -> bool
    {
        if (y1 > y2)
            std::swap(y1, y2);
        return std::binary_search(_v_edges.begin(), _v_edges.end(), VEdge{x, y1, y2});
    }

    auto GridSubgraph::to_draft() const -> GridDraft
    {
        GridDraft draft{_columns, _rows, _spanning, _vertices, {}};
        for (auto & e : _h_edges)
            draft.edges.push_back({{e.x1, e.y}, {e.x2, e.y}});
        for (auto & e : _v_edges)
            draft.edges.push_back({{e.x, e.y1}, {e.x, e.y2}});
        return draft;
    }

    auto complement(const GridSubgraph & g) -> GridSubgraph
    {
        if (! g.spanning())
            throw InvalidArgument("complement is only defined for spanning grid subgraphs");
        vector<HEdge> h;
        vector<VEdge> v;
        for (int y = 1; y <= g.rows(); ++y)
            for (int x1 = 1; x1 <= g.columns(); ++x1)
                for (int x2 = x1 + 1; x2 <= g.columns(); ++x2)
                    if (! g.has_h_edge(x1, x2, y))
                        h.push_back({x1, x2, y});
        for (int x = 1; x <= g.columns(); ++x)
            for (int y1 = 1; y1 <= g.rows(); ++y1)
                for (int y2 = y1 + 1; y2 <= g.rows(); ++y2)
                    if (! g.has_v_edge(x, y1, y2))
                        v.push_back({x, y1, y2});
        return GridSubgraph::from_edges(g.columns(), g.rows(), std::move(h), std::move(v), std::nullopt, true);
    }

    auto degree(const GridSubgraph & g, Point v) -> Degree
    {
        if (! g.has_vertex(v))
            throw InvalidArgument("vertex " + point_string(v) + " is not in the graph");
        Degree d;
        for (auto & e : g.h_edges())
            if (e.y == v.y && (e.x1 == v.x || e.x2 == v.x))
                ++d.horizontal;
        for (auto & e : g.v_edges())
            if (e.x == v.x && (e.y1 == v.y || e.y2 == v.y))
                ++d.vertical;
        return d;
    }

    auto transpose(const GridSubgraph & g) -> GridSubgraph
    {
        vector<Point> vertices;
        for (auto & p : g.vertices())
            vertices.push_back({p.y, p.x});
        vector<HEdge> h;
        vector<VEdge> v;
        for (auto & e : g.v_edges())
            h.push_back({e.y1, e.y2, e.x});
        for (auto & e : g.h_edges())
            v.push_back({e.y, e.x1, e.x2});
        return GridSubgraph::from_edges(g.rows(), g.columns(), std::move(h), std::move(v), std::move(vertices),
            g.spanning());
    }

    auto permute(const GridSubgraph & g, const vector<int> & column_perm, const vector<int> & row_perm) -> GridSubgraph
    {
        check_bijection(column_perm, g.columns(), "column");
        check_bijection(row_perm, g.rows(), "row");
        auto cx = [&](int x) { return column_perm[x - 1]; };
        auto ry = [&](int y) { return row_perm[y - 1]; };

        vector<Point> vertices;
        for (auto & p : g.vertices())
            vertices.push_back({cx(p.x), ry(p.y)});
        vector<HEdge> h;
        vector<VEdge> v;
        for (auto & e : g.h_edges())
            h.push_back({std::min(cx(e.x1), cx(e.x2)), std::max(cx(e.x1), cx(e.x2)), ry(e.y)});
        for (auto & e : g.v_edges())
            v.push_back({cx(e.x), std::min(ry(e.y1), ry(e.y2)), std::max(ry(e.y1), ry(e.y2))});
        return GridSubgraph::from_edges(g.columns(), g.rows(), std::move(h), std::move(v), std::move(vertices),
            g.spanning());
    }

    auto apply(const GridSubgraph & g, const GridIsoWitness & w) -> GridSubgraph
    {
        return w.transposed ? permute(transpose(g), w.column_perm, w.row_perm) : permute(g, w.column_perm, w.row_perm);
    }

    auto LineGraph::adjacent(int a, int b) const -> bool
    {
        if (a > b)
            std::swap(a, b);
        return std::binary_search(adjacency.begin(), adjacency.end(), pair{a, b});
    }

    auto LineGraph::degree(int a) const -> int
    {
        return static_cast<int>(std::count_if(adjacency.begin(), adjacency.end(),
            [a](auto & e) { return e.first == a || e.second == a; }));
    }

    auto line_graph(const GridSubgraph & g, LineKind kind, int index) -> LineGraph
    {
        LineGraph line{kind, index, kind == LineKind::row ? g.columns() : g.rows(), {}};
        if (index < 1 || index > (kind == LineKind::row ? g.rows() : g.columns()))
            throw InvalidArgument(to_string(kind) + " " + std::to_string(index) + " is out of range");
        if (kind == LineKind::row) {
            for (auto & e : g.h_edges())
                if (e.y == index)
                    line.adjacency.push_back({e.x1, e.x2});
        }
        else {
            for (auto & e : g.v_edges())
                if (e.x == index)
                    line.adjacency.push_back({e.y1, e.y2});
        }
        std::sort(line.adjacency.begin(), line.adjacency.end());
        return line;
    }

    DenseGrid::DenseGrid(int columns, int rows, bool all_vertices) :
        _columns(columns),
        _rows(rows),
        _vertex(static_cast<std::size_t>(columns) * rows, all_vertices ? 1 : 0),
        _h(static_cast<std::size_t>(rows) * columns * columns, 0),
        _v(static_cast<std::size_t>(columns) * rows * rows, 0)
    {
        if (columns < 1 || rows < 1)
            throw InvalidArgument("grid dimensions must be positive");
    }

    DenseGrid::DenseGrid(const GridSubgraph & g) :
        DenseGrid(g.columns(), g.rows(), false)
    {
        for (auto & p : g.vertices())
            set_vertex(p.x, p.y, true);
        for (auto & e : g.h_edges())
            set_h(e.x1, e.x2, e.y, true);
        for (auto & e : g.v_edges())
            set_v(e.x, e.y1, e.y2, true);
    }

    void DenseGrid::set_vertex(int x, int y, bool present)
    {
        _vertex[(y - 1) * _columns + (x - 1)] = present;
    }

    void DenseGrid::set_h(int x1, int x2, int y, bool present)
    {
        _h[((y - 1) * _columns + (x1 - 1)) * _columns + (x2 - 1)] = present;
        _h[((y - 1) * _columns + (x2 - 1)) * _columns + (x1 - 1)] = present;
    }

    void DenseGrid::set_v(int x, int y1, int y2, bool present)
    {
        _v[((x - 1) * _rows + (y1 - 1)) * _rows + (y2 - 1)] = present;
        _v[((x - 1) * _rows + (y2 - 1)) * _rows + (y1 - 1)] = present;
    }

    auto DenseGrid::to_grid() const -> GridSubgraph
    {
        vector<Point> vertices;
        for (int x = 1; x <= _columns; ++x)
            for (int y = 1; y <= _rows; ++y)
                if (has_vertex(x, y))
                    vertices.push_back({x, y});
        vector<HEdge> h;
        vector<VEdge> v;
        for (int y = 1; y <= _rows; ++y)
            for (int x1 = 1; x1 <= _columns; ++x1)
                for (int x2 = x1 + 1; x2 <= _columns; ++x2)
                    if (has_h(x1, x2, y))
                        h.push_back({x1, x2, y});
        for (int x = 1; x <= _columns; ++x)
            for (int y1 = 1; y1 <= _rows; ++y1)
                for (int y2 = y1 + 1; y2 <= _rows; ++y2)
                    if (has_v(x, y1, y2))
                        v.push_back({x, y1, y2});
        bool spanning = vertices.size() == static_cast<std::size_t>(_columns) * _rows;
        return GridSubgraph::from_edges(_columns, _rows, std::move(h), std::move(v), std::move(vertices), spanning);
    }
}

#include <gridram/bridging.hh>
#include <gridram/patterns.hh>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

using std::optional;
using std::pair;
using std::string;
using std::vector;

namespace gridram
{
    using std::to_string;

    auto to_string(const BridgeStep & s) -> string
    {
        return (s.axis == LineKind::column ? "column " : "row ") + std::to_string(s.source) + " at " +
            (s.axis == LineKind::column ? "row " : "column ") + std::to_string(s.anchor);
    }

    namespace
    {
        auto bridge_column(const GridSubgraph & g, int source, int anchor) -> GridSubgraph
        {
            int c = g.columns(), r = g.rows();
            if (source < 1 || source > c)
                throw InvalidArgument("bridged column " + to_string(source) + " is outside 1.." + to_string(c));
            if (anchor < 1 || anchor > r)
                throw InvalidArgument("anchor row " + to_string(anchor) + " is outside 1.." + to_string(r));

            int fresh = c + 1;
            std::set<HEdge> h(g.h_edges().begin(), g.h_edges().end());
            std::set<VEdge> v(g.v_edges().begin(), g.v_edges().end());
            std::set<Point> vertices(g.vertices().begin(), g.vertices().end());

            for (auto & e : g.h_edges()) {
                if (e.x1 == source)
                    h.insert({e.x2, fresh, e.y});
                else if (e.x2 == source)
                    h.insert({e.x1, fresh, e.y});
            }
            for (auto & e : g.v_edges())
                if (e.x == source)
                    v.insert({fresh, e.y1, e.y2});
            for (auto & p : g.vertices())
                if (p.x == source)
                    vertices.insert({fresh, p.y});
            h.insert({source, fresh, anchor});
            vertices.insert({source, anchor});
            vertices.insert({fresh, anchor});

            bool spanning = g.spanning() && vertices.size() == static_cast<std::size_t>(fresh) * r;
            return GridSubgraph::from_edges(fresh, r, {h.begin(), h.end()}, {v.begin(), v.end()},
                vector<Point>(vertices.begin(), vertices.end()), spanning);
        }

        // Undoes a column bridging in the containment sense: column j is
        // folded into column i. Edges between i and j are dropped (at most
        // one, the bridge); vertices of j move to i except at exempt_row.
        auto fold_column(const GridSubgraph & g, int i, int j, optional<int> exempt_row) -> GridSubgraph
        {
            auto map = [&](int x) { return x == j ? (i > j ? i - 1 : i) : (x > j ? x - 1 : x); };
            std::set<HEdge> h;
            std::set<VEdge> v;
            std::set<Point> vertices;
            for (auto & e : g.h_edges()) {
                int a = map(e.x1), b = map(e.x2);
                if (a != b)
                    h.insert({std::min(a, b), std::max(a, b), e.y});
            }
            for (auto & e : g.v_edges())
                v.insert({map(e.x), e.y1, e.y2});
            for (auto & p : g.vertices())
                if (! (p.x == j && exempt_row && *exempt_row == p.y))
                    vertices.insert({map(p.x), p.y});
            int c = g.columns() - 1;
            bool spanning = g.spanning() && vertices.size() == static_cast<std::size_t>(c) * g.rows();
            return GridSubgraph::from_edges(c, g.rows(), {h.begin(), h.end()}, {v.begin(), v.end()},
                vector<Point>(vertices.begin(), vertices.end()), spanning);
        }

        auto drop_column(const GridSubgraph & g, int j) -> GridSubgraph
        {
            auto map = [&](int x) { return x > j ? x - 1 : x; };
            vector<HEdge> h;
            vector<VEdge> v;
            vector<Point> vertices;
            for (auto & e : g.h_edges())
                if (e.x1 != j && e.x2 != j)
                    h.push_back({map(e.x1), map(e.x2), e.y});
            for (auto & e : g.v_edges())
                if (e.x != j)
                    v.push_back({map(e.x), e.y1, e.y2});
            for (auto & p : g.vertices())
                if (p.x != j)
                    vertices.push_back({map(p.x), p.y});
            return GridSubgraph::from_edges(g.columns() - 1, g.rows(), std::move(h), std::move(v), std::move(vertices),
                g.spanning());
        }

        auto rows_joining(const GridSubgraph & g, int i, int j) -> vector<int>
        {
            vector<int> rows;
            int a = std::min(i, j), b = std::max(i, j);
            for (auto & e : g.h_edges())
                if (e.x1 == a && e.x2 == b)
                    rows.push_back(e.y);
            return rows;
        }

        struct Found
        {
            ConstructionScript script;
            Embedding embedding;
            int replay_columns = 1, replay_rows = 1;
        };

        class Backward
        {
        public:
            Backward(bool exact, const Caps & caps) : _exact(exact), _caps(caps) {}

            auto solve(const GridSubgraph & h) -> optional<Found>
            {
                if (h.columns() == 1 && h.rows() == 1) {
                    bool ok = _exact ? h.vertices().size() == 1 : h.vertices().size() <= 1;
                    if (! ok)
                        return std::nullopt;
                    return Found{{}, Embedding{{1}, {1}}, 1, 1};
                }

                auto labeling = canonical_labeling(h, false, _caps);
                auto it = _memo.find(labeling.form);
                if (it == _memo.end()) {
                    auto representative = apply(h, labeling.witness);
                    auto result = solve_representative(representative);
                    it = _memo.emplace(labeling.form, std::move(result)).first;
                }
                if (! it->second)
                    return std::nullopt;

                Found found = *it->second;
                auto & w = labeling.witness;
                Embedding composed;
                for (int a = 1; a <= h.columns(); ++a)
                    composed.column_map.push_back(found.embedding.column_map[w.column_perm[a - 1] - 1]);
                for (int b = 1; b <= h.rows(); ++b)
                    composed.row_map.push_back(found.embedding.row_map[w.row_perm[b - 1] - 1]);
                found.embedding = std::move(composed);
                return found;
            }

        private:
            bool _exact;
            const Caps & _caps;
            std::map<CanonicalForm, optional<Found>> _memo;

            auto solve_representative(const GridSubgraph & k) -> optional<Found>
            {
                for (auto axis : {LineKind::column, LineKind::row}) {
                    auto g = axis == LineKind::column ? k : transpose(k);
                    int c = g.columns();
                    for (int j = 1; j <= c; ++j)
                        for (int i = 1; i <= c; ++i) {
                            if (i == j)
                                continue;
                            auto joins = rows_joining(g, i, j);
                            if (joins.size() > 1 || (_exact && joins.size() != 1))
                                continue;
                            for (auto & [anchor, folded] : candidates(g, i, j, joins))
                                if (auto result = lift(axis, g, i, j, anchor, folded))
                                    return result;
                        }
                }
                return std::nullopt;
            }

            auto candidates(const GridSubgraph & g, int i, int j, const vector<int> & joins)
                -> vector<pair<int, GridSubgraph>>
            {
                vector<pair<int, GridSubgraph>> result;
                if (_exact) {
                    int i_after = i > j ? i - 1 : i;
                    auto h1 = drop_column(g, j);
                    auto rebuilt = bridge_column(h1, i_after, joins.front());
                    // new last column back to position j
                    vector<int> perm(rebuilt.columns());
                    for (int a = 1; a < rebuilt.columns(); ++a)
                        perm[a - 1] = a < j ? a : a + 1;
                    perm.back() = j;
                    if (permute(rebuilt, perm, [&] {
                            vector<int> id(g.rows());
                            std::iota(id.begin(), id.end(), 1);
                            return id;
                        }()) == g)
                        result.emplace_back(joins.front(), std::move(h1));
                    return result;
                }

                if (! joins.empty()) {
                    result.emplace_back(joins.front(), fold_column(g, i, j, std::nullopt));
                    return result;
                }
                result.emplace_back(1, fold_column(g, i, j, std::nullopt));
                for (auto & p : g.vertices())
                    if (p.x == j && ! g.has_vertex({i, p.y}))
                        result.emplace_back(p.y, fold_column(g, i, j, p.y));
                return result;
            }

            auto lift(LineKind axis, const GridSubgraph & g, int i, int j, int anchor, const GridSubgraph & folded)
                -> optional<Found>
            {
                auto real = axis == LineKind::column ? folded : transpose(folded);
                auto sub = solve(real);
                if (! sub)
                    return std::nullopt;

                int i_after = i > j ? i - 1 : i;
                auto & psi = sub->embedding;
                Found result{sub->script, {}, sub->replay_columns, sub->replay_rows};
                if (axis == LineKind::column) {
                    result.script.steps.push_back({LineKind::column, psi.column_map[i_after - 1], psi.row_map[anchor - 1]});
                    int fresh = ++result.replay_columns;
                    for (int a = 1; a <= g.columns(); ++a)
                        result.embedding.column_map.push_back(a == j ? fresh : psi.column_map[(a > j ? a - 1 : a) - 1]);
                    result.embedding.row_map = psi.row_map;
                }
                else {
                    result.script.steps.push_back({LineKind::row, psi.row_map[i_after - 1], psi.column_map[anchor - 1]});
                    int fresh = ++result.replay_rows;
                    for (int a = 1; a <= g.columns(); ++a)
                        result.embedding.row_map.push_back(a == j ? fresh : psi.row_map[(a > j ? a - 1 : a) - 1]);
                    result.embedding.column_map = psi.column_map;
                }
                return result;
            }
        };
    }

    auto bridge(const GridSubgraph & g, const BridgeStep & step) -> GridSubgraph
    {
        if (step.axis == LineKind::column)
            return bridge_column(g, step.source, step.anchor);
        if (step.source < 1 || step.source > g.rows())
            throw InvalidArgument("bridged row " + to_string(step.source) + " is outside 1.." + to_string(g.rows()));
        if (step.anchor < 1 || step.anchor > g.columns())
            throw InvalidArgument("anchor column " + to_string(step.anchor) + " is outside 1.." + to_string(g.columns()));
        return transpose(bridge_column(transpose(g), step.source, step.anchor));
    }

    auto replay_stages(const ConstructionScript & script) -> vector<GridSubgraph>
    {
        vector<GridSubgraph> stages{GridSubgraph::single_vertex()};
        for (auto & step : script.steps)
            stages.push_back(bridge(stages.back(), step));
        return stages;
    }

    auto replay(const ConstructionScript & script) -> GridSubgraph
    {
        return replay_stages(script).back();
    }

    auto ac_extension_steps(int s) -> vector<BridgeStep>
    {
        if (s < 3)
            throw InvalidArgument("the alternating cycle extension needs s >= 3");
        return {{LineKind::row, s, s}, {LineKind::column, s, s}};
    }

    auto ac_script(int t) -> ConstructionScript
    {
        if (t < 6 || t % 2 != 0)
            throw InvalidArgument("ac_script needs an even t >= 6, got " + to_string(t));
        ConstructionScript script{{{LineKind::row, 1, 1}, {LineKind::column, 1, 1}, {LineKind::row, 1, 1},
            {LineKind::column, 2, 2}}};
        for (int s = 3; s < t / 2; ++s)
            for (auto & step : ac_extension_steps(s))
                script.steps.push_back(step);
        return script;
    }

    auto as_script(int d) -> ConstructionScript
    {
        if (d < 2)
            throw InvalidArgument("as_script needs d >= 2, got " + to_string(d));
        ConstructionScript script;
        for (int i = 1; i <= d; ++i)
            script.steps.push_back({LineKind::column, i, 1});
        for (int i = 1; i < d; ++i)
            script.steps.push_back({LineKind::row, i, i + 1});
        return script;
    }

    auto is_bridging_constructible(const GridSubgraph & h, bool exact, const Caps & caps)
        -> optional<ConstructibilityResult>
    {
        if (h.columns() + h.rows() > caps.constructible_lines)
            throw CapExceeded("constructibility search is limited to columns + rows <= " +
                to_string(caps.constructible_lines) + " (graph has " + to_string(h.columns() + h.rows()) +
                "); raise the 'constructible' cap");
        Caps inner = caps;
        inner.canonical_lines = std::max(caps.canonical_lines, std::max(h.columns(), h.rows()));
        Backward search(exact, inner);
        auto found = search.solve(h);
        if (! found)
            return std::nullopt;
        ConstructibilityResult result{std::move(found->script), std::move(found->embedding)};
        if (! verify_constructibility(h, result, exact))
            throw Error("internal error: constructibility certificate failed to verify");
        return result;
    }

    auto verify_constructibility(const GridSubgraph & h, const ConstructibilityResult & result, bool exact) -> bool
    {
        GridSubgraph replayed;
        try {
            replayed = replay(result.script);
        }
        catch (const InvalidArgument &) {
            return false;
        }
        if (! is_embedding(h, replayed, result.embedding))
            return false;
        if (exact)
            return replayed.columns() == h.columns() && replayed.rows() == h.rows() &&
                replayed.edge_count() == h.edge_count() && replayed.vertices().size() == h.vertices().size();
        return true;
    }

    auto generalized_subdivide(const GridSubgraph & h, pair<Point, Point> e, int m,
        const vector<pair<Point, Point>> & inner_edges, bool keep_original_edge) -> GridSubgraph
    {
        auto [a, b] = e;
        if (a.x == b.x && a.y != b.y) {
            // vertical: work on the transpose
            vector<pair<Point, Point>> flipped;
            for (auto [p, q] : inner_edges)
                flipped.push_back({{p.y, p.x}, {q.y, q.x}});
            return transpose(generalized_subdivide(transpose(h), {{a.y, a.x}, {b.y, b.x}}, m, flipped,
                keep_original_edge));
        }
        if (a.y != b.y || a.x == b.x || ! h.has_h_edge(a.x, b.x, a.y))
            throw InvalidArgument("subdivided edge must be an edge of the graph");
        if (m < 0)
            throw InvalidArgument("number of new vertices must be nonnegative");

        int c = h.columns(), y = a.y;
        std::set<Point> gadget{a, b};
        for (int i = 1; i <= m; ++i)
            gadget.insert({c + i, y});

        std::set<HEdge> hs(h.h_edges().begin(), h.h_edges().end());
        if (! keep_original_edge)
            hs.erase({std::min(a.x, b.x), std::max(a.x, b.x), y});
        for (auto [p, q] : inner_edges) {
            if (! gadget.contains(p) || ! gadget.contains(q) || p == q)
                throw InvalidArgument("inner edge leaves the subdivision gadget (neighbourhood leakage)");
            hs.insert({std::min(p.x, q.x), std::max(p.x, q.x), y});
        }

        // gadget must be connected using its own edges
        vector<Point> members(gadget.begin(), gadget.end());
        std::map<Point, int> index;
        for (std::size_t i = 0; i < members.size(); ++i)
            index[members[i]] = static_cast<int>(i);
        vector<int> parent(members.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (auto & edge : hs) {
            Point p{edge.x1, edge.y}, q{edge.x2, edge.y};
            if (gadget.contains(p) && gadget.contains(q))
                parent[find(index[p])] = find(index[q]);
        }
        for (std::size_t i = 1; i < members.size(); ++i)
            if (find(static_cast<int>(i)) != find(0))
                throw InvalidArgument("subdivision gadget is disconnected");

        std::set<Point> vertices(h.vertices().begin(), h.vertices().end());
        vertices.insert(gadget.begin(), gadget.end());
        return GridSubgraph::from_edges(c + m, h.rows(), {hs.begin(), hs.end()}, h.v_edges(),
            vector<Point>(vertices.begin(), vertices.end()));
    }

    auto subdivision_closure_steps(const GridSubgraph & h, pair<Point, Point> e, int m) -> vector<BridgeStep>
    {
        auto [a, b] = e;
        vector<BridgeStep> steps;
        if (a.y == b.y && a.x != b.x) {
            if (! h.has_h_edge(a.x, b.x, a.y))
                throw InvalidArgument("subdivided edge must be an edge of the graph");
            for (int i = 1; i <= m; ++i)
                steps.push_back({LineKind::column, i == 1 ? a.x : h.columns() + i - 1, a.y});
        }
        else if (a.x == b.x && a.y != b.y) {
            if (! h.has_v_edge(a.x, a.y, b.y))
                throw InvalidArgument("subdivided edge must be an edge of the graph");
            for (int i = 1; i <= m; ++i)
                steps.push_back({LineKind::row, i == 1 ? a.y : h.rows() + i - 1, a.x});
        }
        else
            throw InvalidArgument("subdivided edge must lie in a row or a column");
        return steps;
    }
}

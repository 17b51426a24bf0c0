#include "oracles.hh"

#include <algorithm>
#include <map>
#include <set>

using std::uint64_t;
using std::vector;

namespace gridram::oracle
{
    auto injections(int a, int b) -> vector<vector<int>>
    {
        vector<vector<int>> out;
        vector<int> current;
        vector<char> used(b + 1, 0);
        std::function<void()> go = [&] {
            if (static_cast<int>(current.size()) == a) {
                out.push_back(current);
                return;
            }
            for (int v = 1; v <= b; ++v)
                if (! used[v]) {
                    used[v] = 1;
                    current.push_back(v);
                    go();
                    current.pop_back();
                    used[v] = 0;
                }
        };
        go();
        return out;
    }

    auto embeds(const GridSubgraph & pattern, const GridSubgraph & host, const vector<int> & cm, const vector<int> & rm)
        -> bool
    {
        for (auto & p : pattern.vertices())
            if (! host.has_vertex({cm[p.x - 1], rm[p.y - 1]}))
                return false;
        for (auto & e : pattern.h_edges()) {
            int a = cm[e.x1 - 1], b = cm[e.x2 - 1];
            if (! host.has_h_edge(std::min(a, b), std::max(a, b), rm[e.y - 1]))
                return false;
        }
        for (auto & e : pattern.v_edges()) {
            int a = rm[e.y1 - 1], b = rm[e.y2 - 1];
            if (! host.has_v_edge(cm[e.x - 1], std::min(a, b), std::max(a, b)))
                return false;
        }
        return true;
    }

    auto all_embeddings(const GridSubgraph & pattern, const GridSubgraph & host) -> vector<Embedding>
    {
        vector<Embedding> out;
        if (pattern.columns() > host.columns() || pattern.rows() > host.rows())
            return out;
        auto cols = injections(pattern.columns(), host.columns());
        auto rows = injections(pattern.rows(), host.rows());
        for (auto & c : cols)
            for (auto & r : rows)
                if (embeds(pattern, host, c, r))
                    out.push_back({c, r});
        return out;
    }

    auto count_embeddings(const GridSubgraph & pattern, const GridSubgraph & host) -> uint64_t
    {
        return all_embeddings(pattern, host).size();
    }

    auto independence_number(int n, const std::function<bool(int, int)> & adjacent) -> int
    {
        int best = 0;
        for (uint64_t s = 0; s < (uint64_t{1} << n); ++s) {
            vector<int> members;
            for (int i = 0; i < n; ++i)
                if ((s >> i) & 1)
                    members.push_back(i + 1);
            bool independent = true;
            for (std::size_t a = 0; a < members.size() && independent; ++a)
                for (std::size_t b = a + 1; b < members.size() && independent; ++b)
                    if (adjacent(members[a], members[b]))
                        independent = false;
            if (independent)
                best = std::max(best, static_cast<int>(members.size()));
        }
        return best;
    }

    auto has_coclique(const GridSubgraph & host, int k) -> bool
    {
        for (int y = 1; y <= host.rows(); ++y)
            if (independence_number(host.columns(), [&](int a, int b) { return host.has_h_edge(a, b, y); }) >= k)
                return true;
        for (int x = 1; x <= host.columns(); ++x)
            if (independence_number(host.rows(), [&](int a, int b) { return host.has_v_edge(x, a, b); }) >= k)
                return true;
        return false;
    }

    auto is_coclique(const GridSubgraph & host, const Coclique & c) -> bool
    {
        std::set<Point> distinct(c.positions.begin(), c.positions.end());
        if (distinct.size() != c.positions.size())
            return false;
        for (auto & p : c.positions) {
            if (! host.has_vertex(p))
                return false;
            if ((c.kind == LineKind::row ? p.y : p.x) != c.index)
                return false;
        }
        for (auto & p : c.positions)
            for (auto & q : c.positions) {
                if (! (p < q))
                    continue;
                if (c.kind == LineKind::row && host.has_h_edge(p.x, q.x, p.y))
                    return false;
                if (c.kind == LineKind::column && host.has_v_edge(p.x, p.y, q.y))
                    return false;
            }
        return true;
    }

    auto avoider_exists(const GridSubgraph & pattern, int k, int n) -> bool
    {
        vector<HEdge> hs;
        vector<VEdge> vs;
        for (int y = 1; y <= n; ++y)
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b)
                    hs.push_back({a, b, y});
        for (int x = 1; x <= n; ++x)
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b)
                    vs.push_back({x, a, b});
        std::size_t s = hs.size() + vs.size();
        for (uint64_t mask = 0; mask < (uint64_t{1} << s); ++mask) {
            vector<HEdge> h;
            vector<VEdge> v;
            for (std::size_t i = 0; i < hs.size(); ++i)
                if ((mask >> i) & 1)
                    h.push_back(hs[i]);
            for (std::size_t i = 0; i < vs.size(); ++i)
                if ((mask >> (hs.size() + i)) & 1)
                    v.push_back(vs[i]);
            auto g = GridSubgraph::from_edges(n, n, h, v, std::nullopt, true);
            if (has_coclique(g, k))
                continue;
            if (oracle::count_embeddings(pattern, g) == 0)
                return true;
        }
        return false;
    }

    auto dpll(int variables, const vector<vector<int>> & clauses) -> std::optional<vector<bool>>
    {
        vector<int> value(variables + 1, 0);    // 0 unset, 1 true, -1 false
        std::function<bool()> solve = [&]() -> bool {
            vector<int> trail;
            auto undo = [&] {
                for (int v : trail)
                    value[v] = 0;
            };
            while (true) {
                bool changed = false;
                for (auto & c : clauses) {
                    int unset = 0, last = 0;
                    bool sat = false;
                    for (int lit : c) {
                        int v = value[std::abs(lit)];
                        if ((v == 1 && lit > 0) || (v == -1 && lit < 0)) {
                            sat = true;
                            break;
                        }
                        if (v == 0) {
                            ++unset;
                            last = lit;
                        }
                    }
                    if (sat)
                        continue;
                    if (unset == 0) {
                        undo();
                        return false;
                    }
                    if (unset == 1) {
                        value[std::abs(last)] = last > 0 ? 1 : -1;
                        trail.push_back(std::abs(last));
                        changed = true;
                    }
                }
                if (! changed)
                    break;
            }
            int pick = 0;
            for (int v = 1; v <= variables && ! pick; ++v)
                if (value[v] == 0)
                    pick = v;
            if (! pick)
                return true;
            for (int choice : {-1, 1}) {
                value[pick] = choice;
                if (solve())
                    return true;
            }
            value[pick] = 0;
            undo();
            return false;
        };
        if (! solve())
            return std::nullopt;
        vector<bool> model(variables);
        for (int v = 1; v <= variables; ++v)
            model[v - 1] = value[v] == 1;
        return model;
    }

    auto n_diverse(const GridSubgraph & host, Point hv, const GridSubgraph & tree, Point tv, int n) -> bool
    {
        vector<Embedding> anchored;
        for (auto & e : all_embeddings(tree, host))
            if (e.column_map[tv.x - 1] == hv.x && e.row_map[tv.y - 1] == hv.y)
                anchored.push_back(e);
        auto compatible = [&](const Embedding & a, const Embedding & b) {
            for (int c : a.column_map)
                if (c != hv.x && std::count(b.column_map.begin(), b.column_map.end(), c))
                    return false;
            for (int r : a.row_map)
                if (r != hv.y && std::count(b.row_map.begin(), b.row_map.end(), r))
                    return false;
            return true;
        };
        // tuples with repetition allowed; repetition only survives when the
        // tree has a single column and row
        vector<std::size_t> pick(n, 0);
        if (anchored.empty())
            return false;
        while (true) {
            bool ok = true;
            for (int a = 0; a < n && ok; ++a)
                for (int b = a + 1; b < n && ok; ++b)
                    ok = compatible(anchored[pick[a]], anchored[pick[b]]);
            if (ok)
                return true;
            int i = n - 1;
            while (i >= 0 && pick[i] + 1 == anchored.size())
                pick[i--] = 0;
            if (i < 0)
                return false;
            ++pick[i];
        }
    }

    auto uniform_subgrid_exists(const GridSubgraph & colouring, int m) -> bool
    {
        auto subsets = [](int n, int k) {
            vector<vector<int>> out;
            for (uint64_t s = 0; s < (uint64_t{1} << n); ++s)
                if (__builtin_popcountll(s) == k) {
                    vector<int> v;
                    for (int i = 0; i < n; ++i)
                        if ((s >> i) & 1)
                            v.push_back(i + 1);
                    out.push_back(v);
                }
            return out;
        };
        for (auto & cols : subsets(colouring.columns(), m))
            for (auto & rows : subsets(colouring.rows(), m)) {
                std::set<bool> hs, vs;
                for (int y : rows)
                    for (int a : cols)
                        for (int b : cols)
                            if (a < b)
                                hs.insert(colouring.has_h_edge(a, b, y));
                for (int x : cols)
                    for (int a : rows)
                        for (int b : rows)
                            if (a < b)
                                vs.insert(colouring.has_v_edge(x, a, b));
                if (hs.size() <= 1 && vs.size() <= 1)
                    return true;
            }
        return false;
    }

    auto count_embeddings_3(const ThreeGraph & pattern, const ThreeGraph & host, bool respect_bipartition) -> uint64_t
    {
        int p = static_cast<int>(pattern.vertices.size()), q = static_cast<int>(host.vertices.size());
        if (p > q)
            return 0;
        std::set<Triple> edges(host.edges.begin(), host.edges.end());
        auto in_y = [](const ThreeGraph & g, int v) {
            return g.bipartition && std::count(g.bipartition->y.begin(), g.bipartition->y.end(), v) > 0;
        };
        uint64_t count = 0;
        for (auto & inj : injections(p, q)) {
            std::map<int, int> phi;
            for (int i = 0; i < p; ++i)
                phi[pattern.vertices[i]] = host.vertices[inj[i] - 1];
            bool ok = true;
            if (respect_bipartition)
                for (int v : pattern.vertices)
                    if (in_y(pattern, v) != in_y(host, phi[v]))
                        ok = false;
            for (auto & e : pattern.edges) {
                if (! ok)
                    break;
                Triple img{phi[e[0]], phi[e[1]], phi[e[2]]};
                std::sort(img.begin(), img.end());
                ok = edges.count(img) > 0;
            }
            if (ok)
                ++count;
        }
        return count;
    }

    auto uniform(std::mt19937_64 & rng, int lo, int hi) -> int
    {
        uint64_t span = static_cast<uint64_t>(hi - lo + 1);
        return lo + static_cast<int>(rng() % span);
    }

    auto random_grid(std::mt19937_64 & rng, int columns, int rows, int percent) -> GridSubgraph
    {
        vector<HEdge> h;
        vector<VEdge> v;
        for (int y = 1; y <= rows; ++y)
            for (int a = 1; a <= columns; ++a)
                for (int b = a + 1; b <= columns; ++b)
                    if (static_cast<int>(rng() % 100) < percent)
                        h.push_back({a, b, y});
        for (int x = 1; x <= columns; ++x)
            for (int a = 1; a <= rows; ++a)
                for (int b = a + 1; b <= rows; ++b)
                    if (static_cast<int>(rng() % 100) < percent)
                        v.push_back({x, a, b});
        return GridSubgraph::from_edges(columns, rows, h, v, std::nullopt, true);
    }
}

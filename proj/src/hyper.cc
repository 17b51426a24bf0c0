#include <gridram/hyper.hh>
#include <gridram/patterns.hh>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

using std::optional;
using std::string;
using std::uint64_t;
using std::vector;

namespace gridram
{
    using std::to_string;

    namespace
    {
        auto triple_string(const Triple & e) -> string
        {
            return "{" + to_string(e[0]) + "," + to_string(e[1]) + "," + to_string(e[2]) + "}";
        }

        auto sorted_unique(vector<int> v) -> vector<int>
        {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
            return v;
        }

        auto side_count(const Triple & e, const std::set<int> & side) -> int
        {
            return static_cast<int>(side.count(e[0]) + side.count(e[1]) + side.count(e[2]));
        }
    }

    auto make_three_graph(vector<int> vertices, vector<Triple> edges, optional<Bipartition> bipartition) -> ThreeGraph
    {
        ThreeGraph h;
        auto n = vertices.size();
        h.vertices = sorted_unique(std::move(vertices));
        if (h.vertices.size() != n)
            throw InvalidArgument("duplicate vertex label");
        std::set<int> vs(h.vertices.begin(), h.vertices.end());
        for (auto & e : edges) {
            std::sort(e.begin(), e.end());
            if (e[0] == e[1] || e[1] == e[2])
                throw InvalidArgument("edge " + triple_string(e) + " repeats a vertex");
            for (int v : e)
                if (! vs.count(v))
                    throw InvalidArgument("edge " + triple_string(e) + " uses unknown vertex " + to_string(v));
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw InvalidArgument("duplicate edge");
        h.edges = std::move(edges);

        if (bipartition) {
            Bipartition b{sorted_unique(bipartition->x), sorted_unique(bipartition->y)};
            if (b.x.size() != bipartition->x.size() || b.y.size() != bipartition->y.size())
                throw InvalidArgument("bipartition lists a vertex twice");
            vector<int> both;
            std::merge(b.x.begin(), b.x.end(), b.y.begin(), b.y.end(), std::back_inserter(both));
            if (both != h.vertices)
                throw InvalidArgument("bipartition is not a partition of the vertex set");
            std::set<int> x(b.x.begin(), b.x.end());
            for (auto & e : h.edges) {
                int in_x = side_count(e, x);
                if (in_x == 0 || in_x == 3)
                    throw InvalidArgument("edge " + triple_string(e) + " lies on one side of the bipartition");
            }
            h.bipartition = std::move(b);
        }
        return h;
    }

    auto has_two_one_split(const ThreeGraph & h) -> bool
    {
        if (! h.bipartition)
            return false;
        std::set<int> x(h.bipartition->x.begin(), h.bipartition->x.end());
        for (auto & e : h.edges) {
            int in_x = side_count(e, x);
            if (in_x == 0 || in_x == 3)
                return false;
        }
        return true;
    }

    auto tight_cycle(int t) -> ThreeGraph
    {
        if (t < 4)
            throw InvalidArgument("a tight cycle needs t >= 4");
        vector<int> vs;
        Bipartition b;
        for (int i = 1; i <= t; ++i) {
            vs.push_back(i);
            (i % 2 ? b.x : b.y).push_back(i);
        }
        vector<Triple> es;
        for (int i = 0; i < t; ++i)
            es.push_back({i + 1, (i + 1) % t + 1, (i + 2) % t + 1});
        // t = 4 already gives all four triples, so no duplicates
        return make_three_graph(vs, es, b);
    }

    auto star(int k) -> ThreeGraph
    {
        if (k < 1)
            throw InvalidArgument("a star needs k >= 1");
        vector<int> vs{0};
        Bipartition b;
        b.y = {0};
        for (int i = 1; i <= k; ++i) {
            vs.push_back(i);
            b.x.push_back(i);
        }
        vector<Triple> es;
        for (int a = 1; a <= k; ++a)
            for (int c = a + 1; c <= k; ++c)
                es.push_back({0, a, c});
        return make_three_graph(vs, es, b);
    }

    auto complete_three_graph(int n) -> ThreeGraph
    {
        if (n < 0)
            throw InvalidArgument("vertex count must be nonnegative");
        vector<int> vs;
        for (int i = 1; i <= n; ++i)
            vs.push_back(i);
        vector<Triple> es;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = b + 1; c <= n; ++c)
                    es.push_back({a, b, c});
        return make_three_graph(vs, es);
    }

    auto fg_to_grid(const ThreeGraph & h) -> FgGrid
    {
        if (! h.bipartition)
            throw InvalidArgument("f_g needs a bipartition (X columns, Y rows)");
        auto & b = *h.bipartition;
        if (b.x.empty() || b.y.empty())
            throw InvalidArgument("f_g needs both sides of the bipartition nonempty");
        std::map<int, int> column, row;
        for (std::size_t i = 0; i < b.x.size(); ++i)
            column[b.x[i]] = static_cast<int>(i) + 1;
        for (std::size_t i = 0; i < b.y.size(); ++i)
            row[b.y[i]] = static_cast<int>(i) + 1;

        vector<HEdge> hs;
        vector<VEdge> vs;
        for (auto & e : h.edges) {
            vector<int> xs, ys;
            for (int v : e)
                (column.count(v) ? xs : ys).push_back(v);
            if (xs.size() == 2)
                hs.push_back({column[xs[0]], column[xs[1]], row[ys[0]]});
            else if (ys.size() == 2)
                vs.push_back({column[xs[0]], row[ys[0]], row[ys[1]]});
            else
                throw InvalidArgument("edge " + triple_string(e) + " has all three vertices on one side");
        }
        FgGrid out;
        out.grid = GridSubgraph::from_edges(static_cast<int>(b.x.size()), static_cast<int>(b.y.size()), hs, vs);
        out.column_labels = b.x;
        out.row_labels = b.y;
        return out;
    }

    auto fg_from_grid(const GridSubgraph & g, const vector<int> & column_labels, const vector<int> & row_labels)
        -> ThreeGraph
    {
        vector<int> cl = column_labels, rl = row_labels;
        if (cl.empty())
            for (int x = 1; x <= g.columns(); ++x)
                cl.push_back(x);
        if (rl.empty())
            for (int y = 1; y <= g.rows(); ++y)
                rl.push_back(g.columns() + y);
        if (static_cast<int>(cl.size()) != g.columns() || static_cast<int>(rl.size()) != g.rows())
            throw InvalidArgument("label lists must match the grid's columns and rows");
        vector<Triple> es;
        for (auto & e : g.h_edges())
            es.push_back({cl[e.x1 - 1], cl[e.x2 - 1], rl[e.y - 1]});
        for (auto & e : g.v_edges())
            es.push_back({cl[e.x - 1], rl[e.y1 - 1], rl[e.y2 - 1]});
        vector<int> vs = cl;
        vs.insert(vs.end(), rl.begin(), rl.end());
        auto h = make_three_graph(vs, es, Bipartition{cl, rl});
        // labels given out of order would permute lines; refuse rather than
        // silently renumber
        if (h.bipartition->x != cl || h.bipartition->y != rl)
            throw InvalidArgument("column and row labels must be increasing");
        return h;
    }

    auto count_embeddings_3(const ThreeGraph & pattern, const ThreeGraph & host, bool respect_bipartition,
        const Caps & caps) -> uint64_t
    {
        int p = static_cast<int>(pattern.vertices.size());
        int q = static_cast<int>(host.vertices.size());
        if (p > caps.hyper_pattern_vertices)
            throw CapExceeded("pattern has " + to_string(p) + " vertices, above the cap of " +
                to_string(caps.hyper_pattern_vertices) + "; raise 'hyper_vertices'");
        if (respect_bipartition && (! pattern.bipartition || ! host.bipartition))
            throw InvalidArgument("side-respecting counts need bipartitions on both graphs");
        if (p > q)
            return 0;

        std::map<int, int> pi, hi;
        for (int i = 0; i < p; ++i)
            pi[pattern.vertices[i]] = i;
        for (int i = 0; i < q; ++i)
            hi[host.vertices[i]] = i;

        vector<char> host_edge(static_cast<std::size_t>(q) * q * q, 0);
        auto at = [q](int a, int b, int c) { return (static_cast<std::size_t>(a) * q + b) * q + c; };
        for (auto & e : host.edges) {
            int a = hi[e[0]], b = hi[e[1]], c = hi[e[2]];
            for (auto [u, v, w] : {Triple{a, b, c}, Triple{a, c, b}, Triple{b, a, c}, Triple{b, c, a}, Triple{c, a, b},
                     Triple{c, b, a}})
                host_edge[at(u, v, w)] = 1;
        }

        vector<int> side_p(p, 0), side_h(q, 0);
        if (respect_bipartition) {
            for (int v : pattern.bipartition->y)
                side_p[pi[v]] = 1;
            for (int v : host.bipartition->y)
                side_h[hi[v]] = 1;
        }

        // edges checked once their last vertex (in index order) is placed
        vector<vector<std::pair<int, int>>> closing(p);
        for (auto & e : pattern.edges) {
            int a = pi[e[0]], b = pi[e[1]], c = pi[e[2]];
            closing[c].push_back({a, b});
        }

        vector<int> map(p, -1);
        vector<char> used(q, 0);
        uint64_t count = 0;
        std::function<void(int)> place = [&](int i) {
            if (i == p) {
                ++count;
                return;
            }
            for (int v = 0; v < q; ++v) {
                if (used[v] || side_p[i] != side_h[v])
                    continue;
                bool ok = true;
                for (auto [a, b] : closing[i])
                    if (! host_edge[at(map[a], map[b], v)]) {
                        ok = false;
                        break;
                    }
                if (! ok)
                    continue;
                map[i] = v;
                used[v] = 1;
                place(i + 1);
                used[v] = 0;
            }
        };
        place(0);
        return count;
    }

    auto vertex_bridge(const ThreeGraph & h, int v, int w) -> ThreeGraph
    {
        if (v == w)
            throw InvalidArgument("vertex bridging needs v != w");
        if (! std::binary_search(h.vertices.begin(), h.vertices.end(), v) ||
            ! std::binary_search(h.vertices.begin(), h.vertices.end(), w))
            throw InvalidArgument("v and w must be vertices");
        int fresh = h.vertices.back() + 1;
        auto vs = h.vertices;
        vs.push_back(fresh);
        auto es = h.edges;
        for (auto & e : h.edges)
            if (std::find(e.begin(), e.end(), v) != e.end()) {
                Triple copy = e;
                std::replace(copy.begin(), copy.end(), v, fresh);
                es.push_back(copy);
            }
        es.push_back({v, fresh, w});

        optional<Bipartition> b;
        if (h.bipartition) {
            b = *h.bipartition;
            bool v_in_x = std::binary_search(b->x.begin(), b->x.end(), v);
            bool w_in_x = std::binary_search(b->x.begin(), b->x.end(), w);
            (v_in_x ? b->x : b->y).push_back(fresh);
            if (v_in_x == w_in_x)
                b.reset();
        }
        return make_three_graph(vs, es, b);
    }

    auto find_presentation(const ThreeGraph & h, const Caps & caps) -> optional<Bipartition>
    {
        int n = static_cast<int>(h.vertices.size());
        if (n > caps.bipartition_search)
            throw CapExceeded(to_string(n) + " vertices is above the bipartition search cap of " +
                to_string(caps.bipartition_search) + "; raise 'bipartition'");
        if (n < 2)
            return std::nullopt;
        std::map<int, int> index;
        for (int i = 0; i < n; ++i)
            index[h.vertices[i]] = i;
        // vertex i is in Y iff bit i is set; the smallest vertex stays in X
        for (uint64_t mask = 0; mask < (uint64_t{1} << (n - 1)); ++mask) {
            uint64_t y = mask << 1;
            bool ok = true;
            for (auto & e : h.edges) {
                int in_y = 0;
                for (int v : e)
                    in_y += (y >> index[v]) & 1;
                if (in_y == 0 || in_y == 3) {
                    ok = false;
                    break;
                }
            }
            if (! ok || y == 0)
                continue;
            Bipartition b;
            for (int i = 0; i < n; ++i)
                ((y >> i) & 1 ? b.y : b.x).push_back(h.vertices[i]);
            return b;
        }
        return std::nullopt;
    }

    auto star_ramsey_bound(const ThreeGraph & h, int k, int n_max, int workers, const Caps & caps) -> StarRamseyReport
    {
        if (k < 1)
            throw InvalidArgument("k must be positive");
        StarRamseyReport r;
        r.k = k;
        r.presentation = h;
        if (! has_two_one_split(h)) {
            auto b = find_presentation(h, caps);
            if (! b)
                throw InvalidArgument("no bipartition with a 2-1 split on every edge exists");
            r.presentation = make_three_graph(h.vertices, h.edges, *b);
            r.notes.push_back("bipartition found by search");
        }
        r.grid = fg_to_grid(r.presentation).grid;

        // a line clique is exactly what the K_k side forbids
        bool one_line = r.grid.edge_count() > 0 &&
            ((r.grid.v_edges().empty() && r.grid.rows() == 1) || (r.grid.h_edges().empty() && r.grid.columns() == 1));
        if (one_line) {
            long m = r.grid.rows() == 1 ? r.grid.columns() : r.grid.rows();
            r.degenerate = static_cast<long>(r.grid.edge_count()) == m * (m - 1) / 2;
        }
        if (r.degenerate)
            r.notes.push_back("f_g(H) is a line clique, the complement of the coclique being avoided; "
                              "the reduction is degenerate here");

        auto ac6 = alternating_cycle(6);
        if (r.grid.columns() == 3 && r.grid.rows() == 3 && r.grid.edge_count() == 6)
            r.alternating_six = isomorphic(r.grid, ac6, true, caps);
        if (r.alternating_six) {
            BigInt cubic = BigInt(55) * k * k * k;
            std::ostringstream s;
            s << "f_g(H) is AC_6: R(H, S_" << k << ") <= 2 gr(AC_6, K_" << k << ") <= 2 * 55 k^3 = " << 2 * cubic
              << ", using the corner-search constant 55 (an implementation constant, not a proven one)";
            r.notes.push_back(s.str());
        }

        if (n_max > 0) {
            r.gr = gr_exact(r.grid, k, n_max, AvoiderMethod::automatic, workers, caps);
            if (r.gr->value) {
                r.ramsey_upper = BigInt(2) * *r.gr->value;
                r.notes.push_back("gr(f_g(H), K_" + to_string(k) + ") = " + to_string(*r.gr->value) +
                    ", so R(H, S_" + to_string(k) + ") <= " + r.ramsey_upper->str());
            }
            else
                r.notes.push_back("gr not decided within N <= " + to_string(n_max) + ": " + r.gr->status);
        }
        return r;
    }
}

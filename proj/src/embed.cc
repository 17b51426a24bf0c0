#include <gridram/embed.hh>

#include <algorithm>
#include <bit>
#include <numeric>
#include <thread>

using std::optional;
using std::pair;
using std::uint64_t;
using std::vector;

namespace gridram
{
    using std::to_string;

    namespace
    {
        auto bit(int line) -> uint64_t
        {
            return uint64_t{1} << (line - 1);
        }

        auto all_lines(int n) -> uint64_t
        {
            return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
        }

        struct PatternIndex
        {
            int columns, rows;
            vector<vector<int>> vertex_rows;              // per column: rows holding a vertex
            vector<vector<pair<int, int>>> h_partners;    // per column a: (b, y) for h-edges {a, b} in row y
            vector<vector<pair<int, int>>> v_pairs;       // per column: (y1, y2)
            vector<vector<pair<int, int>>> v_by_row;      // per row y: (column, other row)

            explicit PatternIndex(const GridSubgraph & g) :
                columns(g.columns()),
                rows(g.rows()),
                vertex_rows(g.columns() + 1),
                h_partners(g.columns() + 1),
                v_pairs(g.columns() + 1),
                v_by_row(g.rows() + 1)
            {
                for (auto & p : g.vertices())
                    vertex_rows[p.x].push_back(p.y);
                for (auto & e : g.h_edges()) {
                    h_partners[e.x1].push_back({e.x2, e.y});
                    h_partners[e.x2].push_back({e.x1, e.y});
                }
                for (auto & e : g.v_edges()) {
                    v_pairs[e.x].push_back({e.y1, e.y2});
                    v_by_row[e.y1].push_back({e.x, e.y2});
                    v_by_row[e.y2].push_back({e.x, e.y1});
                }
            }
        };

        struct HostIndex
        {
            int columns, rows;
            vector<uint64_t> vertex_rows;    // [X]: rows with a vertex in column X
            vector<uint64_t> h_rows;         // [X * (C + 1) + X']: rows with an h-edge between X and X'
            vector<uint64_t> v_adj;          // [X * (R + 1) + Y]: rows adjacent to Y in column X

            explicit HostIndex(const DenseGrid & d) :
                columns(d.columns()),
                rows(d.rows()),
                vertex_rows(d.columns() + 1, 0),
                h_rows((d.columns() + 1) * (d.columns() + 1), 0),
                v_adj((d.columns() + 1) * (d.rows() + 1), 0)
            {
                if (columns > 64 || rows > 64)
                    throw CapExceeded("embedding search supports hosts of at most 64 columns and rows");
                for (int x = 1; x <= columns; ++x)
                    for (int y = 1; y <= rows; ++y) {
                        if (d.has_vertex(x, y))
                            vertex_rows[x] |= bit(y);
                        for (int x2 = 1; x2 <= columns; ++x2)
                            if (x2 != x && d.has_h(x, x2, y))
                                h_rows[x * (columns + 1) + x2] |= bit(y);
                        for (int y2 = 1; y2 <= rows; ++y2)
                            if (y2 != y && d.has_v(x, y, y2))
                                v_adj[x * (rows + 1) + y] |= bit(y2);
                    }
            }

            auto h(int x, int x2) const -> uint64_t { return h_rows[x * (columns + 1) + x2]; }
            auto v(int x, int y) const -> uint64_t { return v_adj[x * (rows + 1) + y]; }
        };

        // Columns of the pattern are placed first, each placement narrowing
        // the set of host rows every pattern row could still go to; rows are
        // then placed against those candidate sets.
        template <typename Visit_>
        class Search
        {
        public:
            Search(const PatternIndex & p, const HostIndex & h, const EmbedConstraints & constraints,
                vector<int> column_order, Visit_ & visit) :
                _p(p), _h(h), _column_order(std::move(column_order)), _visit(visit),
                _column_map(p.columns + 1, 0), _row_map(p.rows + 1, 0)
            {
                _column_allowed.assign(p.columns + 1, all_lines(h.columns));
                _row_allowed.assign(p.rows + 1, all_lines(h.rows));
                for (int a = 1; a <= p.columns && a <= static_cast<int>(constraints.column_masks.size()); ++a)
                    _column_allowed[a] &= constraints.column_masks[a - 1];
                for (int y = 1; y <= p.rows && y <= static_cast<int>(constraints.row_masks.size()); ++y)
                    _row_allowed[y] &= constraints.row_masks[y - 1];
            }

            // first_choices restricts the host columns tried for the first
            // pattern column in the order; used to split work.
            auto run(uint64_t first_choices) -> bool
            {
                vector<uint64_t> cand(_p.rows + 1);
                for (int y = 1; y <= _p.rows; ++y)
                    cand[y] = _row_allowed[y];
                for (int y = 1; y <= _p.rows; ++y)
                    if (! cand[y])
                        return true;
                return place_column(0, 0, cand, first_choices);
            }

        private:
            const PatternIndex & _p;
            const HostIndex & _h;
            vector<int> _column_order;
            Visit_ & _visit;
            vector<int> _column_map, _row_map;
            vector<uint64_t> _column_allowed, _row_allowed;

            auto place_column(std::size_t depth, uint64_t used, const vector<uint64_t> & cand, uint64_t first_choices)
                -> bool
            {
                if (depth == _column_order.size())
                    return place_row(1, 0, cand);

                int a = _column_order[depth];
                uint64_t choices = _column_allowed[a] & ~used;
                if (depth == 0)
                    choices &= first_choices;
                vector<uint64_t> next(cand.size());
                while (choices) {
                    int x = std::countr_zero(choices) + 1;
                    choices &= choices - 1;

                    next = cand;
                    bool ok = true;
                    for (int y : _p.vertex_rows[a])
                        next[y] &= _h.vertex_rows[x];
                    for (auto [b, y] : _p.h_partners[a])
                        if (_column_map[b])
                            next[y] &= _h.h(x, _column_map[b]);
                    for (auto [y1, y2] : _p.v_pairs[a]) {
                        uint64_t keep1 = 0, keep2 = 0;
                        for (uint64_t s = next[y1]; s; s &= s - 1) {
                            int yy = std::countr_zero(s) + 1;
                            uint64_t partners = _h.v(x, yy) & next[y2];
                            if (partners) {
                                keep1 |= bit(yy);
                                keep2 |= partners;
                            }
                        }
                        next[y1] = keep1;
                        next[y2] = keep2;
                    }
                    for (int y = 1; ok && y <= _p.rows; ++y)
                        ok = next[y] != 0;
                    if (! ok)
                        continue;

                    _column_map[a] = x;
                    bool carry_on = place_column(depth + 1, used | bit(x), next, first_choices);
                    _column_map[a] = 0;
                    if (! carry_on)
                        return false;
                }
                return true;
            }

            auto place_row(int y, uint64_t used, const vector<uint64_t> & cand) -> bool
            {
                if (y > _p.rows)
                    return _visit(_column_map, _row_map);

                for (uint64_t choices = cand[y] & ~used; choices; choices &= choices - 1) {
                    int yy = std::countr_zero(choices) + 1;
                    bool ok = true;
                    for (auto [a, other] : _p.v_by_row[y])
                        if (_row_map[other] && ! (_h.v(_column_map[a], yy) & bit(_row_map[other]))) {
                            ok = false;
                            break;
                        }
                    if (! ok)
                        continue;
                    _row_map[y] = yy;
                    bool carry_on = place_row(y + 1, used | bit(yy), cand);
                    _row_map[y] = 0;
                    if (! carry_on)
                        return false;
                }
                return true;
            }
        };

        auto fits(const GridSubgraph & p, const DenseGrid & h) -> bool
        {
            return p.columns() <= h.columns() && p.rows() <= h.rows();
        }

        auto to_embedding(const vector<int> & column_map, const vector<int> & row_map) -> Embedding
        {
            return Embedding{vector<int>(column_map.begin() + 1, column_map.end()),
                vector<int>(row_map.begin() + 1, row_map.end())};
        }

        auto identity_order(int n) -> vector<int>
        {
            vector<int> order(n);
            std::iota(order.begin(), order.end(), 1);
            return order;
        }

        // Heavier columns first, for counting where order does not matter.
        auto degree_order(const PatternIndex & p) -> vector<int>
        {
            vector<int> order = identity_order(p.columns);
            auto weight = [&](int a) {
                return p.h_partners[a].size() * 2 + p.v_pairs[a].size() * 2 + p.vertex_rows[a].size();
            };
            std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return weight(a) > weight(b); });
            return order;
        }
    }

    auto is_embedding(const GridSubgraph & pattern, const GridSubgraph & host, const Embedding & e) -> bool
    {
        if (static_cast<int>(e.column_map.size()) != pattern.columns() || static_cast<int>(e.row_map.size()) != pattern.rows())
            return false;
        auto injective = [](const vector<int> & m, int n) {
            vector<char> seen(n + 1, 0);
            for (int v : m) {
                if (v < 1 || v > n || seen[v])
                    return false;
                seen[v] = 1;
            }
            return true;
        };
        if (! injective(e.column_map, host.columns()) || ! injective(e.row_map, host.rows()))
            return false;
        auto cx = [&](int x) { return e.column_map[x - 1]; };
        auto ry = [&](int y) { return e.row_map[y - 1]; };
        for (auto & p : pattern.vertices())
            if (! host.has_vertex({cx(p.x), ry(p.y)}))
                return false;
        for (auto & h : pattern.h_edges())
            if (! host.has_h_edge(cx(h.x1), cx(h.x2), ry(h.y)))
                return false;
        for (auto & v : pattern.v_edges())
            if (! host.has_v_edge(cx(v.x), ry(v.y1), ry(v.y2)))
                return false;
        return true;
    }

    auto image(const GridSubgraph & pattern, const Embedding & e) -> EmbeddingImage
    {
        EmbeddingImage result;
        for (auto & h : pattern.h_edges()) {
            int a = e.column_map[h.x1 - 1], b = e.column_map[h.x2 - 1];
            result.h_edges.push_back({std::min(a, b), std::max(a, b), e.row_map[h.y - 1]});
        }
        for (auto & v : pattern.v_edges()) {
            int a = e.row_map[v.y1 - 1], b = e.row_map[v.y2 - 1];
            result.v_edges.push_back({e.column_map[v.x - 1], std::min(a, b), std::max(a, b)});
        }
        std::sort(result.h_edges.begin(), result.h_edges.end());
        std::sort(result.v_edges.begin(), result.v_edges.end());
        return result;
    }

    auto for_each_embedding(const GridSubgraph & pattern, const DenseGrid & host,
        const std::function<auto(const Embedding &)->bool> & visit, const EmbedConstraints & constraints) -> bool
    {
        if (! fits(pattern, host))
            return true;
        PatternIndex p(pattern);
        HostIndex h(host);
        auto adapter = [&](const vector<int> & cm, const vector<int> & rm) { return visit(to_embedding(cm, rm)); };
        Search search(p, h, constraints, identity_order(p.columns), adapter);
        return search.run(all_lines(h.columns));
    }

    auto for_each_embedding(const GridSubgraph & pattern, const GridSubgraph & host,
        const std::function<auto(const Embedding &)->bool> & visit, const EmbedConstraints & constraints) -> bool
    {
        return for_each_embedding(pattern, DenseGrid(host), visit, constraints);
    }

    auto count_embeddings(const GridSubgraph & pattern, const DenseGrid & host, int workers,
        const EmbedConstraints & constraints) -> uint64_t
    {
        if (! fits(pattern, host))
            return 0;
        PatternIndex p(pattern);
        HostIndex h(host);
        auto order = degree_order(p);

        auto count_range = [&](uint64_t first_choices) {
            uint64_t n = 0;
            auto tally = [&](const vector<int> &, const vector<int> &) {
                ++n;
                return true;
            };
            Search search(p, h, constraints, order, tally);
            search.run(first_choices);
            return n;
        };

        workers = std::max(1, workers);
        if (workers == 1 || p.columns == 0)
            return count_range(all_lines(h.columns));

        // Host columns for the first pattern column are dealt round robin.
        vector<uint64_t> shares(workers, 0);
        for (int x = 1; x <= h.columns; ++x)
            shares[(x - 1) % workers] |= bit(x);
        vector<uint64_t> totals(workers, 0);
        vector<std::thread> threads;
        for (int w = 0; w < workers; ++w)
            threads.emplace_back([&, w] { totals[w] = count_range(shares[w]); });
        for (auto & t : threads)
            t.join();
        return std::accumulate(totals.begin(), totals.end(), uint64_t{0});
    }

    auto count_embeddings(const GridSubgraph & pattern, const GridSubgraph & host, int workers,
        const EmbedConstraints & constraints) -> uint64_t
    {
        return count_embeddings(pattern, DenseGrid(host), workers, constraints);
    }

    auto contains(const GridSubgraph & pattern, const DenseGrid & host, const EmbedConstraints & constraints)
        -> optional<Embedding>
    {
        optional<Embedding> found;
        for_each_embedding(pattern, host, [&](const Embedding & e) {
            found = e;
            return false;
        }, constraints);
        return found;
    }

    auto contains(const GridSubgraph & pattern, const GridSubgraph & host, const EmbedConstraints & constraints)
        -> optional<Embedding>
    {
        return contains(pattern, DenseGrid(host), constraints);
    }
}

#include <gridram/grid.hh>

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

using std::pair;
using std::vector;

namespace gridram
{
    using std::to_string;

    namespace
    {
        using Key = vector<int>;

        // Replaces arbitrary keys by their rank among the distinct keys. Ranks
        // only depend on key values, so two isomorphic graphs get the same
        // colours on corresponding lines.
        auto rank_keys(const vector<Key> & keys) -> vector<int>
        {
            vector<Key> distinct = keys;
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            vector<int> result;
            result.reserve(keys.size());
            for (auto & k : keys)
                result.push_back(static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), k) - distinct.begin()));
            return result;
        }

        auto count_distinct(const vector<int> & colours) -> int
        {
            vector<int> c = colours;
            std::sort(c.begin(), c.end());
            return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
        }

        struct Refined
        {
            vector<int> column_colour, row_colour;
        };

        // Joint colour refinement of columns and rows, in the spirit of 1-WL on
        // the incidence structure of the lattice.
        auto refine(const DenseGrid & d) -> Refined
        {
            int c = d.columns(), r = d.rows();
            auto hdeg = [&](int x, int y) {
                int n = 0;
                for (int x2 = 1; x2 <= c; ++x2)
                    if (x2 != x && d.has_h(x, x2, y))
                        ++n;
                return n;
            };
            auto vdeg = [&](int x, int y) {
                int n = 0;
                for (int y2 = 1; y2 <= r; ++y2)
                    if (y2 != y && d.has_v(x, y, y2))
                        ++n;
                return n;
            };

            Refined f{vector<int>(c, 0), vector<int>(r, 0)};
            int classes = 2;
            while (true) {
                vector<Key> column_keys(c), row_keys(r);
                for (int x = 1; x <= c; ++x) {
                    vector<Key> cells;
                    for (int y = 1; y <= r; ++y) {
                        Key cell{f.row_colour[y - 1], d.has_vertex(x, y), hdeg(x, y), vdeg(x, y)};
                        vector<int> along;
                        for (int y2 = 1; y2 <= r; ++y2)
                            if (y2 != y && d.has_v(x, y, y2))
                                along.push_back(f.row_colour[y2 - 1]);
                        std::sort(along.begin(), along.end());
                        cell.push_back(-1);
                        cell.insert(cell.end(), along.begin(), along.end());
                        vector<int> across;
                        for (int x2 = 1; x2 <= c; ++x2)
                            if (x2 != x && d.has_h(x, x2, y))
                                across.push_back(f.column_colour[x2 - 1]);
                        std::sort(across.begin(), across.end());
                        cell.push_back(-1);
                        cell.insert(cell.end(), across.begin(), across.end());
                        cells.push_back(std::move(cell));
                    }
                    std::sort(cells.begin(), cells.end());
                    Key key{f.column_colour[x - 1]};
                    for (auto & cell : cells) {
                        key.push_back(-2);
                        key.insert(key.end(), cell.begin(), cell.end());
                    }
                    column_keys[x - 1] = std::move(key);
                }
                for (int y = 1; y <= r; ++y) {
                    vector<Key> cells;
                    for (int x = 1; x <= c; ++x) {
                        Key cell{f.column_colour[x - 1], d.has_vertex(x, y), hdeg(x, y), vdeg(x, y)};
                        vector<int> along;
                        for (int x2 = 1; x2 <= c; ++x2)
                            if (x2 != x && d.has_h(x, x2, y))
                                along.push_back(f.column_colour[x2 - 1]);
                        std::sort(along.begin(), along.end());
                        cell.push_back(-1);
                        cell.insert(cell.end(), along.begin(), along.end());
                        vector<int> across;
                        for (int y2 = 1; y2 <= r; ++y2)
                            if (y2 != y && d.has_v(x, y, y2))
                                across.push_back(f.row_colour[y2 - 1]);
                        std::sort(across.begin(), across.end());
                        cell.push_back(-1);
                        cell.insert(cell.end(), across.begin(), across.end());
                        cells.push_back(std::move(cell));
                    }
                    std::sort(cells.begin(), cells.end());
                    Key key{f.row_colour[y - 1]};
                    for (auto & cell : cells) {
                        key.push_back(-2);
                        key.insert(key.end(), cell.begin(), cell.end());
                    }
                    row_keys[y - 1] = std::move(key);
                }
                Refined next{rank_keys(column_keys), rank_keys(row_keys)};
                int next_classes = count_distinct(next.column_colour) + count_distinct(next.row_colour);
                f = std::move(next);
                if (next_classes == classes)
                    break;
                classes = next_classes;
            }
            return f;
        }

        auto swap_columns_is_automorphism(const DenseGrid & d, int a, int b) -> bool
        {
            auto m = [&](int x) { return x == a ? b : x == b ? a : x; };
            for (int y = 1; y <= d.rows(); ++y) {
                if (d.has_vertex(a, y) != d.has_vertex(b, y))
                    return false;
                for (int x1 = 1; x1 <= d.columns(); ++x1)
                    for (int x2 = x1 + 1; x2 <= d.columns(); ++x2)
                        if (d.has_h(x1, x2, y) != d.has_h(m(x1), m(x2), y))
                            return false;
                for (int y2 = y + 1; y2 <= d.rows(); ++y2)
                    if (d.has_v(a, y, y2) != d.has_v(b, y, y2))
                        return false;
            }
            return true;
        }

        auto swap_rows_is_automorphism(const DenseGrid & d, int a, int b) -> bool
        {
            auto m = [&](int y) { return y == a ? b : y == b ? a : y; };
            for (int x = 1; x <= d.columns(); ++x) {
                if (d.has_vertex(x, a) != d.has_vertex(x, b))
                    return false;
                for (int y1 = 1; y1 <= d.rows(); ++y1)
                    for (int y2 = y1 + 1; y2 <= d.rows(); ++y2)
                        if (d.has_v(x, y1, y2) != d.has_v(x, m(y1), m(y2)))
                            return false;
                for (int x2 = x + 1; x2 <= d.columns(); ++x2)
                    if (d.has_h(x, x2, a) != d.has_h(x, x2, b))
                        return false;
            }
            return true;
        }

        // Lines grouped into cells by colour, cells in colour order. A cell is
        // free when every adjacent transposition inside it is an automorphism,
        // in which case all orders of that cell give the same code.
        struct Cells
        {
            vector<vector<int>> members;
            vector<bool> free;
        };

        template <typename Swap_>
        auto make_cells(const vector<int> & colour, const Swap_ & is_auto) -> Cells
        {
            std::map<int, vector<int>> by_colour;
            for (int i = 0; i < static_cast<int>(colour.size()); ++i)
                by_colour[colour[i]].push_back(i + 1);
            Cells cells;
            for (auto & [_, m] : by_colour) {
                bool free = true;
                for (std::size_t i = 0; free && i + 1 < m.size(); ++i)
                    free = is_auto(m[i], m[i + 1]);
                cells.members.push_back(m);
                cells.free.push_back(free);
            }
            return cells;
        }

        // Visits every concatenation of per-cell orders (only the sorted order
        // for free cells).
        template <typename Visit_>
        auto for_each_order(Cells cells, std::size_t index, vector<int> & order, const Visit_ & visit) -> void
        {
            if (index == cells.members.size()) {
                visit(order);
                return;
            }
            auto & m = cells.members[index];
            std::sort(m.begin(), m.end());
            do {
                auto mark = order.size();
                order.insert(order.end(), m.begin(), m.end());
                for_each_order(cells, index + 1, order, visit);
                order.resize(mark);
            } while (! cells.free[index] && std::next_permutation(m.begin(), m.end()));
        }

        // order[i] is the original line placed at position i + 1.
        auto encode(const DenseGrid & d, const vector<int> & cols, const vector<int> & rows)
            -> vector<std::uint8_t>
        {
            int c = d.columns(), r = d.rows();
            vector<std::uint8_t> code;
            code.reserve(2 + c * r + r * c * c / 2 + c * r * r / 2);
            code.push_back(static_cast<std::uint8_t>(c));
            code.push_back(static_cast<std::uint8_t>(r));
            for (int j = 0; j < r; ++j)
                for (int i = 0; i < c; ++i)
                    code.push_back(d.has_vertex(cols[i], rows[j]));
            for (int j = 0; j < r; ++j)
                for (int i1 = 0; i1 < c; ++i1)
                    for (int i2 = i1 + 1; i2 < c; ++i2)
                        code.push_back(d.has_h(cols[i1], cols[i2], rows[j]));
            for (int i = 0; i < c; ++i)
                for (int j1 = 0; j1 < r; ++j1)
                    for (int j2 = j1 + 1; j2 < r; ++j2)
                        code.push_back(d.has_v(cols[i], rows[j1], rows[j2]));
            return code;
        }

        auto invert(const vector<int> & order) -> vector<int>
        {
            vector<int> perm(order.size());
            for (std::size_t i = 0; i < order.size(); ++i)
                perm[order[i] - 1] = static_cast<int>(i) + 1;
            return perm;
        }

        auto canonical_labeling_fixed(const GridSubgraph & g) -> CanonicalLabeling
        {
            DenseGrid d(g);
            int c = g.columns(), r = g.rows();
            auto refined = refine(d);
            auto column_cells = make_cells(refined.column_colour,
                [&](int a, int b) { return swap_columns_is_automorphism(d, a, b); });

            vector<std::uint8_t> best;
            vector<int> best_cols, best_rows;
            vector<int> cols;
            for_each_order(column_cells, 0, cols, [&](const vector<int> & col_order) {
                // With columns fixed, rows are told apart by their ordered
                // contents, then refined by vertical adjacency.
                vector<Key> keys(r);
                for (int y = 1; y <= r; ++y) {
                    Key k{refined.row_colour[y - 1]};
                    for (int i = 0; i < c; ++i)
                        k.push_back(d.has_vertex(col_order[i], y));
                    for (int i1 = 0; i1 < c; ++i1)
                        for (int i2 = i1 + 1; i2 < c; ++i2)
                            k.push_back(d.has_h(col_order[i1], col_order[i2], y));
                    keys[y - 1] = std::move(k);
                }
                auto colour = rank_keys(keys);
                int classes = count_distinct(colour);
                while (classes < r) {
                    vector<Key> next(r);
                    for (int y = 1; y <= r; ++y) {
                        Key k{colour[y - 1]};
                        for (int i = 0; i < c; ++i) {
                            vector<int> nbrs;
                            for (int y2 = 1; y2 <= r; ++y2)
                                if (y2 != y && d.has_v(col_order[i], y, y2))
                                    nbrs.push_back(colour[y2 - 1]);
                            std::sort(nbrs.begin(), nbrs.end());
                            k.push_back(-1);
                            k.insert(k.end(), nbrs.begin(), nbrs.end());
                        }
                        next[y - 1] = std::move(k);
                    }
                    colour = rank_keys(next);
                    int next_classes = count_distinct(colour);
                    if (next_classes == classes)
                        break;
                    classes = next_classes;
                }
                auto row_cells = make_cells(colour, [&](int a, int b) { return swap_rows_is_automorphism(d, a, b); });
                vector<int> rows;
                for_each_order(row_cells, 0, rows, [&](const vector<int> & row_order) {
                    auto code = encode(d, col_order, row_order);
                    if (best.empty() || code < best) {
                        best = std::move(code);
                        best_cols = col_order;
                        best_rows = row_order;
                    }
                });
            });

            return CanonicalLabeling{CanonicalForm{std::move(best)}, GridIsoWitness{invert(best_cols), invert(best_rows), false}};
        }
    }

    auto canonical_labeling(const GridSubgraph & g, bool allow_transpose, const Caps & caps) -> CanonicalLabeling
    {
        int limit = caps.canonical_lines;
        if (g.columns() > limit || g.rows() > limit)
            throw CapExceeded("canonical form is limited to " + to_string(limit) + " columns and rows (graph is " +
                to_string(g.columns()) + "x" + to_string(g.rows()) +
                "); compare by explicit embedding search instead, or raise the 'canonical' cap");

        auto best = canonical_labeling_fixed(g);
        if (allow_transpose) {
            auto other = canonical_labeling_fixed(transpose(g));
            if (other.form < best.form) {
                best = std::move(other);
                best.witness.transposed = true;
            }
        }
        return best;
    }

    auto canonical_form(const GridSubgraph & g, bool allow_transpose, const Caps & caps) -> CanonicalForm
    {
        return canonical_labeling(g, allow_transpose, caps).form;
    }

    auto isomorphic(const GridSubgraph & g, const GridSubgraph & h, bool allow_transpose, const Caps & caps) -> bool
    {
        if (! allow_transpose && (g.columns() != h.columns() || g.rows() != h.rows()))
            return false;
        if (g.edge_count() != h.edge_count() || g.vertices().size() != h.vertices().size())
            return false;
        return canonical_form(g, allow_transpose, caps) == canonical_form(h, allow_transpose, caps);
    }
}

#include <gridram/embed.hh>
#include <gridram/meh_color.hh>

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

using std::optional;
using std::string;
using std::uint32_t;
using std::vector;

namespace gridram
{
    using std::to_string;

    ColumnColoring::ColumnColoring(int columns, int rows) :
        _columns(columns), _rows(rows), _colour(static_cast<std::size_t>(columns) * columns, 0)
    {
        if (columns < 1 || rows < 1)
            throw InvalidArgument("a colouring needs at least one column and one row");
        if (rows > 31)
            throw CapExceeded("colours are bitmasks over at most 31 rows");
    }

    auto ColumnColoring::colour(int x1, int x2) const -> uint32_t
    {
        if (x1 < 1 || x2 < 1 || x1 > _columns || x2 > _columns || x1 == x2)
            throw InvalidArgument("bad column pair " + to_string(x1) + "," + to_string(x2));
        return _colour[(x1 - 1) * _columns + (x2 - 1)];
    }

    void ColumnColoring::set_colour(int x1, int x2, uint32_t rows)
    {
        if (x1 < 1 || x2 < 1 || x1 > _columns || x2 > _columns || x1 == x2)
            throw InvalidArgument("bad column pair " + to_string(x1) + "," + to_string(x2));
        if (rows >> _rows)
            throw InvalidArgument("colour uses a row beyond " + to_string(_rows));
        _colour[(x1 - 1) * _columns + (x2 - 1)] = rows;
        _colour[(x2 - 1) * _columns + (x1 - 1)] = rows;
    }

    auto colour_string(uint32_t colour) -> string
    {
        string s = "{";
        bool first = true;
        for (int y = 1; y <= 32; ++y)
            if ((colour >> (y - 1)) & 1) {
                if (! first)
                    s += ",";
                s += to_string(y);
                first = false;
            }
        return s + "}";
    }

    auto parse_colour(const string & text, int rows) -> uint32_t
    {
        string cleaned;
        for (char c : text)
            cleaned += (c == '{' || c == '}' || c == ',') ? ' ' : c;
        std::istringstream in(cleaned);
        string token;
        uint32_t colour = 0;
        while (in >> token) {
            int y;
            try {
                std::size_t used = 0;
                y = std::stoi(token, &used);
                if (used != token.size())
                    throw std::invalid_argument(token);
            }
            catch (const std::exception &) {
                throw ParseError("colour entry '" + token + "' is not an integer");
            }
            if (y < 1 || y > rows)
                throw InvalidArgument("colour row " + token + " is outside 1.." + to_string(rows));
            colour |= uint32_t{1} << (y - 1);
        }
        return colour;
    }

    auto column_coloring(const GridSubgraph & g, const Caps & caps) -> ColumnColoring
    {
        if (g.rows() > caps.coloring_rows)
            throw CapExceeded(to_string(g.rows()) + " rows is above the colouring cap of " +
                to_string(caps.coloring_rows) + "; raise 'coloring_rows'");
        ColumnColoring chi(g.columns(), g.rows());
        vector<uint32_t> acc(static_cast<std::size_t>(g.columns()) * g.columns(), 0);
        for (auto & e : g.h_edges())
            acc[(e.x1 - 1) * g.columns() + (e.x2 - 1)] |= uint32_t{1} << (e.y - 1);
        for (int a = 1; a <= g.columns(); ++a)
            for (int b = a + 1; b <= g.columns(); ++b)
                chi.set_colour(a, b, acc[(a - 1) * g.columns() + (b - 1)]);
        return chi;
    }

    auto find_colored_pattern(const ColumnColoring & chi, const GridSubgraph & pattern, bool require_no_aligned)
        -> optional<vector<int>>
    {
        if (! pattern.v_edges().empty())
            throw InvalidArgument("the colouring search takes horizontal-only patterns");
        if (pattern.rows() > chi.rows())
            throw InvalidArgument("pattern has more rows than the colouring");
        int c = pattern.columns();
        auto h_chi = column_coloring(pattern, {.coloring_rows = 31});
        if (require_no_aligned)
            for (int a = 1; a <= c; ++a)
                for (int b = a + 1; b <= c; ++b)
                    if (std::popcount(h_chi.colour(a, b)) > 1)
                        throw InvalidArgument("columns " + to_string(a) + " and " + to_string(b) +
                            " carry more than one horizontal edge");
        if (c > chi.columns())
            return std::nullopt;

        vector<int> map(c, 0);
        vector<char> used(chi.columns() + 1, 0);
        std::function<bool(int)> place = [&](int a) {
            if (a > c)
                return true;
            for (int x = 1; x <= chi.columns(); ++x) {
                if (used[x])
                    continue;
                bool ok = true;
                for (int b = 1; b < a && ok; ++b) {
                    uint32_t need = h_chi.colour(b, a);
                    ok = (need & ~chi.colour(map[b - 1], x)) == 0;
                }
                if (! ok)
                    continue;
                map[a - 1] = x;
                used[x] = 1;
                if (place(a + 1))
                    return true;
                used[x] = 0;
            }
            return false;
        };
        if (place(1))
            return map;
        return std::nullopt;
    }

    auto color_restricted_subset(const ColumnColoring & chi, uint32_t forbidden, const Caps & caps) -> ColourSubset
    {
        LineGraph conflict{LineKind::row, 1, chi.columns(), {}};
        for (int a = 1; a <= chi.columns(); ++a)
            for (int b = a + 1; b <= chi.columns(); ++b)
                if (chi.colour(a, b) == forbidden)
                    conflict.adjacency.push_back({a, b});
        ColourSubset out;
        if (chi.columns() <= caps.color_subset_exact) {
            Caps inner = caps;
            inner.coclique_line = std::max(inner.coclique_line, chi.columns());
            out.columns = max_independent_set(conflict, inner);
        }
        else {
            out.columns = greedy_independent_set(conflict);
            std::sort(out.columns.begin(), out.columns.end());
            out.exact = false;
        }
        return out;
    }
}

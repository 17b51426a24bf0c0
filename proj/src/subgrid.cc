#include <gridram/ramsey.hh>

#include <functional>

using std::optional;
using std::string;
using std::vector;

namespace gridram
{
    using std::to_string;

    namespace
    {
        auto next_subset(vector<int> & pick, int n) -> bool
        {
            int k = static_cast<int>(pick.size());
            int i = k - 1;
            while (i >= 0 && pick[i] == n - k + i + 1)
                --i;
            if (i < 0)
                return false;
            ++pick[i];
            for (int j = i + 1; j < k; ++j)
                pick[j] = pick[j - 1] + 1;
            return true;
        }

        auto colour_of(bool present) -> int { return present ? 1 : 2; }
    }

    auto uniform_subgrid(const GridSubgraph & colouring, int m) -> optional<UniformSubgrid>
    {
        if (! colouring.spanning())
            throw InvalidArgument("a colouring is given as a spanning grid (present = colour 1)");
        if (m < 1)
            throw InvalidArgument("M must be positive");
        int c = colouring.columns(), r = colouring.rows();
        if (m > c || m > r)
            return std::nullopt;
        DenseGrid g(colouring);

        for (int hc : {1, 2})
            for (int vc : {1, 2}) {
                vector<int> cols(m);
                for (int i = 0; i < m; ++i)
                    cols[i] = i + 1;
                do {
                    vector<int> good;
                    for (int y = 1; y <= r; ++y) {
                        bool ok = true;
                        for (int a = 0; a < m && ok; ++a)
                            for (int b = a + 1; b < m && ok; ++b)
                                ok = colour_of(g.has_h(cols[a], cols[b], y)) == hc;
                        if (ok)
                            good.push_back(y);
                    }
                    auto compatible = [&](int y1, int y2) {
                        for (int x : cols)
                            if (colour_of(g.has_v(x, y1, y2)) != vc)
                                return false;
                        return true;
                    };
                    vector<int> chosen;
                    std::function<bool(std::size_t)> extend = [&](std::size_t from) {
                        if (static_cast<int>(chosen.size()) == m)
                            return true;
                        for (std::size_t i = from; i < good.size(); ++i) {
                            bool ok = true;
                            for (int y : chosen)
                                if (! compatible(y, good[i])) {
                                    ok = false;
                                    break;
                                }
                            if (! ok)
                                continue;
                            chosen.push_back(good[i]);
                            if (extend(i + 1))
                                return true;
                            chosen.pop_back();
                        }
                        return false;
                    };
                    if (static_cast<int>(good.size()) >= m && extend(0))
                        return UniformSubgrid{cols, chosen, hc, vc};
                } while (next_subset(cols, c));
            }
        return std::nullopt;
    }

    auto verify_uniform_subgrid(const GridSubgraph & colouring, int m, const UniformSubgrid & s) -> bool
    {
        if (static_cast<int>(s.columns.size()) != m || static_cast<int>(s.rows.size()) != m)
            return false;
        for (std::size_t i = 0; i < s.columns.size(); ++i) {
            if (s.columns[i] < 1 || s.columns[i] > colouring.columns() || (i && s.columns[i] <= s.columns[i - 1]))
                return false;
            if (s.rows[i] < 1 || s.rows[i] > colouring.rows() || (i && s.rows[i] <= s.rows[i - 1]))
                return false;
        }
        for (int y : s.rows)
            for (std::size_t a = 0; a < s.columns.size(); ++a)
                for (std::size_t b = a + 1; b < s.columns.size(); ++b)
                    if (colour_of(colouring.has_h_edge(s.columns[a], s.columns[b], y)) != s.horizontal_colour)
                        return false;
        for (int x : s.columns)
            for (std::size_t a = 0; a < s.rows.size(); ++a)
                for (std::size_t b = a + 1; b < s.rows.size(); ++b)
                    if (colour_of(colouring.has_v_edge(x, s.rows[a], s.rows[b])) != s.vertical_colour)
                        return false;
        return true;
    }

    auto known_diagonal_ramsey() -> RamseyTable
    {
        return {{1, {1, 1}}, {2, {2, 2}}, {3, {6, 6}}, {4, {18, 18}}};
    }

    auto uniform_subgrid_threshold(int m, const RamseyTable & table) -> UniformSubgridThreshold
    {
        if (m < 1)
            throw InvalidArgument("M must be positive");
        UniformSubgridThreshold t;
        t.m = m;
        if (m == 1)
            return t;

        auto rmm = table.find(m);
        if (rmm == table.end() || rmm->second.first != rmm->second.second)
            throw InvalidArgument("threshold for M = " + to_string(m) + " needs the exact value of R(" + to_string(m) +
                "," + to_string(m) + ")");
        BigInt r = rmm->second.first;
        t.l = 2 * BigInt(m) * binomial(r, static_cast<unsigned>(m)) + 1;
        string ls = t.l.str();
        if (t.l > 1'000'000)
            throw InvalidArgument("threshold for M = " + to_string(m) + " needs R(L,L) with L = " + ls +
                "; no table can supply it");
        int l = t.l.convert_to<int>();
        auto rll = table.find(l);
        if (rll == table.end())
            throw InvalidArgument("threshold for M = " + to_string(m) + " needs R(" + ls + "," + ls +
                ") (L = " + ls + "); supply an interval for it");
        auto bound = [&](const BigInt & rl) { return 2 * r * binomial(rl, static_cast<unsigned>(l)); };
        t.lower = bound(rll->second.first);
        t.upper = bound(rll->second.second);
        return t;
    }
}

#include <gridram/embed.hh>

#include <algorithm>
#include <bit>

using std::optional;
using std::uint64_t;
using std::vector;

namespace gridram
{
    using std::to_string;

    namespace
    {
        auto neighbourhoods(const LineGraph & line) -> vector<uint64_t>
        {
            vector<uint64_t> adj(line.n + 1, 0);
            for (auto [a, b] : line.adjacency) {
                adj[a] |= uint64_t{1} << (b - 1);
                adj[b] |= uint64_t{1} << (a - 1);
            }
            return adj;
        }

        auto check_cap(const LineGraph & line, const Caps & caps) -> void
        {
            if (line.n > caps.coclique_line || line.n > 64)
                throw CapExceeded("exact independent set search is limited to " + to_string(caps.coclique_line) +
                    " positions per line (line has " + to_string(line.n) +
                    "); use greedy_independent_set for a lower bound, or raise the 'coclique' cap");
        }

        // Branch and bound: pick the candidate of largest degree, either take
        // it (dropping its neighbours) or drop it. Stops once `goal` is met.
        struct Mis
        {
            const vector<uint64_t> & adj;
            int goal;
            uint64_t best = 0;
            int best_size = 0;

            auto run(uint64_t chosen, int chosen_size, uint64_t candidates) -> bool
            {
                if (chosen_size + std::popcount(candidates) <= best_size)
                    return false;
                if (! candidates) {
                    best = chosen;
                    best_size = chosen_size;
                    return best_size >= goal;
                }
                int pick = 0, pick_degree = -1;
                for (uint64_t s = candidates; s; s &= s - 1) {
                    int v = std::countr_zero(s) + 1;
                    int d = std::popcount(adj[v] & candidates);
                    if (d > pick_degree) {
                        pick = v;
                        pick_degree = d;
                    }
                }
                uint64_t b = uint64_t{1} << (pick - 1);
                if (pick_degree == 0)
                    return run(chosen | candidates, chosen_size + std::popcount(candidates), 0);
                if (run(chosen | b, chosen_size + 1, candidates & ~b & ~adj[pick]))
                    return true;
                return run(chosen, chosen_size, candidates & ~b);
            }
        };

        auto positions(uint64_t set) -> vector<int>
        {
            vector<int> result;
            for (; set; set &= set - 1)
                result.push_back(std::countr_zero(set) + 1);
            return result;
        }

        auto to_coclique(LineKind kind, int index, const vector<int> & members) -> Coclique
        {
            Coclique c{kind, index, {}};
            for (int m : members)
                c.positions.push_back(kind == LineKind::row ? Point{m, index} : Point{index, m});
            return c;
        }
    }

    auto is_coclique(const GridSubgraph & host, const Coclique & c) -> bool
    {
        int lines = c.kind == LineKind::row ? host.rows() : host.columns();
        if (c.index < 1 || c.index > lines)
            return false;
        for (std::size_t i = 0; i < c.positions.size(); ++i) {
            auto p = c.positions[i];
            if (! host.has_vertex(p) || (c.kind == LineKind::row ? p.y : p.x) != c.index)
                return false;
            for (std::size_t j = 0; j < i; ++j) {
                auto q = c.positions[j];
                if (p == q)
                    return false;
                if (c.kind == LineKind::row ? host.has_h_edge(p.x, q.x, p.y) : host.has_v_edge(p.x, p.y, q.y))
                    return false;
            }
        }
        return true;
    }

    auto max_independent_set(const LineGraph & line, const Caps & caps) -> vector<int>
    {
        check_cap(line, caps);
        auto adj = neighbourhoods(line);
        Mis mis{adj, line.n + 1};
        uint64_t all = line.n == 64 ? ~uint64_t{0} : (uint64_t{1} << line.n) - 1;
        mis.run(0, 0, all);
        return positions(mis.best);
    }

    auto independent_set_of_size(const LineGraph & line, int k, const Caps & caps) -> optional<vector<int>>
    {
        if (k <= 0)
            return vector<int>{};
        if (k > line.n)
            return std::nullopt;
        check_cap(line, caps);
        auto adj = neighbourhoods(line);
        Mis mis{adj, k};
        mis.best_size = k - 1;
        uint64_t all = line.n == 64 ? ~uint64_t{0} : (uint64_t{1} << line.n) - 1;
        mis.run(0, 0, all);
        if (mis.best_size < k)
            return std::nullopt;
        auto result = positions(mis.best);
        result.resize(k);
        return result;
    }

    auto greedy_independent_set(const LineGraph & line, int target, const vector<int> & candidates) -> vector<int>
    {
        vector<char> alive(line.n + 1, candidates.empty() ? 1 : 0);
        alive[0] = 0;
        for (int c : candidates)
            if (c >= 1 && c <= line.n)
                alive[c] = 1;
        vector<vector<int>> adj(line.n + 1);
        for (auto [a, b] : line.adjacency) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }

        vector<int> chosen;
        while (target <= 0 || static_cast<int>(chosen.size()) < target) {
            int pick = 0, pick_degree = 0;
            for (int v = 1; v <= line.n; ++v) {
                if (! alive[v])
                    continue;
                int d = static_cast<int>(std::count_if(adj[v].begin(), adj[v].end(), [&](int w) { return alive[w]; }));
                if (! pick || d < pick_degree) {
                    pick = v;
                    pick_degree = d;
                }
            }
            if (! pick)
                break;
            chosen.push_back(pick);
            alive[pick] = 0;
            for (int w : adj[pick])
                alive[w] = 0;
        }
        std::sort(chosen.begin(), chosen.end());
        return chosen;
    }

    auto max_coclique(const GridSubgraph & host, const Caps & caps) -> MaxCoclique
    {
        if (! host.spanning())
            throw InvalidArgument("max_coclique needs a spanning host");
        MaxCoclique best;
        for (int y = 1; y <= host.rows(); ++y) {
            auto set = max_independent_set(line_graph(host, LineKind::row, y), caps);
            if (static_cast<int>(set.size()) > best.size)
                best = {static_cast<int>(set.size()), to_coclique(LineKind::row, y, set)};
        }
        for (int x = 1; x <= host.columns(); ++x) {
            auto set = max_independent_set(line_graph(host, LineKind::column, x), caps);
            if (static_cast<int>(set.size()) > best.size)
                best = {static_cast<int>(set.size()), to_coclique(LineKind::column, x, set)};
        }
        return best;
    }

    auto find_coclique(const GridSubgraph & host, int k, const Caps & caps) -> optional<Coclique>
    {
        if (! host.spanning())
            throw InvalidArgument("find_coclique needs a spanning host");
        for (int y = 1; y <= host.rows(); ++y)
            if (auto set = independent_set_of_size(line_graph(host, LineKind::row, y), k, caps))
                return to_coclique(LineKind::row, y, *set);
        for (int x = 1; x <= host.columns(); ++x)
            if (auto set = independent_set_of_size(line_graph(host, LineKind::column, x), k, caps))
                return to_coclique(LineKind::column, x, *set);
        return std::nullopt;
    }
}

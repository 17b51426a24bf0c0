#include <gridram/ramsey.hh>

#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

using std::optional;
using std::string;
using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace gridram
{
    using std::to_string;

    auto to_string(CertificateKind kind) -> string
    {
        switch (kind) {
            case CertificateKind::embedding: return "embedding";
            case CertificateKind::coclique: return "coclique";
            case CertificateKind::witness_grid: return "witness_grid";
            case CertificateKind::inconclusive: return "inconclusive";
        }
        return "?";
    }

    auto to_string(AvoiderStatus s) -> string
    {
        switch (s) {
            case AvoiderStatus::found: return "avoider found";
            case AvoiderStatus::none: return "no avoider";
            case AvoiderStatus::undecided: return "undecided";
        }
        return "?";
    }

    auto slot_order(int n) -> vector<Slot>
    {
        vector<Slot> slots;
        for (int line = 1; line <= n; ++line)
            for (auto kind : {LineKind::row, LineKind::column})
                for (int a = 1; a <= n; ++a)
                    for (int b = a + 1; b <= n; ++b)
                        slots.push_back({kind, line, a, b});
        return slots;
    }

    auto grid_from_slots(int n, const vector<Slot> & slots, const vector<bool> & present) -> GridSubgraph
    {
        vector<HEdge> h;
        vector<VEdge> v;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (! present[i])
                continue;
            auto & s = slots[i];
            if (s.kind == LineKind::row)
                h.push_back({s.a, s.b, s.line});
            else
                v.push_back({s.line, s.a, s.b});
        }
        return GridSubgraph::from_edges(n, n, std::move(h), std::move(v), std::nullopt, true);
    }

    auto is_avoider(const GridSubgraph & pattern, const GridSubgraph & host, int k, const Caps & caps) -> bool
    {
        if (! host.spanning() || k < 1)
            return false;
        return ! find_coclique(host, k, caps) && ! contains(pattern, host);
    }

    auto verify_certificate(const Certificate & cert, const GridSubgraph & pattern, const GridSubgraph & host, int k,
        const Caps & caps) -> bool
    {
        switch (cert.kind) {
            case CertificateKind::embedding:
                return cert.embedding && is_embedding(pattern, host, *cert.embedding);
            case CertificateKind::coclique:
                return cert.coclique && static_cast<int>(cert.coclique->positions.size()) == k &&
                    is_coclique(host, *cert.coclique);
            case CertificateKind::witness_grid:
                return cert.witness && is_avoider(pattern, *cert.witness, k, caps);
            case CertificateKind::inconclusive:
                return true;
        }
        return false;
    }

    namespace
    {
        auto has_clique(const vector<uint32_t> & adj, uint32_t candidates, int size) -> bool
        {
            if (size <= 0)
                return true;
            if (std::popcount(candidates) < size)
                return false;
            for (uint32_t s = candidates; s; s &= s - 1) {
                int v = std::countr_zero(s);
                uint32_t later = s & (s - 1);
                if (has_clique(adj, later & adj[v], size - 1))
                    return true;
            }
            return false;
        }

        // State shared by brute force and backtracking: which slots are
        // decided absent (per line, as bitmasks over positions) and the
        // host built from the slots decided present.
        class Board
        {
        public:
            Board(const GridSubgraph & pattern, int k, int n) :
                _pattern(pattern), _k(k), _n(n), _present(n, n, true),
                _absent_rows(n + 1, vector<uint32_t>(n, 0)), _absent_columns(n + 1, vector<uint32_t>(n, 0))
            {
                for (auto & e : pattern.h_edges())
                    _h_edges.push_back(e);
                for (auto & e : pattern.v_edges())
                    _v_edges.push_back(e);
            }

            auto set_absent(const Slot & s) -> void
            {
                auto & adj = s.kind == LineKind::row ? _absent_rows[s.line] : _absent_columns[s.line];
                adj[s.a - 1] |= uint32_t{1} << (s.b - 1);
                adj[s.b - 1] |= uint32_t{1} << (s.a - 1);
            }

            auto clear_absent(const Slot & s) -> void
            {
                auto & adj = s.kind == LineKind::row ? _absent_rows[s.line] : _absent_columns[s.line];
                adj[s.a - 1] &= ~(uint32_t{1} << (s.b - 1));
                adj[s.b - 1] &= ~(uint32_t{1} << (s.a - 1));
            }

            auto set_present(const Slot & s, bool on) -> void
            {
                if (s.kind == LineKind::row)
                    _present.set_h(s.a, s.b, s.line, on);
                else
                    _present.set_v(s.line, s.a, s.b, on);
            }

            // Some k-set through the new absent pair is now entirely absent.
            auto absent_closes_coclique(const Slot & s) const -> bool
            {
                if (_k <= 2)
                    return true;
                auto & adj = s.kind == LineKind::row ? _absent_rows[s.line] : _absent_columns[s.line];
                return has_clique(adj, adj[s.a - 1] & adj[s.b - 1], _k - 2);
            }

            // Some copy of the pattern uses the new present slot.
            auto present_closes_pattern(const Slot & s) const -> bool
            {
                auto try_anchor = [&](int pa, int pb, int pline, bool horizontal) {
                    EmbedConstraints c;
                    c.column_masks.assign(_pattern.columns(), ~uint64_t{0});
                    c.row_masks.assign(_pattern.rows(), ~uint64_t{0});
                    if (horizontal) {
                        c.column_masks[pa - 1] = uint64_t{1} << (s.a - 1);
                        c.column_masks[pb - 1] = uint64_t{1} << (s.b - 1);
                        c.row_masks[pline - 1] = uint64_t{1} << (s.line - 1);
                    }
                    else {
                        c.row_masks[pa - 1] = uint64_t{1} << (s.a - 1);
                        c.row_masks[pb - 1] = uint64_t{1} << (s.b - 1);
                        c.column_masks[pline - 1] = uint64_t{1} << (s.line - 1);
                    }
                    return contains(_pattern, _present, c).has_value();
                };
                if (s.kind == LineKind::row) {
                    for (auto & e : _h_edges)
                        if (try_anchor(e.x1, e.x2, e.y, true) || try_anchor(e.x2, e.x1, e.y, true))
                            return true;
                }
                else {
                    for (auto & e : _v_edges)
                        if (try_anchor(e.y1, e.y2, e.x, false) || try_anchor(e.y2, e.y1, e.x, false))
                            return true;
                }
                return false;
            }

            auto any_coclique() const -> bool
            {
                if (_k <= 1)
                    return true;
                uint32_t all = (uint32_t{1} << _n) - 1;
                for (int line = 1; line <= _n; ++line)
                    for (auto * adj : {&_absent_rows[line], &_absent_columns[line]})
                        for (int v = 0; v < _n; ++v)
                            if (has_clique(*adj, (*adj)[v] & all & ~((uint32_t{2} << v) - 1), _k - 1))
                                return true;
                return false;
            }

            auto present() const -> const DenseGrid & { return _present; }

        private:
            const GridSubgraph & _pattern;
            int _k, _n;
            DenseGrid _present;
            vector<vector<uint32_t>> _absent_rows, _absent_columns;
            vector<HEdge> _h_edges;
            vector<VEdge> _v_edges;
        };

        auto brute_force(const GridSubgraph & pattern, int k, int n, uint64_t & nodes) -> AvoiderResult
        {
            auto slots = slot_order(n);
            auto s = slots.size();
            AvoiderResult result{AvoiderStatus::none, std::nullopt, "brute force", 0};
            for (uint64_t mask = 0; mask < (uint64_t{1} << s); ++mask) {
                ++nodes;
                Board board(pattern, k, n);
                vector<bool> present(s);
                for (std::size_t i = 0; i < s; ++i) {
                    present[i] = (mask >> (s - 1 - i)) & 1;
                    if (present[i])
                        board.set_present(slots[i], true);
                    else
                        board.set_absent(slots[i]);
                }
                if (board.any_coclique())
                    continue;
                if (contains(pattern, board.present()))
                    continue;
                result.status = AvoiderStatus::found;
                result.witness = grid_from_slots(n, slots, present);
                break;
            }
            result.nodes = nodes;
            return result;
        }

        class Backtracker
        {
        public:
            Backtracker(const GridSubgraph & pattern, int k, int n, std::atomic<uint64_t> & nodes, uint64_t budget) :
                _board(pattern, k, n), _slots(slot_order(n)), _present(_slots.size(), false), _nodes(nodes),
                _budget(budget), _n(n)
            {
            }

            // Fixes the first prefix.size() slots; false if that prefix is
            // already infeasible.
            auto apply_prefix(const vector<bool> & prefix) -> bool
            {
                for (std::size_t i = 0; i < prefix.size(); ++i)
                    if (! assign(i, prefix[i]))
                        return false;
                _start = prefix.size();
                return true;
            }

            // true: found; false: exhausted. Throws BudgetExhausted.
            auto run() -> bool { return dfs(_start); }

            auto witness() const -> GridSubgraph { return grid_from_slots(_n, _slots, _present); }

            struct BudgetExhausted
            {
            };

        private:
            Board _board;
            vector<Slot> _slots;
            vector<bool> _present;
            std::atomic<uint64_t> & _nodes;
            uint64_t _budget;
            int _n;
            std::size_t _start = 0;

            auto assign(std::size_t i, bool value) -> bool
            {
                auto & s = _slots[i];
                _present[i] = value;
                if (value) {
                    _board.set_present(s, true);
                    return ! _board.present_closes_pattern(s);
                }
                _board.set_absent(s);
                return ! _board.absent_closes_coclique(s);
            }

            auto unassign(std::size_t i) -> void
            {
                if (_present[i])
                    _board.set_present(_slots[i], false);
                else
                    _board.clear_absent(_slots[i]);
                _present[i] = false;
            }

            auto dfs(std::size_t i) -> bool
            {
                if (_nodes.fetch_add(1, std::memory_order_relaxed) >= _budget)
                    throw BudgetExhausted{};
                if (i == _slots.size())
                    return true;
                for (bool value : {false, true}) {
                    bool ok = assign(i, value);
                    if (ok && dfs(i + 1))
                        return true;
                    unassign(i);
                }
                return false;
            }
        };

        auto backtrack(const GridSubgraph & pattern, int k, int n, int workers, uint64_t budget) -> AvoiderResult
        {
            std::atomic<uint64_t> nodes{0};
            auto slot_count = slot_order(n).size();
            std::size_t depth = 0;
            while (workers > 1 && depth < slot_count && (std::size_t{1} << depth) < static_cast<std::size_t>(workers) * 4)
                ++depth;
            std::size_t tasks = std::size_t{1} << depth;

            std::mutex lock;
            std::atomic<std::size_t> next{0};
            std::size_t best = tasks;
            optional<GridSubgraph> best_witness;
            bool exhausted = false;

            auto work = [&] {
                while (true) {
                    std::size_t t = next.fetch_add(1);
                    if (t >= tasks)
                        return;
                    {
                        std::lock_guard guard(lock);
                        if (t > best)
                            return;
                    }
                    vector<bool> prefix(depth);
                    for (std::size_t i = 0; i < depth; ++i)
                        prefix[i] = (t >> (depth - 1 - i)) & 1;
                    Backtracker b(pattern, k, n, nodes, budget);
                    try {
                        if (b.apply_prefix(prefix) && b.run()) {
                            std::lock_guard guard(lock);
                            if (t < best) {
                                best = t;
                                best_witness = b.witness();
                            }
                        }
                    }
                    catch (const Backtracker::BudgetExhausted &) {
                        std::lock_guard guard(lock);
                        exhausted = true;
                    }
                }
            };

            if (workers <= 1)
                work();
            else {
                vector<std::thread> threads;
                for (int w = 0; w < workers; ++w)
                    threads.emplace_back(work);
                for (auto & t : threads)
                    t.join();
            }

            AvoiderResult result{AvoiderStatus::none, std::nullopt, "backtracking", nodes.load()};
            if (best_witness) {
                result.status = AvoiderStatus::found;
                result.witness = std::move(best_witness);
            }
            else if (exhausted)
                result.status = AvoiderStatus::undecided;
            return result;
        }
    }

    auto find_avoider(const GridSubgraph & pattern, int k, int n, AvoiderMethod method, int workers, const Caps & caps)
        -> AvoiderResult
    {
        if (n < 1)
            throw InvalidArgument("grid size must be positive");
        if (n > 20)
            throw CapExceeded("avoider search supports N <= 20");
        if (k <= 1)
            return {AvoiderStatus::none, std::nullopt, "trivial: every vertex is a 1-coclique", 0};
        if (contains(pattern, GridSubgraph::empty_spanning(n, n)))
            return {AvoiderStatus::none, std::nullopt, "trivial: the pattern needs no edges", 0};

        if (method == AvoiderMethod::automatic)
            method = n <= caps.brute_force_n ? AvoiderMethod::brute_force
                   : n <= caps.backtrack_n   ? AvoiderMethod::backtracking
                                             : AvoiderMethod::automatic;
        if (method == AvoiderMethod::brute_force) {
            if (n > caps.brute_force_n)
                throw CapExceeded("brute force is limited to N <= " + to_string(caps.brute_force_n) +
                    "; raise the 'brute_force_n' cap");
            uint64_t nodes = 0;
            return brute_force(pattern, k, n, nodes);
        }
        if (method == AvoiderMethod::backtracking) {
            if (n > caps.backtrack_n)
                throw CapExceeded("backtracking is limited to N <= " + to_string(caps.backtrack_n) +
                    "; raise the 'backtrack_n' cap or export CNF");
            return backtrack(pattern, k, n, workers, caps.backtrack_nodes);
        }
        return {AvoiderStatus::undecided, std::nullopt,
            "beyond built-in search caps; export CNF and import a solver model", 0};
    }

    auto gr_exact(const GridSubgraph & pattern, int k, int n_max, AvoiderMethod method, int workers, const Caps & caps)
        -> GrResult
    {
        if (k < 1)
            throw InvalidArgument("k must be positive");
        if (n_max < 1)
            throw InvalidArgument("nmax must be positive");
        GrResult result;
        for (int n = 1; n <= n_max; ++n) {
            auto level = find_avoider(pattern, k, n, method, workers, caps);
            result.levels.push_back({n, level});
            if (level.status == AvoiderStatus::none) {
                result.value = n;
                result.lower_bound = n;
                result.status = "gr = " + to_string(n);
                return result;
            }
            if (level.status == AvoiderStatus::undecided) {
                result.status = "undecided at N = " + to_string(n) + "; gr >= " + to_string(result.lower_bound);
                return result;
            }
            result.lower_bound = n + 1;
        }
        result.status = "gr > " + to_string(n_max);
        return result;
    }
}

#include <gridram/embed.hh>
#include <gridram/patterns.hh>

#include <set>

using std::uint64_t;
using std::vector;

namespace gridram
{
    using std::to_string;

    namespace
    {
        // Two anchored embeddings may meet only through the anchor's own
        // column and row.
        auto compatible(const Embedding & a, const Embedding & b, Point tree_vertex) -> bool
        {
            for (std::size_t i = 0; i < a.column_map.size(); ++i)
                for (std::size_t j = 0; j < b.column_map.size(); ++j)
                    if (a.column_map[i] == b.column_map[j] &&
                        ! (static_cast<int>(i) + 1 == tree_vertex.x && static_cast<int>(j) + 1 == tree_vertex.x))
                        return false;
            for (std::size_t i = 0; i < a.row_map.size(); ++i)
                for (std::size_t j = 0; j < b.row_map.size(); ++j)
                    if (a.row_map[i] == b.row_map[j] &&
                        ! (static_cast<int>(i) + 1 == tree_vertex.y && static_cast<int>(j) + 1 == tree_vertex.y))
                        return false;
            return true;
        }

        auto extend(const vector<Embedding> & all, const vector<vector<char>> & ok, std::size_t from, int n,
            vector<std::size_t> & picked) -> bool
        {
            if (static_cast<int>(picked.size()) == n)
                return true;
            for (std::size_t i = from; i < all.size(); ++i) {
                bool fine = true;
                for (auto p : picked)
                    if (! ok[p][i]) {
                        fine = false;
                        break;
                    }
                if (! fine)
                    continue;
                picked.push_back(i);
                if (extend(all, ok, i + 1, n, picked))
                    return true;
                picked.pop_back();
            }
            return false;
        }
    }

    auto verify_n_diverse(const GridSubgraph & host, Point host_vertex, const GridSubgraph & tree, Point tree_vertex,
        const vector<Embedding> & witnesses) -> bool
    {
        for (auto & w : witnesses) {
            if (! is_embedding(tree, host, w))
                return false;
            if (w.column_map[tree_vertex.x - 1] != host_vertex.x || w.row_map[tree_vertex.y - 1] != host_vertex.y)
                return false;
        }
        for (std::size_t i = 0; i < witnesses.size(); ++i)
            for (std::size_t j = i + 1; j < witnesses.size(); ++j)
                if (! compatible(witnesses[i], witnesses[j], tree_vertex))
                    return false;
        return true;
    }

    auto is_n_diverse(const GridSubgraph & host, Point host_vertex, const GridSubgraph & tree, Point tree_vertex, int n,
        const Caps & caps) -> DiverseResult
    {
        if (n < 1)
            throw InvalidArgument("n-diverse needs n >= 1");
        if (! is_simple_tree(tree))
            throw InvalidArgument("n-diverse needs a simple tree");
        if (! tree.has_vertex(tree_vertex))
            throw InvalidArgument("tree vertex is not a vertex of the tree");
        if (! host.has_vertex(host_vertex))
            throw InvalidArgument("host vertex is not a vertex of the host");
        auto product = static_cast<long>(tree.vertices().size()) * n;
        if (product > caps.diverse_product)
            throw CapExceeded("n-diverse search is limited to |T| * n <= " + to_string(caps.diverse_product) + " (got " +
                to_string(product) + "); raise the 'diverse' cap");

        EmbedConstraints anchored;
        anchored.column_masks.assign(tree.columns(), ~uint64_t{0});
        anchored.row_masks.assign(tree.rows(), ~uint64_t{0});
        anchored.column_masks[tree_vertex.x - 1] = uint64_t{1} << (host_vertex.x - 1);
        anchored.row_masks[tree_vertex.y - 1] = uint64_t{1} << (host_vertex.y - 1);

        vector<Embedding> all;
        for_each_embedding(tree, host, [&](const Embedding & e) {
            all.push_back(e);
            return true;
        }, anchored);

        DiverseResult result;
        if (all.empty())
            return result;

        // A one-line-each tree has a single anchored embedding, which may be
        // repeated: its copies coincide only at the anchor.
        if (tree.columns() == 1 && tree.rows() == 1) {
            result.diverse = true;
            result.witnesses.assign(n, all.front());
            return result;
        }

        vector<vector<char>> ok(all.size(), vector<char>(all.size(), 0));
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                ok[i][j] = ok[j][i] = compatible(all[i], all[j], tree_vertex);

        vector<std::size_t> picked;
        if (extend(all, ok, 0, n, picked)) {
            result.diverse = true;
            for (auto p : picked)
                result.witnesses.push_back(all[p]);
        }
        return result;
    }
}

#ifndef GRIDRAM_EMBED_HH
#define GRIDRAM_EMBED_HH

#include <gridram/grid.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace gridram
{
    /// column_map[a - 1] is the host column of pattern column a; likewise rows.
    struct Embedding
    {
        std::vector<int> column_map;
        std::vector<int> row_map;

        auto operator<=>(const Embedding &) const = default;
    };

    /// Optional per-line restrictions on where pattern lines may go. Bit
    /// (X - 1) of column_masks[a - 1] allows host column X. Empty vectors
    /// mean "no restriction".
    struct EmbedConstraints
    {
        std::vector<std::uint64_t> column_masks;
        std::vector<std::uint64_t> row_masks;
    };

    /// True iff the maps are injective, in range, and carry every pattern
    /// vertex and edge onto a host vertex or edge of the same orientation.
    auto is_embedding(const GridSubgraph & pattern, const GridSubgraph & host, const Embedding &) -> bool;

    /// Host edges covered by an embedding.
    struct EmbeddingImage
    {
        std::vector<HEdge> h_edges;
        std::vector<VEdge> v_edges;
    };

    auto image(const GridSubgraph & pattern, const Embedding &) -> EmbeddingImage;

    /// Visits embeddings in lexicographic order (column_map, then row_map)
    /// until the visitor returns false. Returns false iff stopped early.
    auto for_each_embedding(const GridSubgraph & pattern, const GridSubgraph & host,
        const std::function<auto(const Embedding &)->bool> & visit, const EmbedConstraints & = {}) -> bool;

    /// Exact labelled count t_g(pattern, host). With workers > 1 the first
    /// level of the search is split across threads; the count is the same.
    auto count_embeddings(const GridSubgraph & pattern, const GridSubgraph & host, int workers = 1,
        const EmbedConstraints & = {}) -> std::uint64_t;

    /// The lexicographically first embedding, if any.
    auto contains(const GridSubgraph & pattern, const GridSubgraph & host, const EmbedConstraints & = {})
        -> std::optional<Embedding>;

    auto contains(const GridSubgraph & pattern, const DenseGrid & host, const EmbedConstraints & = {})
        -> std::optional<Embedding>;

    auto count_embeddings(const GridSubgraph & pattern, const DenseGrid & host, int workers = 1,
        const EmbedConstraints & = {}) -> std::uint64_t;

    auto for_each_embedding(const GridSubgraph & pattern, const DenseGrid & host,
        const std::function<auto(const Embedding &)->bool> & visit, const EmbedConstraints & = {}) -> bool;

    /// An independent set of the host lying inside one row or column.
    struct Coclique
    {
        LineKind kind = LineKind::row;
        int index = 1;
        std::vector<Point> positions;
    };

    auto is_coclique(const GridSubgraph & host, const Coclique &) -> bool;

    /// Maximum independent set of a line graph by branch and bound. Throws
    /// CapExceeded beyond caps.coclique_line positions. Result is sorted.
    auto max_independent_set(const LineGraph &, const Caps & = default_caps()) -> std::vector<int>;

    /// Some independent set of the given size, if one exists (exact search).
    auto independent_set_of_size(const LineGraph &, int k, const Caps & = default_caps())
        -> std::optional<std::vector<int>>;

    /// Repeatedly takes a minimum-degree vertex of what remains (ties to the
    /// lowest position) and discards its neighbours. Stops once target
    /// vertices are chosen (target <= 0 means no limit). Only the listed
    /// candidates are considered when candidates is nonempty.
    auto greedy_independent_set(const LineGraph &, int target = 0, const std::vector<int> & candidates = {})
        -> std::vector<int>;

    struct MaxCoclique
    {
        int size = 0;
        Coclique witness;
    };

    /// Largest coclique over all rows and columns of a spanning host.
    auto max_coclique(const GridSubgraph & host, const Caps & = default_caps()) -> MaxCoclique;

    /// A coclique of size k, searching rows first, then columns.
    auto find_coclique(const GridSubgraph & host, int k, const Caps & = default_caps()) -> std::optional<Coclique>;

    struct DiverseResult
    {
        bool diverse = false;
        std::vector<Embedding> witnesses;
    };

    /// Whether host_vertex is n-diverse for tree_vertex in the simple tree:
    /// n embeddings, each sending tree_vertex to host_vertex, that pairwise
    /// share no host column other than host_vertex's (reached only from
    /// tree_vertex's column) and likewise for rows.
    auto is_n_diverse(const GridSubgraph & host, Point host_vertex, const GridSubgraph & tree, Point tree_vertex, int n,
        const Caps & = default_caps()) -> DiverseResult;

    /// Checks the three conditions directly on a proposed witness family.
    auto verify_n_diverse(const GridSubgraph & host, Point host_vertex, const GridSubgraph & tree, Point tree_vertex,
        const std::vector<Embedding> & witnesses) -> bool;
}

#endif

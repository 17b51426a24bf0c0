#ifndef GRIDRAM_HYPER_HH
#define GRIDRAM_HYPER_HH

#include <gridram/caps.hh>
#include <gridram/exact.hh>
#include <gridram/grid.hh>
#include <gridram/ramsey.hh>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gridram
{
    using Triple = std::array<int, 3>;

    /// X becomes the columns of f_g, Y the rows. Both kept sorted.
    struct Bipartition
    {
        std::vector<int> x;
        std::vector<int> y;

        auto operator==(const Bipartition &) const -> bool = default;
    };

    /// A 3-uniform hypergraph on integer labels. vertices and edges are
    /// sorted; each edge is a sorted triple of distinct vertices.
    struct ThreeGraph
    {
        std::vector<int> vertices;
        std::vector<Triple> edges;
        std::optional<Bipartition> bipartition;

        auto operator==(const ThreeGraph &) const -> bool = default;
    };

    /// Normalises and validates. A bipartition must partition the vertices
    /// and every edge must meet both sides. Throws InvalidArgument.
    auto make_three_graph(std::vector<int> vertices, std::vector<Triple> edges,
        std::optional<Bipartition> = std::nullopt) -> ThreeGraph;

    /// Every edge has two vertices on one side and one on the other.
    auto has_two_one_split(const ThreeGraph &) -> bool;

    /// Vertices 1..t in cyclic order, edges {i, i+1, i+2} mod t. The
    /// bipartition puts odd labels in X and even labels in Y; for odd t
    /// this is the x_1..x_{d+1}, y_1..y_d split with t = 2d + 1.
    auto tight_cycle(int t) -> ThreeGraph;

    /// Centre 0, leaves 1..k, every triple through the centre. Centre in Y.
    auto star(int k) -> ThreeGraph;

    auto complete_three_graph(int n) -> ThreeGraph;

    struct FgGrid
    {
        GridSubgraph grid;
        std::vector<int> column_labels;    // X, sorted
        std::vector<int> row_labels;       // Y, sorted
    };

    /// {x1, x2, y} goes to the horizontal edge {(x1, y), (x2, y)} and
    /// {x, y1, y2} to the vertical edge {(x, y1), (x, y2)}. The grid's
    /// vertices are the edge endpoints. Throws InvalidArgument without a
    /// bipartition or for an edge with all three vertices on one side.
    auto fg_to_grid(const ThreeGraph &) -> FgGrid;

    /// Inverse of fg_to_grid. Columns get labels 1..c and rows c+1..c+r
    /// unless labels are given. Grid vertices are not represented.
    auto fg_from_grid(const GridSubgraph &, const std::vector<int> & column_labels = {},
        const std::vector<int> & row_labels = {}) -> ThreeGraph;

    /// Injective maps V(H) -> V(G) sending edges to edges. With
    /// respect_bipartition, X goes into X and Y into Y (both graphs need a
    /// bipartition); this is the count that matches t_g under f_g. Throws
    /// CapExceeded above caps.hyper_pattern_vertices pattern vertices.
    auto count_embeddings_3(const ThreeGraph & pattern, const ThreeGraph & host, bool respect_bipartition = false,
        const Caps & = default_caps()) -> std::uint64_t;

    /// Blows v up into v and a new vertex v' = max label + 1: every edge
    /// through v is copied with v' in place of v, and {v, v', w} is added.
    /// v' joins v's side; the bipartition is dropped if w is on that side
    /// too, since {v, v', w} would then miss the other side.
    auto vertex_bridge(const ThreeGraph &, int v, int w) -> ThreeGraph;

    /// Finds a bipartition with a 2-1 split on every edge, first in a fixed
    /// enumeration order (smallest vertex in X). Throws CapExceeded above
    /// caps.bipartition_search vertices.
    auto find_presentation(const ThreeGraph &, const Caps & = default_caps()) -> std::optional<Bipartition>;

    struct StarRamseyReport
    {
        ThreeGraph presentation;
        GridSubgraph grid;
        int k = 0;
        bool degenerate = false;                 // f_g(H) is itself a line clique
        bool alternating_six = false;            // f_g(H) is AC_6 up to transposition
        std::optional<GrResult> gr;
        std::optional<BigInt> ramsey_upper;      // 2 * gr when decided
        std::vector<std::string> notes;
    };

    /// Bookkeeping for R(H, S_k) <= 2 gr(f_g(H), K_k). Uses H's bipartition
    /// if it has one, otherwise searches. gr is computed exactly when
    /// n_max > 0. Throws InvalidArgument without any 2-1 presentation.
    auto star_ramsey_bound(const ThreeGraph &, int k, int n_max = 0, int workers = 1,
        const Caps & = default_caps()) -> StarRamseyReport;
}

#endif

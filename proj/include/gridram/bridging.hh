#ifndef GRIDRAM_BRIDGING_HH
#define GRIDRAM_BRIDGING_HH

#include <gridram/embed.hh>
#include <gridram/grid.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gridram
{
    /// axis = column: duplicate column `source` into a new last column and
    /// join the two copies in row `anchor`. axis = row is the transpose.
    struct BridgeStep
    {
        LineKind axis = LineKind::column;
        int source = 1;
        int anchor = 1;

        auto operator<=>(const BridgeStep &) const = default;
    };

    auto to_string(const BridgeStep &) -> std::string;

    struct ConstructionScript
    {
        std::vector<BridgeStep> steps;
    };

    /// One bridging step. The new line receives a copy of every edge the
    /// source line has to other lines, a copy of the edges inside the source
    /// line, and the bridge edge between source and copy at the anchor.
    /// Vertices of the source line are copied too. Throws InvalidArgument
    /// for out-of-range indices.
    auto bridge(const GridSubgraph &, const BridgeStep &) -> GridSubgraph;

    /// Replays a script from the one-vertex graph; stages[0] is that graph.
    auto replay_stages(const ConstructionScript &) -> std::vector<GridSubgraph>;
    auto replay(const ConstructionScript &) -> GridSubgraph;

    /// Four steps from one vertex whose result contains AC_6 with the
    /// identity labelling, then two steps per further length (t - 2 total).
    auto ac_script(int t) -> ConstructionScript;

    /// The two steps that take (a supergraph of) AC_{2s} on s x s to a graph
    /// containing AC_{2s + 2} with the identity labelling.
    auto ac_extension_steps(int s) -> std::vector<BridgeStep>;

    /// d column bridges building a (d + 1)-clique in row 1, then d - 1 row
    /// bridges; the result contains AS_{d-1} with the identity labelling.
    auto as_script(int d) -> ConstructionScript;

    struct ConstructibilityResult
    {
        ConstructionScript script;
        /// Embedding of the queried graph into replay(script); a bijection
        /// in exact mode.
        Embedding embedding;
    };

    /// Backward search over inverse bridging steps with a memo keyed by
    /// canonical form. In the default containment mode a script is returned
    /// whose replay contains the graph; in exact mode the replay must be
    /// isomorphic to it. Both searches are exhaustive. Throws CapExceeded
    /// when columns + rows exceeds caps.constructible_lines.
    auto is_bridging_constructible(const GridSubgraph &, bool exact = false, const Caps & = default_caps())
        -> std::optional<ConstructibilityResult>;

    /// Rechecks a result: replays its script and verifies the embedding.
    auto verify_constructibility(const GridSubgraph &, const ConstructibilityResult &, bool exact) -> bool;

    /// Generalized subdivision at edge e = {a, b}. The m new vertices are
    /// placed on the line of e in new lines c + 1..c + m (or r + 1..r + m
    /// for a vertical e). inner_edges join points of V* and {a, b} along
    /// that line; the gadget must be connected and may not reach anything
    /// else. With keep_original_edge false the edge e itself is dropped,
    /// which is the classical subdivision rather than the generalized one.
    auto generalized_subdivide(const GridSubgraph & h, std::pair<Point, Point> e, int m,
        const std::vector<std::pair<Point, Point>> & inner_edges, bool keep_original_edge = true) -> GridSubgraph;

    /// The m bridging steps applied to h (not to one vertex) whose result
    /// contains every generalized subdivision of h at e with m new vertices.
    auto subdivision_closure_steps(const GridSubgraph & h, std::pair<Point, Point> e, int m)
        -> std::vector<BridgeStep>;

    /// Per-embedding data for the supersaturation counting step.
    struct ExtensionClass
    {
        Embedding base;                 // embedding of H minus the bridged column
        std::vector<int> extensions;    // P: host columns completing it to H
        std::uint64_t f_edges = 0;      // edges of F among P in the anchor's image row
    };

    struct SupersaturationReport
    {
        GridSubgraph bridged;           // H'
        std::uint64_t t_bridged = 0;    // t_g(H', G), counted directly
        std::uint64_t sum_f_edges = 0;  // sum over classes of |E(F)|
        std::uint64_t ordered_pairs = 0;// sum over classes of ordered adjacent pairs = 2 * sum_f_edges
        bool equal = false;             // t_bridged == ordered_pairs
        std::vector<ExtensionClass> classes;
    };

    /// Compares t_g(H', G) for H' = bridge(H, column `column` at `anchor`)
    /// with the count assembled from extension classes of H minus that
    /// column. Only classes with a nonempty P are listed.
    auto supersaturation_identity_check(const GridSubgraph & h, int column, int anchor, const GridSubgraph & g,
        int workers = 1) -> SupersaturationReport;
}

#endif

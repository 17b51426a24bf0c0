#ifndef GRIDRAM_RAMSEY_HH
#define GRIDRAM_RAMSEY_HH

#include <gridram/embed.hh>
#include <gridram/exact.hh>
#include <gridram/grid.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gridram
{
    enum class CertificateKind
    {
        embedding,
        coclique,
        witness_grid,
        inconclusive
    };

    auto to_string(CertificateKind) -> std::string;

    /// A search outcome that can be rechecked on its own.
    struct Certificate
    {
        CertificateKind kind = CertificateKind::inconclusive;
        std::optional<Embedding> embedding;
        std::optional<Coclique> coclique;
        std::optional<GridSubgraph> witness;
        std::string note;
    };

    /// embedding: an embedding of pattern into host. coclique: k positions,
    /// independent, on one line of host. witness_grid: a spanning grid with
    /// neither a copy of pattern nor a k-coclique. inconclusive: true.
    auto verify_certificate(const Certificate &, const GridSubgraph & pattern, const GridSubgraph & host, int k,
        const Caps & = default_caps()) -> bool;

    /// An edge slot of G_{N x N}: h (x1 < x2, row y) or v (column x, y1 < y2).
    struct Slot
    {
        LineKind kind = LineKind::row;    // row: horizontal slot in row `line`
        int line = 1;
        int a = 1, b = 2;                 // positions along the line, a < b

        auto operator<=>(const Slot &) const = default;
    };

    /// Line-major interleaved order: row 1, column 1, row 2, column 2, ...;
    /// pairs within a line in lexicographic order.
    auto slot_order(int n) -> std::vector<Slot>;

    /// Spanning N x N grid with exactly the slots whose bit is set.
    auto grid_from_slots(int n, const std::vector<Slot> & slots, const std::vector<bool> & present) -> GridSubgraph;

    /// True iff host is spanning, has no k-coclique and does not contain pattern.
    auto is_avoider(const GridSubgraph & pattern, const GridSubgraph & host, int k, const Caps & = default_caps())
        -> bool;

    enum class AvoiderStatus
    {
        found,
        none,
        undecided
    };

    auto to_string(AvoiderStatus) -> std::string;

    struct AvoiderResult
    {
        AvoiderStatus status = AvoiderStatus::undecided;
        std::optional<GridSubgraph> witness;    // lexicographically least in slot order
        std::string method;
        std::uint64_t nodes = 0;
    };

    enum class AvoiderMethod
    {
        automatic,
        brute_force,
        backtracking
    };

    /// Decides whether some spanning subgraph of G_{N x N} avoids both the
    /// pattern and every k-coclique. automatic: brute force up to
    /// caps.brute_force_n, backtracking up to caps.backtrack_n, otherwise
    /// undecided. Backtracking gives up (undecided) after
    /// caps.backtrack_nodes nodes.
    auto find_avoider(const GridSubgraph & pattern, int k, int n, AvoiderMethod = AvoiderMethod::automatic,
        int workers = 1, const Caps & = default_caps()) -> AvoiderResult;

    struct GrLevel
    {
        int n = 0;
        AvoiderResult result;
    };

    struct GrResult
    {
        /// gr(pattern, K_k) when decided within n_max.
        std::optional<int> value;
        /// gr >= lower_bound in every case.
        int lower_bound = 1;
        std::vector<GrLevel> levels;
        std::string status;
    };

    auto gr_exact(const GridSubgraph & pattern, int k, int n_max, AvoiderMethod = AvoiderMethod::automatic,
        int workers = 1, const Caps & = default_caps()) -> GrResult;

    /// A simple graph on vertices 1..n.
    struct SimpleGraph
    {
        int n = 0;
        std::vector<std::pair<int, int>> edges;    // u < v, sorted, unique
    };

    /// Normalises and validates (no loops, endpoints in range); duplicates merge.
    auto make_simple_graph(int n, std::vector<std::pair<int, int>> edges) -> SimpleGraph;
    auto cycle_graph(int n) -> SimpleGraph;
    auto complete_graph(int n) -> SimpleGraph;
    auto is_triangle_free(const SimpleGraph &) -> bool;
    auto independence_number(const SimpleGraph &) -> int;

    /// Edge-list text: first non-comment line holds n, then one "u v" per
    /// line; '#' starts a comment.
    auto parse_edge_list(const std::string & text) -> SimpleGraph;
    auto format_edge_list(const SimpleGraph &) -> std::string;

    struct LowerBoundReport
    {
        GridSubgraph grid;
        int k = 0;
        bool triangle_free = false;
        int independence = 0;
        bool ac6_free = false;              // by exhaustive embedding search
        std::optional<Coclique> coclique;   // a k-coclique, if one exists
        /// The grid avoids AC_6 and k-cocliques, so gr(AC_6, K_k) > n.
        bool certifies = false;
        std::optional<Embedding> ac6_copy;
    };

    /// The product col_graph x K_N: copies of col_graph in every row and all
    /// vertical edges.
    auto product_grid(const SimpleGraph & col_graph) -> GridSubgraph;
    auto product_lower_bound(const SimpleGraph & col_graph, int k, const Caps & = default_caps()) -> LowerBoundReport;

    struct Ac6Search
    {
        Certificate certificate;
        /// Corner threshold from the implementation, 55 k^3; at or above it
        /// the pipeline never reports inconclusive on coclique-free input.
        BigInt completeness_threshold;
        std::vector<std::string> trace;
    };

    /// Corner/auxiliary-edge procedure: returns an AC_6 embedding, a
    /// k-coclique, or inconclusive. Certificates are rechecked before return.
    auto find_ac6_or_coclique(const GridSubgraph & host, int k, const Caps & = default_caps()) -> Ac6Search;

    /// Colour 1 = edge present, colour 2 = edge absent, on a spanning grid.
    struct UniformSubgrid
    {
        std::vector<int> columns;
        std::vector<int> rows;
        int horizontal_colour = 1;
        int vertical_colour = 1;
    };

    /// First M x M subgrid (colour pairs in order (1,1), (1,2), (2,1), (2,2),
    /// column sets lexicographically, then row sets) whose horizontal edges
    /// all share one colour and whose vertical edges all share one colour.
    auto uniform_subgrid(const GridSubgraph & colouring, int m) -> std::optional<UniformSubgrid>;
    auto verify_uniform_subgrid(const GridSubgraph & colouring, int m, const UniformSubgrid &) -> bool;

    /// Closed interval for a diagonal Ramsey number R(n, n).
    using RamseyTable = std::map<int, std::pair<BigInt, BigInt>>;

    /// R(1,1) = 1, R(2,2) = 2, R(3,3) = 6, R(4,4) = 18.
    auto known_diagonal_ramsey() -> RamseyTable;

    struct UniformSubgridThreshold
    {
        int m = 0;
        BigInt l = 0;                 // L = 2M * C(R(M,M), M) + 1
        BigInt lower = 0, upper = 0;  // 2 R(M,M) * C(R(L,L), L) over the table's interval for R(L,L)
        [[nodiscard]] auto exact() const -> bool { return lower == upper; }
    };

    /// Throws InvalidArgument naming the missing entries when the table
    /// lacks R(M,M) exactly or any bound for R(L,L).
    auto uniform_subgrid_threshold(int m, const RamseyTable & = known_diagonal_ramsey()) -> UniformSubgridThreshold;
}

#endif

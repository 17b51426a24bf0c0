#ifndef GRIDRAM_GRID_HH
#define GRIDRAM_GRID_HH

#include <gridram/caps.hh>
#include <gridram/error.hh>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gridram
{
    /// Lattice point (x, y): x is the column, y the row, both 1-based.
    struct Point
    {
        int x = 1;
        int y = 1;

        auto operator<=>(const Point &) const = default;
    };

    /// Horizontal edge {(x1, y), (x2, y)} with x1 < x2.
    struct HEdge
    {
        int x1 = 1;
        int x2 = 2;
        int y = 1;

        auto operator<=>(const HEdge &) const = default;
    };

    /// Vertical edge {(x, y1), (x, y2)} with y1 < y2.
    struct VEdge
    {
        int x = 1;
        int y1 = 1;
        int y2 = 2;

        auto operator<=>(const VEdge &) const = default;
    };

    enum class LineKind
    {
        row,
        column
    };

    auto to_string(LineKind) -> std::string;

    /// Unvalidated grid data, as read from a file or assembled by hand.
    /// Edges are arbitrary point pairs so that malformed input can be
    /// reported rather than silently dropped.
    struct GridDraft
    {
        int columns = 0;
        int rows = 0;
        bool spanning = false;
        /// When absent: the full lattice if spanning, otherwise the edge endpoints.
        std::optional<std::vector<Point>> vertices;
        std::vector<std::pair<Point, Point>> edges;
    };

    struct Violation
    {
        std::string kind;
        std::string detail;
    };

    struct ValidationReport
    {
        std::vector<Violation> violations;

        [[nodiscard]] auto ok() const -> bool { return violations.empty(); }
        [[nodiscard]] auto has(const std::string & kind) const -> bool;
        [[nodiscard]] auto to_string() const -> std::string;
    };

    class InvalidGrid : public InvalidArgument
    {
    public:
        explicit InvalidGrid(ValidationReport report);

        [[nodiscard]] auto report() const -> const ValidationReport & { return _report; }

    private:
        ValidationReport _report;
    };

    /// A (not necessarily spanning) subgraph of the grid graph G_{c x r}:
    /// a vertex set of lattice points plus orientation-tagged edges that
    /// stay within one row or one column. Immutable once built; all
    /// containers are kept sorted so equality is structural.
    class GridSubgraph
    {
    public:
        /// The 1 x 1 lattice with no vertices.
        GridSubgraph() = default;

        /// Throws InvalidGrid if the draft violates any invariant.
        static auto from_draft(const GridDraft &) -> GridSubgraph;

        /// Builds from oriented edges. Edge endpoints are normalised
        /// (x1 < x2, y1 < y2). Vertices default as in GridDraft.
        static auto from_edges(int columns, int rows, std::vector<HEdge> h_edges, std::vector<VEdge> v_edges,
            std::optional<std::vector<Point>> vertices = std::nullopt, bool spanning = false) -> GridSubgraph;

        static auto empty_spanning(int columns, int rows) -> GridSubgraph;
        static auto complete(int columns, int rows) -> GridSubgraph;
        static auto single_vertex() -> GridSubgraph;

        [[nodiscard]] auto columns() const -> int { return _columns; }
        [[nodiscard]] auto rows() const -> int { return _rows; }
        [[nodiscard]] auto spanning() const -> bool { return _spanning; }
        [[nodiscard]] auto vertices() const -> const std::vector<Point> & { return _vertices; }
        [[nodiscard]] auto h_edges() const -> const std::vector<HEdge> & { return _h_edges; }
        [[nodiscard]] auto v_edges() const -> const std::vector<VEdge> & { return _v_edges; }
        [[nodiscard]] auto edge_count() const -> std::size_t { return _h_edges.size() + _v_edges.size(); }

        [[nodiscard]] auto has_vertex(Point) const -> bool;
        [[nodiscard]] auto has_h_edge(int x1, int x2, int y) const -> bool;
        [[nodiscard]] auto has_v_edge(int x, int y1, int y2) const -> bool;

        /// Converts back to the raw form (used by validate and by editing code).
        [[nodiscard]] auto to_draft() const -> GridDraft;

        auto operator==(const GridSubgraph &) const -> bool = default;

    private:
        int _columns = 1;
        int _rows = 1;
        bool _spanning = false;
        std::vector<Point> _vertices;
        std::vector<HEdge> _h_edges;
        std::vector<VEdge> _v_edges;
    };

    auto validate(const GridDraft &) -> ValidationReport;
    auto validate(const GridSubgraph &) -> ValidationReport;

    /// Complement relative to E*; only defined for spanning graphs.
    auto complement(const GridSubgraph &) -> GridSubgraph;

    struct Degree
    {
        int horizontal = 0;
        int vertical = 0;

        auto operator<=>(const Degree &) const = default;
    };

    /// (d_h, d_v) of a vertex; throws InvalidArgument if v is not a vertex.
    auto degree(const GridSubgraph &, Point v) -> Degree;

    /// Swaps the roles of columns and rows: (x, y) -> (y, x).
    auto transpose(const GridSubgraph &) -> GridSubgraph;

    /// Relabels lines; column_perm[x - 1] is the new index of column x.
    /// Throws InvalidArgument unless both are bijections.
    auto permute(const GridSubgraph &, const std::vector<int> & column_perm, const std::vector<int> & row_perm)
        -> GridSubgraph;

    /// Subgraph induced on one row or column, positions 1..n along the line.
    struct LineGraph
    {
        LineKind kind = LineKind::row;
        int index = 1;
        int n = 0;
        std::vector<std::pair<int, int>> adjacency; // a < b, sorted

        [[nodiscard]] auto adjacent(int a, int b) const -> bool;
        [[nodiscard]] auto degree(int a) const -> int;
    };

    auto line_graph(const GridSubgraph &, LineKind, int index) -> LineGraph;

    /// Maps a source graph onto a target: transpose first (if set), then
    /// column_perm / row_perm as in permute().
    struct GridIsoWitness
    {
        std::vector<int> column_perm;
        std::vector<int> row_perm;
        bool transposed = false;
    };

    auto apply(const GridSubgraph &, const GridIsoWitness &) -> GridSubgraph;

    /// Isomorphism-class code under line relabelings (and transposition
    /// when requested). Equal codes <=> isomorphic graphs.
    struct CanonicalForm
    {
        std::vector<std::uint8_t> code;

        auto operator<=>(const CanonicalForm &) const = default;
    };

    struct CanonicalLabeling
    {
        CanonicalForm form;
        /// apply(g, witness) is the canonical representative of g.
        GridIsoWitness witness;
    };

    auto canonical_labeling(const GridSubgraph &, bool allow_transpose, const Caps & = default_caps())
        -> CanonicalLabeling;
    auto canonical_form(const GridSubgraph &, bool allow_transpose, const Caps & = default_caps()) -> CanonicalForm;
    auto isomorphic(const GridSubgraph &, const GridSubgraph &, bool allow_transpose, const Caps & = default_caps())
        -> bool;

    /// Dense adjacency for host graphs; all lookups are O(1) and 1-based.
    /// Mutable so that search code can grow a host edge by edge.
    class DenseGrid
    {
    public:
        DenseGrid(int columns, int rows, bool all_vertices = true);
        explicit DenseGrid(const GridSubgraph &);

        [[nodiscard]] auto columns() const -> int { return _columns; }
        [[nodiscard]] auto rows() const -> int { return _rows; }

        [[nodiscard]] auto has_vertex(int x, int y) const -> bool
        {
            return _vertex[(y - 1) * _columns + (x - 1)];
        }
        [[nodiscard]] auto has_h(int x1, int x2, int y) const -> bool
        {
            return _h[((y - 1) * _columns + (x1 - 1)) * _columns + (x2 - 1)];
        }
        [[nodiscard]] auto has_v(int x, int y1, int y2) const -> bool
        {
            return _v[((x - 1) * _rows + (y1 - 1)) * _rows + (y2 - 1)];
        }

        void set_vertex(int x, int y, bool present);
        void set_h(int x1, int x2, int y, bool present);
        void set_v(int x, int y1, int y2, bool present);

        [[nodiscard]] auto to_grid() const -> GridSubgraph;

    private:
        int _columns;
        int _rows;
        std::vector<std::uint8_t> _vertex;
        std::vector<std::uint8_t> _h;
        std::vector<std::uint8_t> _v;
    };
}

#endif

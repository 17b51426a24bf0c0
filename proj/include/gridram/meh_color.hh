#ifndef GRIDRAM_MEH_COLOR_HH
#define GRIDRAM_MEH_COLOR_HH

#include <gridram/caps.hh>
#include <gridram/grid.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gridram
{
    /// Colours of column pairs by subsets of [r]; bit (y - 1) stands for row y.
    class ColumnColoring
    {
    public:
        ColumnColoring(int columns, int rows);

        [[nodiscard]] auto columns() const -> int { return _columns; }
        [[nodiscard]] auto rows() const -> int { return _rows; }
        [[nodiscard]] auto colour(int x1, int x2) const -> std::uint32_t;
        void set_colour(int x1, int x2, std::uint32_t rows);

        auto operator==(const ColumnColoring &) const -> bool = default;

    private:
        int _columns, _rows;
        std::vector<std::uint32_t> _colour;
    };

    /// "{1,3}" style set notation for a colour.
    auto colour_string(std::uint32_t colour) -> std::string;

    /// Parses "1,3" (braces and spaces optional; empty for the empty set).
    auto parse_colour(const std::string & text, int rows) -> std::uint32_t;

    /// chi(x1, x2) = rows y with the horizontal edge {(x1, y), (x2, y)}.
    /// Throws CapExceeded above caps.coloring_rows rows.
    auto column_coloring(const GridSubgraph &, const Caps & = default_caps()) -> ColumnColoring;

    /// Lexicographically first injection phi of pattern columns with
    /// chi_H(a, b) a subset of chi_G(phi(a), phi(b)) for every column pair;
    /// together with the identity on rows this is an embedding into any
    /// spanning host with colouring chi_G. Throws InvalidArgument for
    /// vertical edges, more pattern rows than colouring rows, or (with
    /// require_no_aligned) two horizontal edges between the same columns.
    auto find_colored_pattern(const ColumnColoring & chi, const GridSubgraph & pattern, bool require_no_aligned = false)
        -> std::optional<std::vector<int>>;

    struct ColourSubset
    {
        std::vector<int> columns;
        bool exact = true;
    };

    /// Largest column set with no pair coloured exactly T: exact up to
    /// caps.color_subset_exact columns, greedy above.
    auto color_restricted_subset(const ColumnColoring &, std::uint32_t forbidden, const Caps & = default_caps())
        -> ColourSubset;
}

#endif

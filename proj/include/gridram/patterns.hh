#ifndef GRIDRAM_PATTERNS_HH
#define GRIDRAM_PATTERNS_HH

#include <gridram/grid.hh>

#include <string>
#include <string_view>
#include <vector>

namespace gridram
{
    /// The even cycle (1,1),(2,1),(2,2),(3,2),...,(m,m),(1,m) with m = t / 2.
    /// Throws InvalidArgument unless t is even and at least 4.
    auto alternating_cycle(int t) -> GridSubgraph;

    /// Emits AS_{d-1}: columns 1..d+1, rows 1..d, the staircase
    /// (i,i)-(i+1,i)-(i+1,i+1) plus the two long edges in rows 1 and d.
    /// Note the index shift, which mirrors the odd tight cycle C_{2d+1}.
    auto aligned_staircase(int d) -> GridSubgraph;

    /// A closed lattice walk; consecutive points (cyclically) share exactly
    /// one coordinate.
    struct WaypointCycle
    {
        std::vector<Point> waypoints;
    };

    /// Builds the cycle through the waypoints on the smallest lattice that
    /// holds it. Throws InvalidArgument for a malformed walk, or one whose
    /// cycle meets some row or column in a disconnected set (the message
    /// names that line).
    auto simple_cycle_from_waypoints(const WaypointCycle &) -> GridSubgraph;

    /// Every nonempty intersection with a row or column is connected.
    auto is_simple(const GridSubgraph &) -> bool;

    /// First row or column whose intersection is disconnected, if any.
    auto first_disconnected_line(const GridSubgraph &) -> std::optional<std::pair<LineKind, int>>;

    /// Connected, acyclic and simple.
    auto is_simple_tree(const GridSubgraph &) -> bool;

    auto is_connected(const GridSubgraph &) -> bool;

    auto row_clique(int m) -> GridSubgraph;
    auto column_clique(int m) -> GridSubgraph;
    auto nz_stool() -> GridSubgraph;

    /// Looks up a pattern by name. Accepted forms: square, nz_stool, vertex,
    /// hedge, vedge, staircase_path, hpath:n, vpath:n, row_clique:m,
    /// column_clique:m, ac:t, as:d. Throws InvalidArgument otherwise.
    auto named(std::string_view name) -> GridSubgraph;

    /// Names understood by named(), for usage text.
    auto pattern_names() -> std::vector<std::string>;
}

#endif

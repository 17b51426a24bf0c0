#include <gridram/embed.hh>
#include <gridram/meh_color.hh>
#include <gridram/patterns.hh>

#include "oracles.hh"

#include <gtest/gtest.h>

#include <random>

using namespace gridram;

TEST(Coloring, Examples)
{
    auto full = column_coloring(GridSubgraph::complete(4, 2));
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b)
            EXPECT_EQ(full.colour(a, b), 0b11u);
    EXPECT_EQ(colour_string(full.colour(1, 2)), "{1,2}");

    auto one = column_coloring(GridSubgraph::from_edges(3, 2, {{1, 2, 1}}, {}, std::nullopt, true));
    EXPECT_EQ(one.colour(1, 2), 0b01u);
    EXPECT_EQ(one.colour(2, 1), 0b01u);
    EXPECT_EQ(one.colour(1, 3), 0u);

    auto empty = column_coloring(GridSubgraph::empty_spanning(3, 3));
    EXPECT_EQ(empty.colour(2, 3), 0u);
    EXPECT_EQ(colour_string(0), "{}");

    Caps small;
    small.coloring_rows = 2;
    EXPECT_THROW(column_coloring(GridSubgraph::complete(2, 3), small), CapExceeded);
}

TEST(Coloring, ParseColour)
{
    EXPECT_EQ(parse_colour("1,3", 3), 0b101u);
    EXPECT_EQ(parse_colour("{1, 3}", 3), 0b101u);
    EXPECT_EQ(parse_colour("", 3), 0u);
    EXPECT_THROW(parse_colour("4", 3), InvalidArgument);
}

TEST(ColoredPattern, Examples)
{
    auto chi = column_coloring(GridSubgraph::complete(3, 2));
    EXPECT_TRUE(find_colored_pattern(chi, named("hedge")));

    auto row_two = GridSubgraph::from_edges(2, 2, {{1, 2, 2}}, {});
    auto only_row_one = column_coloring(
        GridSubgraph::from_edges(3, 2, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}}, {}, std::nullopt, true));
    EXPECT_FALSE(find_colored_pattern(only_row_one, row_two));
    EXPECT_THROW(find_colored_pattern(chi, named("vedge")), InvalidArgument);

    auto aligned = GridSubgraph::from_edges(2, 2, {{1, 2, 1}, {1, 2, 2}}, {});
    EXPECT_THROW(find_colored_pattern(chi, aligned, true), InvalidArgument);
    EXPECT_TRUE(find_colored_pattern(chi, aligned, false));
}

TEST(ColoredPattern, AgreesWithRowFixedEmbedding)
{
    // two rows, no two edges between the same pair of columns
    auto h = GridSubgraph::from_edges(3, 2, {{1, 2, 1}, {2, 3, 2}}, {});
    std::mt19937_64 rng(29);
    for (int i = 0; i < 40; ++i) {
        auto g = oracle::random_grid(rng, 8, 2, 40);
        auto r = find_colored_pattern(column_coloring(g), h, true);
        EmbedConstraints fixed_rows;
        fixed_rows.row_masks = {0b01, 0b10};
        auto e = contains(h, g, fixed_rows);
        EXPECT_EQ(r.has_value(), e.has_value());
        if (r) {
            EXPECT_EQ(*r, e->column_map);
            EXPECT_TRUE(is_embedding(h, g, {*r, {1, 2}}));
        }
    }
}

TEST(ColourSubset, Examples)
{
    auto all = column_coloring(GridSubgraph::complete(5, 2));
    EXPECT_EQ(color_restricted_subset(all, 0b11).columns.size(), 1u);
    EXPECT_EQ(color_restricted_subset(all, 0b01).columns.size(), 5u);

    auto c5 = GridSubgraph::from_edges(5, 1, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {1, 5, 1}}, {}, std::nullopt,
        true);
    auto r = color_restricted_subset(column_coloring(c5), 0b1);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(static_cast<int>(r.columns.size()),
        oracle::independence_number(5, [&](int a, int b) { return c5.has_h_edge(a, b, 1); }));
}

TEST(ColourSubset, AgreesWithOracle)
{
    std::mt19937_64 rng(37);
    for (int i = 0; i < 30; ++i) {
        auto g = oracle::random_grid(rng, 7, 3, 50);
        auto chi = column_coloring(g);
        std::uint32_t t = oracle::uniform(rng, 0, 7);
        auto r = color_restricted_subset(chi, t);
        int expected = oracle::independence_number(7, [&](int a, int b) { return chi.colour(a, b) == t; });
        EXPECT_EQ(static_cast<int>(r.columns.size()), expected);
        for (std::size_t a = 0; a < r.columns.size(); ++a)
            for (std::size_t b = a + 1; b < r.columns.size(); ++b)
                EXPECT_NE(chi.colour(r.columns[a], r.columns[b]), t);
    }
}

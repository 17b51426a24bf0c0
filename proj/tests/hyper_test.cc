#include <gridram/bridging.hh>
#include <gridram/hyper.hh>
#include <gridram/patterns.hh>

#include "oracles.hh"

#include <gtest/gtest.h>

#include <random>

using namespace gridram;

TEST(ThreeGraph, Families)
{
    auto c8 = tight_cycle(8);
    EXPECT_EQ(c8.vertices.size(), 8u);
    EXPECT_EQ(c8.edges.size(), 8u);
    EXPECT_TRUE(has_two_one_split(c8));
    for (int k = 2; k <= 6; ++k) {
        auto s = star(k);
        EXPECT_EQ(s.vertices.size(), static_cast<std::size_t>(k + 1));
        EXPECT_EQ(s.edges.size(), static_cast<std::size_t>(k * (k - 1) / 2));
    }
    EXPECT_EQ(tight_cycle(4).edges, complete_three_graph(4).edges);
    EXPECT_THROW(tight_cycle(3), InvalidArgument);
}

TEST(ThreeGraph, Validation)
{
    EXPECT_THROW(make_three_graph({1, 2, 3}, {{1, 2, 4}}), InvalidArgument);
    EXPECT_THROW(make_three_graph({1, 2, 3}, {{1, 1, 2}}), InvalidArgument);
    EXPECT_THROW(make_three_graph({1, 2, 3}, {{1, 2, 3}}, Bipartition{{1, 2, 3}, {}}), InvalidArgument);
    auto g = make_three_graph({3, 1, 2}, {{3, 2, 1}}, Bipartition{{2, 1}, {3}});
    EXPECT_EQ(g.vertices, (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(g.edges, (std::vector<Triple>{{1, 2, 3}}));
    EXPECT_EQ(g.bipartition->x, (std::vector<int>{1, 2}));
}

TEST(Fg, TightCyclesAndStars)
{
    for (int t = 3; t <= 5; ++t)
        EXPECT_TRUE(isomorphic(fg_to_grid(tight_cycle(2 * t)).grid, alternating_cycle(2 * t), true)) << t;
    EXPECT_TRUE(isomorphic(fg_to_grid(tight_cycle(9)).grid, aligned_staircase(4), true));
    for (int k = 2; k <= 5; ++k)
        EXPECT_TRUE(isomorphic(fg_to_grid(star(k)).grid, row_clique(k), false)) << k;
}

TEST(Fg, Errors)
{
    auto no_sides = make_three_graph({1, 2, 3}, {{1, 2, 3}});
    EXPECT_THROW(fg_to_grid(no_sides), InvalidArgument);
    EXPECT_THROW(fg_from_grid(alternating_cycle(6), {3, 2, 1}, {4, 5, 6}), InvalidArgument);
}

TEST(Fg, RoundTrips)
{
    std::mt19937_64 rng(8);
    for (int i = 0; i < 50; ++i) {
        auto g = oracle::random_grid(rng, oracle::uniform(rng, 1, 4), oracle::uniform(rng, 1, 4), 40);
        auto h = fg_from_grid(g);
        auto back = fg_to_grid(h);
        EXPECT_EQ(back.grid.h_edges(), g.h_edges());
        EXPECT_EQ(back.grid.v_edges(), g.v_edges());
        EXPECT_EQ(fg_from_grid(back.grid, back.column_labels, back.row_labels).edges, h.edges);
    }
}

TEST(Count3, Examples)
{
    auto edge = make_three_graph({1, 2, 3}, {{1, 2, 3}});
    EXPECT_EQ(count_embeddings_3(edge, complete_three_graph(4)), 24u);
    EXPECT_EQ(count_embeddings_3(tight_cycle(4), complete_three_graph(4)), 24u);
    EXPECT_EQ(oracle::count_embeddings_3(edge, complete_three_graph(4), false), 24u);
}

TEST(Count3, MatchesGridCount)
{
    std::mt19937_64 rng(13);
    for (int i = 0; i < 30; ++i) {
        auto hg = oracle::random_grid(rng, oracle::uniform(rng, 1, 3), oracle::uniform(rng, 1, 3), 60);
        auto gg = oracle::random_grid(rng, oracle::uniform(rng, 2, 4), oracle::uniform(rng, 2, 4), 70);
        // only the edge structure is carried over
        auto strip = [](const GridSubgraph & g) { return fg_to_grid(fg_from_grid(g)).grid; };
        auto h = fg_from_grid(hg), g = fg_from_grid(gg);
        auto h_grid = strip(hg);
        auto expected = oracle::count_embeddings_3(h, g, true);
        EXPECT_EQ(count_embeddings_3(h, g, true), expected);
        if (h_grid.columns() == hg.columns() && h_grid.rows() == hg.rows() && ! h.vertices.empty()) {
            // every label is an edge endpoint: the counts correspond
            auto g_full = GridSubgraph::from_edges(gg.columns(), gg.rows(), gg.h_edges(), gg.v_edges(), std::nullopt,
                true);
            EXPECT_EQ(expected, oracle::count_embeddings(h_grid, g_full));
        }
    }
}

TEST(VertexBridge, Examples)
{
    auto edge = make_three_graph({1, 2, 3}, {{1, 2, 3}});
    auto b = vertex_bridge(edge, 1, 2);
    EXPECT_EQ(b.vertices, (std::vector<int>{1, 2, 3, 4}));
    EXPECT_EQ(b.edges, (std::vector<Triple>{{1, 2, 3}, {1, 2, 4}, {2, 3, 4}}));

    auto lonely = make_three_graph({1, 2, 3, 4}, {{1, 2, 3}});
    auto c = vertex_bridge(lonely, 4, 1);
    EXPECT_EQ(c.edges, (std::vector<Triple>{{1, 2, 3}, {1, 4, 5}}));
    EXPECT_THROW(vertex_bridge(edge, 1, 1), InvalidArgument);
}

TEST(VertexBridge, CommutesWithFg)
{
    // bridging column x at row y on the grid is vertex-bridging label x with w = y
    std::mt19937_64 rng(19);
    for (int i = 0; i < 30; ++i) {
        int c = oracle::uniform(rng, 1, 3), r = oracle::uniform(rng, 1, 3);
        auto g = oracle::random_grid(rng, c, r, 60);
        int x = oracle::uniform(rng, 1, c), y = oracle::uniform(rng, 1, r);
        auto h = fg_from_grid(g);
        auto hb = vertex_bridge(h, x, c + y);
        auto gb = bridge(g, {LineKind::column, x, y});
        // relabel: the new column is label c + r + 1 in hb
        std::vector<int> cols, rows;
        for (int a = 1; a <= c; ++a)
            cols.push_back(a);
        cols.push_back(c + r + 1);
        for (int b = 1; b <= r; ++b)
            rows.push_back(c + b);
        auto expected = fg_from_grid(gb, cols, rows);
        EXPECT_EQ(hb.edges, expected.edges);
    }
}

TEST(Presentation, Search)
{
    auto c6 = tight_cycle(6);
    c6.bipartition.reset();
    auto p = find_presentation(c6);
    ASSERT_TRUE(p);
    // any 2-1 presentation will do; it need not be the alternating one
    auto with = make_three_graph(c6.vertices, c6.edges, p);
    EXPECT_TRUE(has_two_one_split(with));
    EXPECT_EQ(fg_to_grid(with).grid.edge_count(), 6u);
    EXPECT_EQ(p->x.front(), 1);
    EXPECT_FALSE(find_presentation(complete_three_graph(5)));
}

TEST(StarBound, Reports)
{
    auto c6 = star_ramsey_bound(tight_cycle(6), 3);
    EXPECT_TRUE(c6.alternating_six);
    EXPECT_FALSE(c6.degenerate);

    auto edge = make_three_graph({1, 2, 3}, {{1, 2, 3}}, Bipartition{{1, 2}, {3}});
    auto e = star_ramsey_bound(edge, 2, 3);
    ASSERT_TRUE(e.gr);
    EXPECT_EQ(e.gr->value, 2);
    ASSERT_TRUE(e.ramsey_upper);
    EXPECT_EQ(*e.ramsey_upper, 4);

    auto s = star_ramsey_bound(star(3), 3);
    EXPECT_TRUE(s.degenerate);
}

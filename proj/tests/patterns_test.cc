#include <gridram/hyper.hh>
#include <gridram/patterns.hh>

#include <gtest/gtest.h>

using namespace gridram;

TEST(AlternatingCycle, EightVertexSequence)
{
    auto ac8 = alternating_cycle(8);
    std::vector<Point> expected{{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 3}, {4, 4}, {1, 4}};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(ac8.vertices(), expected);
    EXPECT_EQ(ac8.edge_count(), 8u);
    // consecutive points along the cycle are adjacent
    for (std::size_t i = 0; i < 8; ++i) {
        Point p = std::vector<Point>{{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 3}, {4, 4}, {1, 4}}[i];
        Point q = std::vector<Point>{{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 3}, {4, 4}, {1, 4}}[(i + 1) % 8];
        if (p.y == q.y)
            EXPECT_TRUE(ac8.has_h_edge(std::min(p.x, q.x), std::max(p.x, q.x), p.y));
        else
            EXPECT_TRUE(ac8.has_v_edge(p.x, std::min(p.y, q.y), std::max(p.y, q.y)));
    }
}

TEST(AlternatingCycle, FourIsTheSquare)
{
    auto square = alternating_cycle(4), complete = GridSubgraph::complete(2, 2);
    EXPECT_EQ(square.vertices(), complete.vertices());
    EXPECT_EQ(square.h_edges(), complete.h_edges());
    EXPECT_EQ(square.v_edges(), complete.v_edges());
    EXPECT_EQ(named("square"), alternating_cycle(4));
}

TEST(AlternatingCycle, BadLengths)
{
    EXPECT_THROW(alternating_cycle(5), InvalidArgument);
    EXPECT_THROW(alternating_cycle(2), InvalidArgument);
}

TEST(AlignedStaircase, MatchesOddTightCycle)
{
    for (int d = 2; d <= 5; ++d) {
        auto fg = fg_to_grid(tight_cycle(2 * d + 1));
        EXPECT_TRUE(isomorphic(aligned_staircase(d), fg.grid, false)) << "d = " << d;
    }
}

TEST(AlignedStaircase, SizeFormula)
{
    // staircase path of 2(d - 1) edges plus the two long row edges; for d = 2
    // the two row edges of the path coincide with the long ones
    EXPECT_EQ(aligned_staircase(2).edge_count(), 5u);
    EXPECT_EQ(aligned_staircase(5).edge_count(), 11u);
    EXPECT_EQ(aligned_staircase(5).columns(), 6);
    EXPECT_EQ(aligned_staircase(5).rows(), 5);
}

TEST(Waypoints, AlternatingSix)
{
    WaypointCycle w{{{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {1, 3}}};
    EXPECT_EQ(simple_cycle_from_waypoints(w), alternating_cycle(6));
}

TEST(Waypoints, SplitColumnRejected)
{
    // column 1 is visited at rows 1 and 3 with row 2 elsewhere: the cycle's
    // intersection with column 1 is two separated arcs
    WaypointCycle w{{{1, 1}, {2, 1}, {2, 2}, {1, 2}, {1, 3}, {3, 3}, {3, 4}, {1, 4}}};
    EXPECT_THROW(simple_cycle_from_waypoints(w), InvalidArgument);
}

TEST(Waypoints, Malformed)
{
    EXPECT_THROW(simple_cycle_from_waypoints({{{1, 1}, {2, 2}, {1, 2}}}), InvalidArgument);
}

TEST(Simple, Examples)
{
    EXPECT_TRUE(is_simple(alternating_cycle(8)));
    auto split = GridSubgraph::from_edges(4, 1, {{1, 2, 1}, {3, 4, 1}}, {});
    EXPECT_FALSE(is_simple(split));
    ASSERT_TRUE(first_disconnected_line(split));
    EXPECT_EQ(first_disconnected_line(split)->first, LineKind::row);
    EXPECT_TRUE(is_simple_tree(named("hpath:3")));
    EXPECT_FALSE(is_simple_tree(alternating_cycle(6)));
    EXPECT_TRUE(is_connected(alternating_cycle(6)));
    EXPECT_FALSE(is_connected(split));
}

TEST(Named, Examples)
{
    auto stool = nz_stool();
    EXPECT_EQ(stool.vertices().size(), 8u);
    EXPECT_EQ(stool.edge_count(), 10u);
    EXPECT_TRUE(is_connected(stool));

    auto rc = row_clique(3);
    EXPECT_EQ(rc.vertices().size(), 3u);
    EXPECT_EQ(rc.h_edges().size(), 3u);
    EXPECT_EQ(rc.rows(), 1);
    EXPECT_EQ(named("column_clique:4"), transpose(row_clique(4)));
    EXPECT_EQ(named("ac:6"), alternating_cycle(6));
    EXPECT_EQ(named("as:4"), aligned_staircase(4));
    EXPECT_THROW(named("triangle"), InvalidArgument);
    EXPECT_THROW(named("ac:x"), InvalidArgument);
    for (auto & name : pattern_names())
        if (name.find(':') == std::string::npos)
            EXPECT_NO_THROW(named(name)) << name;
}

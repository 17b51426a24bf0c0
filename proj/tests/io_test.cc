#include <gridram/caps.hh>
#include <gridram/hyper.hh>
#include <gridram/json_io.hh>
#include <gridram/patterns.hh>

#include "oracles.hh"

#include <gtest/gtest.h>

#include <random>

using namespace gridram;

TEST(Json, GridFormat)
{
    EXPECT_EQ(grid_to_json(named("hedge")),
        R"({"columns":2,"rows":1,"spanning":false,"vertices":[[1,1],[2,1]],"h_edges":[[1,2,1]],"v_edges":[]})");
    EXPECT_EQ(grid_to_json(GridSubgraph::complete(2, 2)),
        R"({"columns":2,"rows":2,"spanning":true,"h_edges":[[1,2,1],[1,2,2]],"v_edges":[[1,1,2],[2,1,2]]})");
}

TEST(Json, GridRoundTrip)
{
    std::mt19937_64 rng(4);
    for (int i = 0; i < 30; ++i) {
        auto g = oracle::random_grid(rng, oracle::uniform(rng, 1, 5), oracle::uniform(rng, 1, 5), 50);
        EXPECT_EQ(grid_from_json(grid_to_json(g)), g);
    }
    for (auto name : {"ac:8", "nz_stool", "as:4", "vertex"})
        EXPECT_EQ(grid_from_json(grid_to_json(named(name))), named(name));
}

TEST(Json, Errors)
{
    EXPECT_THROW(grid_from_json("{"), ParseError);
    EXPECT_THROW(grid_from_json(R"({"columns":2})"), ParseError);
    EXPECT_THROW(grid_from_json(R"({"columns":2,"rows":1,"h_edges":[[1,2]],"v_edges":[]})"), ParseError);
    EXPECT_THROW(grid_from_json(R"({"columns":2,"rows":1,"h_edges":[[1,3,1]],"v_edges":[]})"), InvalidGrid);
}

TEST(Json, ThreeGraphRoundTrip)
{
    auto c = tight_cycle(6);
    auto text = three_graph_to_json(c);
    EXPECT_EQ(text.rfind(R"({"vertices":[1,2,3,4,5,6],"edges":[)", 0), 0u);
    EXPECT_NE(text.find(R"("bipartition":{"X":[1,3,5],"Y":[2,4,6]})"), std::string::npos);
    EXPECT_EQ(three_graph_from_json(text), c);
    auto plain = make_three_graph({1, 2, 3}, {{1, 2, 3}});
    EXPECT_EQ(three_graph_from_json(three_graph_to_json(plain)), plain);
    EXPECT_THROW(three_graph_from_json(R"({"vertices":"x","edges":[]})"), ParseError);
}

TEST(Caps, Parse)
{
    auto c = parse_caps("backtrack_n=6,coclique=30");
    EXPECT_EQ(c.backtrack_n, 6);
    EXPECT_EQ(c.coclique_line, 30);
    EXPECT_EQ(c.brute_force_n, Caps{}.brute_force_n);
    EXPECT_EQ(parse_caps("").backtrack_n, Caps{}.backtrack_n);
    EXPECT_THROW(parse_caps("nonsense=1"), InvalidArgument);
    EXPECT_THROW(parse_caps("backtrack_n=x"), InvalidArgument);
    EXPECT_THROW(parse_caps("backtrack_n"), InvalidArgument);
}

#include <gridram/grid.hh>
#include <gridram/patterns.hh>

#include "oracles.hh"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace gridram;

namespace
{
    auto draft_2x2_complete() -> GridDraft
    {
        GridDraft d;
        d.columns = 2;
        d.rows = 2;
        d.spanning = true;
        d.edges = {{{1, 1}, {2, 1}}, {{1, 2}, {2, 2}}, {{1, 1}, {1, 2}}, {{2, 1}, {2, 2}}};
        return d;
    }
}

TEST(Validate, CompleteTwoByTwoIsFine)
{
    auto report = validate(draft_2x2_complete());
    EXPECT_TRUE(report.ok()) << report.to_string();
    auto g = GridSubgraph::from_draft(draft_2x2_complete());
    EXPECT_EQ(g.vertices().size(), 4u);
    EXPECT_EQ(g.h_edges().size(), 2u);
    EXPECT_EQ(g.v_edges().size(), 2u);
}

TEST(Validate, DiagonalEdgeRejected)
{
    auto d = draft_2x2_complete();
    d.edges.push_back({{1, 1}, {2, 2}});
    auto report = validate(d);
    EXPECT_TRUE(report.has("edge not within a row or column")) << report.to_string();
    EXPECT_THROW(GridSubgraph::from_draft(d), InvalidGrid);
}

TEST(Validate, SpanningMismatch)
{
    GridDraft d;
    d.columns = 2;
    d.rows = 2;
    d.spanning = true;
    d.vertices = std::vector<Point>{{1, 1}, {2, 1}, {1, 2}};
    auto report = validate(d);
    EXPECT_TRUE(report.has("spanning mismatch")) << report.to_string();
}

TEST(Complement, Examples)
{
    EXPECT_EQ(complement(GridSubgraph::complete(3, 3)), GridSubgraph::empty_spanning(3, 3));
    EXPECT_EQ(complement(GridSubgraph::empty_spanning(2, 2)), GridSubgraph::complete(2, 2));

    auto one = GridSubgraph::from_edges(2, 2, {{1, 2, 1}}, {}, std::nullopt, true);
    auto c = complement(one);
    EXPECT_EQ(c.edge_count(), 3u);
    EXPECT_FALSE(c.has_h_edge(1, 2, 1));
    EXPECT_TRUE(c.has_h_edge(1, 2, 2));
    EXPECT_TRUE(c.has_v_edge(1, 1, 2));
    EXPECT_TRUE(c.has_v_edge(2, 1, 2));
}

TEST(Complement, Involution)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        auto g = oracle::random_grid(rng, oracle::uniform(rng, 1, 5), oracle::uniform(rng, 1, 5), 50);
        EXPECT_EQ(complement(complement(g)), g);
        EXPECT_EQ(complement(g).edge_count() + g.edge_count(), complement(GridSubgraph::empty_spanning(g.columns(), g.rows())).edge_count());
    }
}

TEST(Complement, NonSpanningRejected)
{
    EXPECT_THROW(complement(alternating_cycle(6)), InvalidArgument);
}

TEST(Degree, Examples)
{
    EXPECT_EQ(degree(GridSubgraph::complete(3, 3), {1, 1}), (Degree{2, 2}));
    EXPECT_EQ(degree(GridSubgraph::empty_spanning(4, 4), {3, 2}), (Degree{0, 0}));
    EXPECT_EQ(degree(alternating_cycle(8), {2, 1}), (Degree{1, 1}));
    EXPECT_THROW(degree(alternating_cycle(8), {1, 2}), InvalidArgument);
}

TEST(Canonical, TransposeOfAc8)
{
    auto ac8 = alternating_cycle(8);
    EXPECT_TRUE(isomorphic(transpose(ac8), ac8, false));
    EXPECT_EQ(transpose(transpose(ac8)), ac8);
}

TEST(Canonical, SquareVersusRowPath)
{
    auto square = alternating_cycle(4);
    auto path = named("hpath:4");
    EXPECT_NE(canonical_form(square, true), canonical_form(path, true));
}

TEST(Canonical, InvariantUnderPermutation)
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        int c = oracle::uniform(rng, 1, 5), r = oracle::uniform(rng, 1, 5);
        auto g = oracle::random_grid(rng, c, r, 40);
        std::vector<int> cp(c), rp(r);
        std::iota(cp.begin(), cp.end(), 1);
        std::iota(rp.begin(), rp.end(), 1);
        std::shuffle(cp.begin(), cp.end(), rng);
        std::shuffle(rp.begin(), rp.end(), rng);
        auto h = permute(g, cp, rp);
        EXPECT_EQ(canonical_form(g, false), canonical_form(h, false));
        EXPECT_EQ(canonical_form(g, true), canonical_form(transpose(h), true));

        auto lab = canonical_labeling(g, true);
        EXPECT_EQ(canonical_form(apply(g, lab.witness), true), lab.form);
    }
}

TEST(Canonical, DistinguishesNonIsomorphic)
{
    // agreement with the brute-force notion: a bijective embedding both ways
    std::mt19937_64 rng(9);
    for (int i = 0; i < 60; ++i) {
        auto g = oracle::random_grid(rng, 3, 3, 30);
        auto h = oracle::random_grid(rng, 3, 3, 30);
        bool iso = g.edge_count() == h.edge_count() && oracle::count_embeddings(g, h) > 0;
        EXPECT_EQ(isomorphic(g, h, false), iso);
    }
}

TEST(Permute, RejectsNonBijection)
{
    EXPECT_THROW(permute(GridSubgraph::complete(2, 2), {1, 1}, {1, 2}), InvalidArgument);
}

TEST(LineGraph, RowOfC5Product)
{
    auto g = GridSubgraph::from_edges(5, 1, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {1, 5, 1}}, {}, std::nullopt,
        true);
    auto line = line_graph(g, LineKind::row, 1);
    EXPECT_EQ(line.n, 5);
    EXPECT_TRUE(line.adjacent(5, 1));
    EXPECT_FALSE(line.adjacent(1, 3));
    EXPECT_EQ(line.degree(3), 2);
}

TEST(DenseGrid, RoundTrip)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        auto g = oracle::random_grid(rng, oracle::uniform(rng, 1, 6), oracle::uniform(rng, 1, 6), 50);
        EXPECT_EQ(DenseGrid(g).to_grid(), g);
    }
    auto ac = alternating_cycle(6);
    EXPECT_EQ(DenseGrid(ac).to_grid(), ac);
}

#include <gridram/bridging.hh>
#include <gridram/exact.hh>
#include <gridram/patterns.hh>

#include "oracles.hh"

#include <gtest/gtest.h>

#include <random>

using namespace gridram;

TEST(Bridge, ThreeStepExamples)
{
    auto g1 = bridge(GridSubgraph::single_vertex(), {LineKind::row, 1, 1});
    EXPECT_EQ(g1.columns(), 1);
    EXPECT_EQ(g1.rows(), 2);
    EXPECT_EQ(g1.vertices().size(), 2u);
    EXPECT_TRUE(g1.h_edges().empty());
    EXPECT_EQ(g1.v_edges(), (std::vector<VEdge>{{1, 1, 2}}));

    auto g2 = bridge(g1, {LineKind::column, 1, 1});
    EXPECT_EQ(g2.vertices().size(), 4u);
    EXPECT_EQ(g2.h_edges(), (std::vector<HEdge>{{1, 2, 1}}));
    EXPECT_EQ(g2.v_edges(), (std::vector<VEdge>{{1, 1, 2}, {2, 1, 2}}));

    GridDraft d;
    d.columns = 2;
    d.rows = 2;
    d.vertices = std::vector<Point>{};
    auto edgeless = GridSubgraph::from_draft(d);
    auto g3 = bridge(edgeless, {LineKind::column, 1, 2});
    EXPECT_EQ(g3.h_edges(), (std::vector<HEdge>{{1, 3, 2}}));
    EXPECT_TRUE(g3.v_edges().empty());
}

TEST(Bridge, OutOfRange)
{
    EXPECT_THROW(bridge(GridSubgraph::single_vertex(), {LineKind::column, 2, 1}), InvalidArgument);
    EXPECT_THROW(bridge(GridSubgraph::single_vertex(), {LineKind::column, 1, 2}), InvalidArgument);
}

TEST(Bridge, CopiesEveryEmbeddingOfTheOriginal)
{
    // H is a subgraph of bridge(H, step) on the first c columns
    std::mt19937_64 rng(2);
    for (int i = 0; i < 20; ++i) {
        auto h = oracle::random_grid(rng, 3, 3, 40);
        auto b = bridge(h, {LineKind::column, oracle::uniform(rng, 1, 3), oracle::uniform(rng, 1, 3)});
        EXPECT_EQ(b.columns(), 4);
        EXPECT_TRUE(is_embedding(h, b, {{1, 2, 3}, {1, 2, 3}}));
    }
}

TEST(Scripts, StepCounts)
{
    EXPECT_EQ(ac_script(6).steps.size(), 4u);
    EXPECT_EQ(ac_script(8).steps.size(), 6u);
    EXPECT_TRUE(contains(alternating_cycle(8), replay(ac_script(8))));
    EXPECT_TRUE(contains(aligned_staircase(5), replay(as_script(5))));
    auto stages = replay_stages(ac_script(6));
    EXPECT_EQ(stages.size(), 5u);
    EXPECT_EQ(stages.front(), GridSubgraph::single_vertex());
}

TEST(Scripts, AcSixReplayCarriesTheCycle)
{
    auto g = replay(ac_script(6));
    EXPECT_EQ(g.columns(), 3);
    EXPECT_EQ(g.rows(), 3);
    EXPECT_TRUE(is_embedding(alternating_cycle(6), g, {{1, 2, 3}, {1, 2, 3}}));
}

TEST(Constructible, Decisions)
{
    for (auto name : {"ac:6", "row_clique:3", "column_clique:3", "vertex", "hedge"}) {
        auto h = named(name);
        auto r = is_bridging_constructible(h);
        ASSERT_TRUE(r) << name;
        EXPECT_TRUE(verify_constructibility(h, *r, false)) << name;
    }
    EXPECT_EQ(is_bridging_constructible(alternating_cycle(6))->script.steps.size(), 4u);
    EXPECT_FALSE(is_bridging_constructible(named("square")));
    EXPECT_FALSE(is_bridging_constructible(nz_stool()));
}

TEST(Constructible, ExactMode)
{
    auto r = is_bridging_constructible(row_clique(3), true);
    ASSERT_TRUE(r);
    EXPECT_TRUE(verify_constructibility(row_clique(3), *r, true));
    EXPECT_TRUE(isomorphic(replay(r->script), row_clique(3), false));
}

TEST(Constructible, Cap)
{
    Caps small;
    small.constructible_lines = 4;
    EXPECT_THROW(is_bridging_constructible(alternating_cycle(6), false, small), CapExceeded);
}

TEST(Subdivision, TrivialAndClassical)
{
    auto h = named("hedge");
    std::pair<Point, Point> e{{1, 1}, {2, 1}};
    EXPECT_EQ(generalized_subdivide(h, e, 0, {}), h);

    // one new vertex (3, 1) on the row, joined to both ends; drop the edge
    auto s = generalized_subdivide(h, e, 1, {{{1, 1}, {3, 1}}, {{3, 1}, {2, 1}}}, false);
    EXPECT_EQ(s.vertices().size(), 3u);
    EXPECT_EQ(s.edge_count(), 2u);
    EXPECT_TRUE(isomorphic(s, named("hpath:3"), false));
}

TEST(Subdivision, ClosureIsACliqueOnTheNewVertices)
{
    auto h = named("hedge");
    std::pair<Point, Point> e{{1, 1}, {2, 1}};
    for (int m = 1; m <= 3; ++m) {
        auto g = h;
        for (auto & step : subdivision_closure_steps(h, e, m))
            g = bridge(g, step);
        // row 1 restricted to the original endpoints and the m new columns
        int cols = g.columns();
        EXPECT_EQ(cols, 2 + m);
        for (int a = 1; a <= cols; ++a)
            for (int b = a + 1; b <= cols; ++b)
                EXPECT_TRUE(g.has_h_edge(a, b, 1)) << "m = " << m << " pair " << a << "," << b;

        // and it contains the generalized subdivision with a path gadget
        std::vector<std::pair<Point, Point>> inner;
        Point prev{1, 1};
        for (int i = 1; i <= m; ++i) {
            inner.push_back({prev, {2 + i, 1}});
            prev = {2 + i, 1};
        }
        inner.push_back({prev, {2, 1}});
        EXPECT_TRUE(contains(generalized_subdivide(h, e, m, inner), g));
    }
}

TEST(Exact, ThresholdBound)
{
    auto b = threshold_bound(3, 3, 2);
    ASSERT_TRUE(b.value);
    EXPECT_EQ(*b.value, BigInt(1) << 70);

    auto one = threshold_bound(1, 1, 9);
    EXPECT_EQ(one.coefficient, 4);
    EXPECT_EQ(one.k_exponent, Rational(1, 2));
    ASSERT_TRUE(one.value);
    EXPECT_EQ(*one.value, 12);
    EXPECT_FALSE(threshold_bound(1, 1, 2).value);
    EXPECT_THROW(threshold_bound(0, 1, 2), InvalidArgument);
}

TEST(Exact, TuranF)
{
    EXPECT_EQ(turan_f(6, 3), Rational(6));
    for (int k = 2; k <= 12; ++k)
        EXPECT_GE(turan_f(2 * k, k), Rational(k));
    EXPECT_THROW(turan_f(4, 1), InvalidArgument);
    EXPECT_EQ(binomial(10, 3), 120);
    EXPECT_EQ(*exact_sqrt(BigInt(144)), 12);
    EXPECT_FALSE(exact_sqrt(BigInt(143)));
}

TEST(Supersaturation, IdentityOnSmallHosts)
{
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        auto g = oracle::random_grid(rng, 4, 4, 60);
        auto vertex = supersaturation_identity_check(GridSubgraph::single_vertex(), 1, 1, g);
        EXPECT_TRUE(vertex.equal);
        EXPECT_EQ(vertex.t_bridged, oracle::count_embeddings(named("hedge"), g));
        EXPECT_EQ(vertex.ordered_pairs, 2 * vertex.sum_f_edges);

        auto second = supersaturation_identity_check(named("vedge"), 1, 1, g);
        EXPECT_TRUE(second.equal);
        EXPECT_EQ(second.t_bridged, oracle::count_embeddings(bridge(named("vedge"), {LineKind::column, 1, 1}), g));
    }
    auto complete = supersaturation_identity_check(named("vedge"), 1, 1, GridSubgraph::complete(3, 3));
    EXPECT_TRUE(complete.equal);
    EXPECT_EQ(complete.t_bridged, 36u);
}

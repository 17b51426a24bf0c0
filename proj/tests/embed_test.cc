#include <gridram/embed.hh>
#include <gridram/patterns.hh>
#include <gridram/ramsey.hh>

#include "oracles.hh"

#include <gtest/gtest.h>

#include <random>

using namespace gridram;

TEST(Count, Examples)
{
    EXPECT_EQ(count_embeddings(GridSubgraph::single_vertex(), GridSubgraph::complete(3, 3)), 9u);
    EXPECT_EQ(count_embeddings(named("hedge"), GridSubgraph::complete(2, 2)), 4u);
    EXPECT_EQ(count_embeddings(alternating_cycle(6), GridSubgraph::complete(3, 3)), 36u);
}

TEST(Count, AgreesWithOracle)
{
    std::mt19937_64 rng(17);
    std::vector<GridSubgraph> patterns{GridSubgraph::single_vertex(), named("hedge"), named("vedge"), named("hpath:3"),
        alternating_cycle(4), alternating_cycle(6), named("staircase_path")};
    for (int i = 0; i < 40; ++i) {
        auto host = oracle::random_grid(rng, oracle::uniform(rng, 2, 4), oracle::uniform(rng, 2, 4), 60);
        for (auto & p : patterns) {
            auto expected = oracle::count_embeddings(p, host);
            EXPECT_EQ(count_embeddings(p, host), expected);
            EXPECT_EQ(count_embeddings(p, host, 3), expected);
            EXPECT_EQ(count_embeddings(p, DenseGrid(host)), expected);
            auto first = contains(p, host);
            EXPECT_EQ(first.has_value(), expected > 0);
            if (first) {
                EXPECT_TRUE(is_embedding(p, host, *first));
                EXPECT_EQ(*first, oracle::all_embeddings(p, host).front());
            }
        }
    }
}

TEST(Count, Constraints)
{
    EmbedConstraints only_column_two;
    only_column_two.column_masks = {0b10};
    EXPECT_EQ(count_embeddings(GridSubgraph::single_vertex(), GridSubgraph::complete(3, 3), 1, only_column_two), 3u);
}

TEST(Contains, Examples)
{
    auto c5 = product_grid(cycle_graph(5));
    EXPECT_FALSE(contains(alternating_cycle(6), c5));
    EXPECT_TRUE(contains(alternating_cycle(4), GridSubgraph::complete(2, 2)));
    EXPECT_FALSE(contains(alternating_cycle(4), aligned_staircase(4)));
}

TEST(Image, CoversPatternEdges)
{
    auto ac = alternating_cycle(6);
    Embedding e{{3, 1, 2}, {2, 3, 1}};
    auto img = image(ac, e);
    EXPECT_EQ(img.h_edges.size() + img.v_edges.size(), ac.edge_count());
    EXPECT_TRUE(is_embedding(ac, GridSubgraph::complete(3, 3), e));
    EXPECT_FALSE(is_embedding(ac, GridSubgraph::complete(3, 3), {{1, 1, 2}, {1, 2, 3}}));
}

TEST(Coclique, MaxExamples)
{
    EXPECT_EQ(max_coclique(GridSubgraph::empty_spanning(3, 3)).size, 3);
    EXPECT_EQ(max_coclique(GridSubgraph::complete(4, 4)).size, 1);
    auto m = max_coclique(product_grid(cycle_graph(5)));
    EXPECT_EQ(m.size, 2);
    EXPECT_TRUE(is_coclique(product_grid(cycle_graph(5)), m.witness));
}

TEST(Coclique, GreedyExamples)
{
    LineGraph empty{LineKind::row, 1, 5, {}};
    EXPECT_EQ(greedy_independent_set(empty).size(), 5u);
    LineGraph k5{LineKind::row, 1, 5, {}};
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b)
            k5.adjacency.push_back({a, b});
    EXPECT_EQ(greedy_independent_set(k5).size(), 1u);
    LineGraph c5{LineKind::row, 1, 5, {{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}}};
    EXPECT_EQ(greedy_independent_set(c5).size(), 2u);
    EXPECT_EQ(greedy_independent_set(c5, 1).size(), 1u);
}

TEST(Coclique, AgreesWithOracleOnRandomHosts)
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 60; ++i) {
        int n = oracle::uniform(rng, 1, 6);
        auto host = oracle::random_grid(rng, n, n, oracle::uniform(rng, 20, 90));
        int best = 0;
        for (int k = 1; k <= n; ++k)
            if (oracle::has_coclique(host, k))
                best = k;
        auto m = max_coclique(host);
        EXPECT_EQ(m.size, best);
        EXPECT_TRUE(oracle::is_coclique(host, m.witness));
        for (int k = 1; k <= n; ++k) {
            auto c = find_coclique(host, k);
            EXPECT_EQ(c.has_value(), k <= best);
            if (c)
                EXPECT_TRUE(oracle::is_coclique(host, *c));
        }
    }
}

TEST(Diverse, Examples)
{
    auto vertex = GridSubgraph::single_vertex();
    EXPECT_TRUE(is_n_diverse(GridSubgraph::complete(3, 3), {2, 2}, vertex, {1, 1}, 2).diverse);
    EXPECT_FALSE(is_n_diverse(GridSubgraph::empty_spanning(3, 3), {1, 1}, named("hedge"), {1, 1}, 1).diverse);
    auto r = is_n_diverse(GridSubgraph::complete(5, 5), {3, 3}, named("hedge"), {1, 1}, 2);
    ASSERT_TRUE(r.diverse);
    EXPECT_TRUE(verify_n_diverse(GridSubgraph::complete(5, 5), {3, 3}, named("hedge"), {1, 1}, r.witnesses));
    EXPECT_EQ(r.witnesses.size(), 2u);
}

TEST(Diverse, RejectsNonTree)
{
    EXPECT_THROW(is_n_diverse(GridSubgraph::complete(3, 3), {1, 1}, alternating_cycle(4), {1, 1}, 1), InvalidArgument);
}

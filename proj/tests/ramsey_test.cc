#include <gridram/cnf.hh>
#include <gridram/json_io.hh>
#include <gridram/patterns.hh>
#include <gridram/ramsey.hh>

#include "oracles.hh"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace gridram;

TEST(GrExact, SmallValues)
{
    auto edge = gr_exact(named("hedge"), 2, 3);
    EXPECT_EQ(edge.value, 2);
    EXPECT_EQ(edge.status, "gr = 2");
    ASSERT_TRUE(edge.levels.at(0).result.witness);
    EXPECT_TRUE(is_avoider(named("hedge"), *edge.levels[0].result.witness, 2));

    auto path = gr_exact(named("hpath:3"), 2, 3);
    EXPECT_EQ(path.value, 3);
    ASSERT_TRUE(path.levels.at(1).result.witness);
    EXPECT_EQ(*path.levels[1].result.witness, GridSubgraph::complete(2, 2));

    for (int k = 1; k <= 3; ++k)
        EXPECT_EQ(gr_exact(GridSubgraph::single_vertex(), k, 3).value, 1);
}

TEST(GrExact, UndecidedBeyondCaps)
{
    auto r = gr_exact(alternating_cycle(6), 3, 7);
    EXPECT_FALSE(r.value);
    EXPECT_NE(r.status.find("undecided"), std::string::npos);
    EXPECT_THROW(find_avoider(named("hedge"), 2, 4, AvoiderMethod::brute_force), CapExceeded);
}

TEST(Avoider, BacktrackingAgreesWithBruteForce)
{
    std::vector<GridSubgraph> patterns{named("hedge"), named("vedge"), named("hpath:3"), alternating_cycle(4),
        alternating_cycle(6), named("staircase_path"), row_clique(3)};
    for (auto & p : patterns)
        for (int k = 2; k <= 3; ++k)
            for (int n = 1; n <= 3; ++n) {
                auto brute = find_avoider(p, k, n, AvoiderMethod::brute_force);
                auto back = find_avoider(p, k, n, AvoiderMethod::backtracking);
                auto par = find_avoider(p, k, n, AvoiderMethod::backtracking, 3);
                EXPECT_EQ(brute.status, back.status);
                EXPECT_EQ(brute.status, par.status);
                EXPECT_EQ(brute.status == AvoiderStatus::found, oracle::avoider_exists(p, k, n));
                EXPECT_EQ(brute.witness, back.witness);
                EXPECT_EQ(back.witness, par.witness);
                if (brute.witness)
                    EXPECT_TRUE(is_avoider(p, *brute.witness, k));
            }
}

TEST(Avoider, BacktrackingAtFour)
{
    // no oracle at this size; the witness (if any) must check out
    auto r = find_avoider(named("hpath:3"), 3, 4, AvoiderMethod::backtracking);
    ASSERT_NE(r.status, AvoiderStatus::undecided);
    if (r.witness)
        EXPECT_TRUE(is_avoider(named("hpath:3"), *r.witness, 3));
}

TEST(Cnf, EdgeAtTwo)
{
    auto cnf = encode_cnf(named("hedge"), 2, 2);
    EXPECT_EQ(cnf.variables(), 4);
    EXPECT_EQ(cnf.clauses.size(), 6u);
    int negative = 0;
    for (auto & c : cnf.clauses)
        if (c.size() == 1 && c[0] < 0)
            ++negative;
    EXPECT_EQ(negative, 2);
    EXPECT_FALSE(evaluate_cnf(cnf));
    EXPECT_FALSE(oracle::dpll(cnf.variables(), cnf.clauses));
}

TEST(Cnf, EdgeAtOne)
{
    auto cnf = encode_cnf(named("hedge"), 2, 1);
    EXPECT_EQ(cnf.variables(), 0);
    EXPECT_TRUE(cnf.clauses.empty());
    auto model = evaluate_cnf(cnf);
    ASSERT_TRUE(model);
    auto d = decode_model(cnf, *model);
    EXPECT_TRUE(d.ok());
}

TEST(Cnf, AgreesWithOracles)
{
    for (auto name : {"hedge", "vedge", "hpath:3", "square"})
        for (int k = 2; k <= 3; ++k)
            for (int n = 1; n <= 3; ++n) {
                auto p = named(name);
                auto cnf = encode_cnf(p, k, n);
                if (cnf.variables() > 18)
                    continue;
                auto model = evaluate_cnf(cnf);
                auto dp = oracle::dpll(cnf.variables(), cnf.clauses);
                EXPECT_EQ(model.has_value(), dp.has_value()) << name << " " << k << " " << n;
                EXPECT_EQ(model.has_value(), oracle::avoider_exists(p, k, n)) << name << " " << k << " " << n;
                if (model)
                    EXPECT_TRUE(decode_model(cnf, *model).ok());
                if (dp) {
                    EXPECT_TRUE(satisfies(cnf, *dp));
                    EXPECT_TRUE(decode_model(cnf, *dp).ok());
                }
            }
}

TEST(Cnf, DimacsRoundTrip)
{
    auto cnf = encode_cnf(named("hpath:3"), 2, 3);
    auto text = to_dimacs(cnf);
    EXPECT_EQ(text.rfind("c gridram avoidance n 3 k 2\n", 0), 0u);
    EXPECT_NE(text.find("c var 1 = h 1 2 1\n"), std::string::npos);
    EXPECT_NE(text.find("p cnf 18 "), std::string::npos);
    auto back = parse_dimacs(text);
    EXPECT_EQ(back.n, cnf.n);
    EXPECT_EQ(back.k, cnf.k);
    EXPECT_EQ(back.slots, cnf.slots);
    EXPECT_EQ(back.clauses, cnf.clauses);
    EXPECT_EQ(to_dimacs(back), text);
    EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 3 0\n"), ParseError);
}

TEST(Cnf, ModelImport)
{
    auto m = parse_model("c comment\ns SATISFIABLE\nv 1 -2 3\nv -4 0\n", 4);
    EXPECT_FALSE(m.unsatisfiable);
    EXPECT_EQ(m.values, (std::vector<bool>{true, false, true, false}));
    EXPECT_TRUE(parse_model("s UNSATISFIABLE\n", 4).unsatisfiable);
    EXPECT_EQ(parse_model("2 0", 3).values, (std::vector<bool>{false, true, false}));

    // a wrong model is caught by decoding
    auto cnf = encode_cnf(named("hedge"), 2, 2);
    auto d = decode_model(cnf, {true, true, true, true});
    EXPECT_FALSE(d.satisfies_clauses);
    EXPECT_FALSE(d.avoids_pattern);
    EXPECT_FALSE(d.ok());
}

TEST(LowerBound, CycleFive)
{
    auto r = product_lower_bound(cycle_graph(5), 3);
    EXPECT_TRUE(r.triangle_free);
    EXPECT_EQ(r.independence, 2);
    EXPECT_TRUE(r.ac6_free);
    EXPECT_FALSE(r.coclique);
    EXPECT_TRUE(r.certifies);
    EXPECT_EQ(oracle::count_embeddings(alternating_cycle(6), r.grid), 0u);
    EXPECT_FALSE(oracle::has_coclique(r.grid, 3));
}

TEST(LowerBound, Failures)
{
    auto edgeless = product_lower_bound(make_simple_graph(2, {}), 2);
    EXPECT_FALSE(edgeless.certifies);
    ASSERT_TRUE(edgeless.coclique);
    EXPECT_EQ(edgeless.coclique->kind, LineKind::row);

    auto k5 = product_lower_bound(complete_graph(5), 2);
    EXPECT_FALSE(k5.triangle_free);
    EXPECT_FALSE(k5.ac6_free);
    ASSERT_TRUE(k5.ac6_copy);
    EXPECT_TRUE(is_embedding(alternating_cycle(6), k5.grid, *k5.ac6_copy));
    EXPECT_FALSE(k5.certifies);
}

TEST(LowerBound, EdgeListFormat)
{
    auto g = parse_edge_list("# five cycle\n5\n1 2\n2 3\n3 4\n4 5\n5 1\n");
    EXPECT_EQ(g.n, 5);
    EXPECT_EQ(g.edges.size(), 5u);
    EXPECT_EQ(parse_edge_list(format_edge_list(g)).edges, g.edges);
    EXPECT_THROW(parse_edge_list("3\n1 4\n"), ParseError);
    EXPECT_THROW(make_simple_graph(3, {{2, 2}}), InvalidArgument);
}

TEST(FindAc6, Examples)
{
    auto complete = find_ac6_or_coclique(GridSubgraph::complete(3, 3), 2);
    EXPECT_EQ(complete.certificate.kind, CertificateKind::embedding);
    EXPECT_TRUE(verify_certificate(complete.certificate, alternating_cycle(6), GridSubgraph::complete(3, 3), 2));

    for (int n = 2; n <= 5; ++n)
        for (int k = 2; k <= n; ++k) {
            auto empty = GridSubgraph::empty_spanning(n, n);
            auto r = find_ac6_or_coclique(empty, k);
            EXPECT_EQ(r.certificate.kind, CertificateKind::coclique);
            EXPECT_TRUE(oracle::is_coclique(empty, *r.certificate.coclique));
        }

    auto c5 = product_grid(cycle_graph(5));
    EXPECT_EQ(find_ac6_or_coclique(c5, 3).certificate.kind, CertificateKind::inconclusive);
    EXPECT_EQ(find_ac6_or_coclique(c5, 3).completeness_threshold, 55 * 27);
}

TEST(FindAc6, SoundOnRandomHosts)
{
    std::mt19937_64 rng(41);
    for (int i = 0; i < 60; ++i) {
        int n = oracle::uniform(rng, 2, 7), k = oracle::uniform(rng, 2, 3);
        auto g = oracle::random_grid(rng, n, n, oracle::uniform(rng, 30, 95));
        auto r = find_ac6_or_coclique(g, k);
        auto & c = r.certificate;
        if (c.kind == CertificateKind::embedding)
            EXPECT_TRUE(oracle::embeds(alternating_cycle(6), g, c.embedding->column_map, c.embedding->row_map));
        if (c.kind == CertificateKind::coclique) {
            EXPECT_TRUE(oracle::is_coclique(g, *c.coclique));
            EXPECT_EQ(static_cast<int>(c.coclique->positions.size()), k);
        }
    }
}

TEST(UniformSubgrid, Examples)
{
    auto all_one = GridSubgraph::complete(4, 4);
    for (int m = 1; m <= 4; ++m) {
        auto s = uniform_subgrid(all_one, m);
        ASSERT_TRUE(s);
        EXPECT_EQ(s->horizontal_colour, 1);
        EXPECT_EQ(s->vertical_colour, 1);
        std::vector<int> first(m);
        std::iota(first.begin(), first.end(), 1);
        EXPECT_EQ(s->columns, first);
        EXPECT_EQ(s->rows, first);
    }

    // horizontal edges colour 1, vertical colour 2
    std::vector<HEdge> hs(product_grid(complete_graph(4)).h_edges());
    auto chi12 = GridSubgraph::from_edges(4, 4, hs, {}, std::nullopt, true);
    auto s = uniform_subgrid(chi12, 2);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->horizontal_colour, 1);
    EXPECT_EQ(s->vertical_colour, 2);
    EXPECT_TRUE(verify_uniform_subgrid(chi12, 2, *s));
}

TEST(UniformSubgrid, UniformSubgridThreshold)
{
    EXPECT_EQ(uniform_subgrid_threshold(1).lower, 0);
    EXPECT_THROW(uniform_subgrid_threshold(2), InvalidArgument);
    auto table = known_diagonal_ramsey();
    table[5] = {43, 48};
    auto t = uniform_subgrid_threshold(2, table);
    EXPECT_EQ(t.l, 5);
    EXPECT_EQ(t.lower, 4 * binomial(43, 5));
    EXPECT_EQ(t.upper, 4 * binomial(48, 5));
    EXPECT_FALSE(t.exact());
}

TEST(Certificate, WitnessGrid)
{
    Certificate c;
    c.kind = CertificateKind::witness_grid;
    c.witness = GridSubgraph::complete(2, 2);
    EXPECT_TRUE(verify_certificate(c, named("hpath:3"), GridSubgraph::complete(2, 2), 2));
    c.witness = GridSubgraph::empty_spanning(2, 2);
    EXPECT_FALSE(verify_certificate(c, named("hpath:3"), GridSubgraph::complete(2, 2), 2));
}

#ifndef GRIDRAM_VERIFY_ORACLES_HH
#define GRIDRAM_VERIFY_ORACLES_HH

// Deliberately naive reference implementations. None of these call the
// library's search code; they only read GridSubgraph / ThreeGraph data.

#include <gridram/embed.hh>
#include <gridram/grid.hh>
#include <gridram/hyper.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace gridram::oracle
{
    /// All injections [a] -> [b], lexicographic.
    auto injections(int a, int b) -> std::vector<std::vector<int>>;

    /// Direct check of the embedding contract.
    auto embeds(const GridSubgraph & pattern, const GridSubgraph & host, const std::vector<int> & column_map,
        const std::vector<int> & row_map) -> bool;

    /// Every pair of injections, tested one by one.
    auto all_embeddings(const GridSubgraph & pattern, const GridSubgraph & host) -> std::vector<Embedding>;
    auto count_embeddings(const GridSubgraph & pattern, const GridSubgraph & host) -> std::uint64_t;

    /// Largest independent set among n positions by trying every subset.
    auto independence_number(int n, const std::function<bool(int, int)> & adjacent) -> int;

    /// Some row or column of a spanning host has k pairwise non-adjacent
    /// positions (all subsets).
    auto has_coclique(const GridSubgraph & host, int k) -> bool;

    /// Same check for a coclique certificate.
    auto is_coclique(const GridSubgraph & host, const Coclique &) -> bool;

    /// Enumerates all 2^slots spanning subgraphs of G_{N x N}.
    auto avoider_exists(const GridSubgraph & pattern, int k, int n) -> bool;

    /// Plain DPLL with unit propagation; returns a model if satisfiable.
    auto dpll(int variables, const std::vector<std::vector<int>> & clauses) -> std::optional<std::vector<bool>>;

    /// n-diversity by testing every n-tuple of anchored embeddings.
    auto n_diverse(const GridSubgraph & host, Point host_vertex, const GridSubgraph & tree, Point tree_vertex, int n)
        -> bool;

    /// Tries every M x M subgrid with every colour pair.
    auto uniform_subgrid_exists(const GridSubgraph & colouring, int m) -> bool;

    /// Injective maps V(H) -> V(G) carrying edges to edges, optionally
    /// side-respecting.
    auto count_embeddings_3(const ThreeGraph & pattern, const ThreeGraph & host, bool respect_bipartition)
        -> std::uint64_t;

    /// Uniform integer in [lo, hi], from explicit arithmetic on the raw
    /// 64-bit output so results do not depend on the standard library.
    auto uniform(std::mt19937_64 & rng, int lo, int hi) -> int;

    /// Random spanning c x r grid; each slot present with probability
    /// percent / 100.
    auto random_grid(std::mt19937_64 & rng, int columns, int rows, int percent) -> GridSubgraph;
}

#endif

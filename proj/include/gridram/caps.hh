#ifndef GRIDRAM_CAPS_HH
#define GRIDRAM_CAPS_HH

#include <cstdint>
#include <string>
#include <string_view>

namespace gridram
{
    /// Size limits for the exact/exhaustive procedures. Every exhaustive
    /// routine refuses inputs above its cap with CapExceeded instead of
    /// running for hours.
    struct Caps
    {
        int canonical_lines = 8;           // max columns and max rows for canonical_form
        int coclique_line = 20;            // max line length for exact independent sets
        int diverse_product = 12;          // max |T| * n for is_n_diverse
        int constructible_lines = 9;       // max rows + columns for the backward search
        int brute_force_n = 3;             // max N for exhaustive gr enumeration
        int backtrack_n = 5;               // max N for the pruned avoider search
        std::uint64_t backtrack_nodes = 400'000'000; // node budget per avoider search
        int cnf_eval_vars = 24;            // max variables for exhaustive CNF evaluation
        int coloring_rows = 6;             // max rows for column_coloring
        int color_subset_exact = 20;       // max columns for exact color_restricted_subset
        int hyper_pattern_vertices = 10;   // max |V(H)| for count_embeddings_3
        int bipartition_search = 12;       // max |V| for Property-B presentation search
    };

    /// Parses a "key=value,key=value" override string (the GRIDRAM_CAPS
    /// syntax) on top of `base`. Unknown keys or malformed values throw
    /// InvalidArgument.
    auto parse_caps(std::string_view spec, Caps base = {}) -> Caps;

    /// Caps used when a caller does not pass any: the defaults overridden
    /// by the GRIDRAM_CAPS environment variable, read once.
    auto default_caps() -> const Caps &;
}

#endif

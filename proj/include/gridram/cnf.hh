#ifndef GRIDRAM_CNF_HH
#define GRIDRAM_CNF_HH

#include <gridram/caps.hh>
#include <gridram/grid.hh>
#include <gridram/ramsey.hh>

#include <optional>
#include <string>
#include <vector>

namespace gridram
{
    /// Avoidance formula for (pattern, k, N). Variable i (1-based) is the
    /// slot slots[i - 1] of G_{N x N}, true meaning the edge is present.
    struct CnfInstance
    {
        int n = 0;
        int k = 0;
        std::string pattern_json;
        std::vector<Slot> slots;
        std::vector<std::vector<int>> clauses;

        [[nodiscard]] auto variables() const -> int { return static_cast<int>(slots.size()); }
    };

    /// One clause per distinct embedding image of the pattern in the
    /// complete grid (all its edges negated) and one per line and k-subset
    /// of that line (all C(k, 2) pairs positive). Literals within a clause
    /// are sorted by variable; duplicate clauses are dropped. Satisfiable
    /// iff gr(pattern, K_k) > N.
    auto encode_cnf(const GridSubgraph & pattern, int k, int n) -> CnfInstance;

    /// DIMACS text with "c var <id> = h x1 x2 y" / "c var <id> = v x y1 y2"
    /// comments, then the "p cnf V C" header and clauses.
    auto to_dimacs(const CnfInstance &) -> std::string;

    /// Reads back text produced by to_dimacs. Throws ParseError.
    auto parse_dimacs(const std::string & text) -> CnfInstance;

    struct SolverModel
    {
        bool unsatisfiable = false;     // "s UNSATISFIABLE" seen
        std::vector<bool> values;       // values[i - 1] for variable i
    };

    /// Accepts solver output: "c" and "s" lines are skipped (apart from
    /// noting UNSATISFIABLE), a leading "v" is dropped, and the remaining
    /// integers are literals; 0 is ignored. Unmentioned variables are false.
    auto parse_model(const std::string & text, int variables) -> SolverModel;

    auto satisfies(const CnfInstance &, const std::vector<bool> & values) -> bool;

    /// Exhaustive evaluation; the model returned is the least in variable
    /// order (variable 1 most significant). Throws CapExceeded above
    /// caps.cnf_eval_vars variables.
    auto evaluate_cnf(const CnfInstance &, const Caps & = default_caps()) -> std::optional<std::vector<bool>>;

    struct DecodedModel
    {
        bool satisfies_clauses = false;
        GridSubgraph witness;
        bool avoids_pattern = false;
        bool avoids_cocliques = false;

        [[nodiscard]] auto ok() const -> bool { return satisfies_clauses && avoids_pattern && avoids_cocliques; }
    };

    /// Builds the witness grid and checks it directly against the pattern
    /// and k-cocliques, independently of the clauses.
    auto decode_model(const CnfInstance &, const std::vector<bool> & values, const Caps & = default_caps())
        -> DecodedModel;
}

#endif

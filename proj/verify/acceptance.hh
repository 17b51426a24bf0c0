#ifndef GRIDRAM_VERIFY_ACCEPTANCE_HH
#define GRIDRAM_VERIFY_ACCEPTANCE_HH

#include <gridram/caps.hh>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace gridram::acceptance
{
    struct Criterion
    {
        int id = 0;
        std::string title;
        bool pass = false;
        std::string detail;     // deterministic; no timings
        double seconds = 0.0;
        double budget_seconds = 0.0;
    };

    struct Options
    {
        std::uint64_t seed = 1;
        int workers = 1;
        Caps caps = default_caps();
    };

    auto run_one(int id, const Options &) -> Criterion;
    auto run_all(const Options &) -> std::vector<Criterion>;

    /// One line per criterion: "PASS  3  title  (1.23 s / 60 s)  detail".
    auto print(std::ostream &, const Criterion &, bool with_timing = true) -> void;
}

#endif

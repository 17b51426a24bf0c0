// Runs every acceptance criterion and prints one line per criterion.
// Usage: gridram_acceptance [seed] [workers]

#include "acceptance.hh"

#include <cstdlib>
#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    gridram::acceptance::Options o;
    if (argc > 1)
        o.seed = std::strtoull(argv[1], nullptr, 10);
    if (argc > 2)
        o.workers = std::atoi(argv[2]);

    bool all = true;
    for (auto & c : gridram::acceptance::run_all(o)) {
        gridram::acceptance::print(std::cout, c, true);
        all = all && c.pass;
    }
    std::cout << (all ? "all criteria passed" : "some criteria FAILED") << std::endl;
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
}

// Runs the ten acceptance criteria and prints one line per criterion.
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "dw/suites.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 0;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    int failed = 0;
    for (int id = 1; id <= 10; ++id) {
        dw::CheckResult r;
        try {
            r = dw::run_criterion(id, seed);
        } catch (const std::exception& e) {
            r = {std::to_string(id), "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(), 0};
        }
        failed += !r.passed;
        std::cout << (r.passed ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << id << "  " << r.title << "  ("
                  << r.detail << ")" << std::endl;
    }
    std::cout << (failed ? std::to_string(failed) + " of 10 criteria failed" : std::string("all 10 criteria passed"))
              << std::endl;
    return failed ? 1 : 0;
}

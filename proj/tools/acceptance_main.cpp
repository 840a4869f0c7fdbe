/**
 * @file acceptance_main.cpp
 * @brief Standalone acceptance-suite runner: one PASS/FAIL line per
 *        criterion, exit 0 iff all pass.
 */
#include "acceptance_suite.hpp"

#include <cstdlib>
#include <iostream>
#include <thread>

int main(int argc, char** argv) {
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    if (argc > 1) jobs = std::max(1, std::atoi(argv[1]));
    qt::accept::SuiteResult r = qt::accept::run_acceptance(jobs, std::cout);
    std::cout << (r.all_pass ? "ALL PASS" : "FAILURES PRESENT") << " ("
              << r.criteria.size() << " criteria, " << r.seconds << "s)\n";
    return r.all_pass ? 0 : 1;
}

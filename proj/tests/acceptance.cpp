// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <iostream>

#include "twobridge/selftest.hpp"

int main() {
    auto results = twobridge::run_selftest();
    bool ok = twobridge::print_selftest(std::cout, results);
    return ok ? 0 : 1;
}

/* Golden reference tables for the small stable branching matrices, and a
   verifier that recomputes each one from scratch and compares bit for bit. */

#pragma once

#include <vector>

#include "branchq/branching.hpp"

namespace branchq {

struct GoldenTable {
    Family family;
    int n = 0;
    std::vector<int> params;
    IntMatrix entries;
};

// The compiled-in reference tables.
std::vector<GoldenTable> appendix_tables();

struct AppendixEntry {
    Family family;
    int n = 0;
    std::vector<int> params;
    bool match = false;
};

struct AppendixReport {
    std::vector<AppendixEntry> entries;
    bool all_match = false;
};

// Recompute every reference table and compare exactly.
AppendixReport verify_appendix();

} // namespace branchq

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "royal/solver.hpp"

namespace royal {

// One checked claim: a fixture value recomputed from scratch and compared
// against its expected value.
struct ReproduceRow {
    std::string claim;
    std::string expected;
    std::string computed;
    bool pass = false;
    std::int64_t ms = 0;
};

struct ReproduceReport {
    std::string fixture_set;
    std::vector<ReproduceRow> rows;
    bool all_pass() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
};

// Fixture sets: "cycles", "complete", "products", "coronas", "gk", "chords",
// and "all" for their concatenation.
std::vector<std::string> reproduce_set_names();

// Recompute every fixture in the set. Unknown set names throw
// invalid_argument; solver timeouts surface as failing rows, not exceptions.
ReproduceReport run_reproduce(const std::string& set_name, const SolveOptions& opts = {});

// Aligned pass/fail table, one row per claim, with a closing summary line.
std::string reproduce_to_text(const ReproduceReport& report);

}  // namespace royal

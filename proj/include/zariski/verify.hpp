#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zariski::verify {

struct PropertyResult {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string first_failure;
};

struct Report {
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::vector<PropertyResult> properties;

    bool passed() const;
};

// Runs the randomized property suite. Trial i draws from an RNG seeded by
// (seed, i), so the report depends only on the arguments.
Report run(std::uint64_t seed, std::uint64_t trials);

}  // namespace zariski::verify

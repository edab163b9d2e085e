#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lcskt {

// Randomized identity sweeps; deterministic per seed, reproducer text for
// every failing draw.
struct SweepResult {
    std::string family;
    std::uint64_t seed = 0;
    int draws = 0;
    int passes = 0;
    std::vector<std::string> failures;  // reproducer descriptions
    bool ok() const { return passes == draws; }
};

// family: one of "nonnil", "nil-e0", "nil-e1", "almost-abelian".
SweepResult run_sweep(const std::string& family, int draws, std::uint64_t seed);
std::vector<std::string> sweep_families();

}  // namespace lcskt

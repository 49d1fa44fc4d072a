#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace acceptance {

inline constexpr std::uint64_t default_seed = 20240611;

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs criteria 1..8 in order. Deterministic for a fixed seed apart from
/// the measured times.
std::vector<CriterionResult> run_all(std::uint64_t seed = default_seed);

/// One line per criterion: "criterion <id> PASS|FAIL <name>: <detail>",
/// optionally followed by the time taken.
std::string format_line(const CriterionResult& r, bool with_time);

}  // namespace acceptance

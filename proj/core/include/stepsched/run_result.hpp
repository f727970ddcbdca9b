#pragma once

#include <cstdint>
#include <vector>

#include "stepsched/schedule.hpp"

namespace stepsched {

/// Outcome of one heuristic run.
struct RunResult {
    Sequence best_sequence;
    Time best_value = 0;
    std::uint64_t iterations = 0;     // shake + local search rounds
    std::uint64_t perturbations = 0;  // 3-opt restarts
    double elapsed_seconds = 0.0;
    std::uint64_t seed = 0;
    std::vector<Time> trace;  // best value after each iteration
};

}  // namespace stepsched

#pragma once

// EDD start, variable neighborhood descent, the general VNS with 3-opt
// restarts, and the basic VNS it is compared against.

#include <array>
#include <cstdint>

#include "stepsched/neighborhoods.hpp"
#include "stepsched/random.hpp"
#include "stepsched/run_result.hpp"
#include "stepsched/schedule.hpp"

namespace stepsched {

struct SearchParams {
    std::uint64_t iter_max = 500;
    std::uint64_t iter_nip = 150;  // iterations without improvement before stopping
    std::uint64_t gamma = 75;      // stagnation length that triggers a 3-opt restart
    std::uint64_t seed = 0;
    bool record_trace = false;

    /// Throws std::invalid_argument unless 0 < gamma <= iter_nip <= iter_max.
    void validate() const;
};

/// Non-decreasing due date, ties by id.
Sequence edd_sequence(const Instance& instance);

using NeighborhoodOrder = std::array<Neighborhood, 5>;

enum class VndPolicy {
    /// Stay on the current neighborhood after an improvement, advance otherwise.
    keep_position,
    /// Go back to the first neighborhood of the order after an improvement.
    restart_first,
};

/// Throws std::invalid_argument if `order` is not a permutation of the five.
Sequence vnd(const Evaluator& eval, const Sequence& seq, const NeighborhoodOrder& order,
             VndPolicy policy = VndPolicy::keep_position);
Sequence vnd(const Instance& instance, const Sequence& seq, const NeighborhoodOrder& order,
             VndPolicy policy = VndPolicy::keep_position);

/// Uniform over the 120 orders.
NeighborhoodOrder random_order(RandomStream& rng);

RunResult gvns(const Instance& instance, const SearchParams& params = {});
RunResult vns(const Instance& instance, const SearchParams& params = {});

}  // namespace stepsched

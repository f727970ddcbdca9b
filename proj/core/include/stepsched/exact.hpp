#pragma once

// Exact optimum for small instances: full enumeration (the reference oracle)
// and a depth-first branch and bound over sequence prefixes.

#include <cstdint>
#include <span>
#include <stdexcept>

#include "stepsched/schedule.hpp"

namespace stepsched {

class SizeLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OptimalResult {
    Time best_value = 0;
    Sequence best_sequence;
    std::uint64_t optimal_set_size = 0;  // brute force only
    std::uint64_t nodes_explored = 0;    // branch and bound only
    bool proven = true;                  // false when the node limit stopped the search
};

inline constexpr std::size_t default_brute_force_cap = 10;

/// Enumerates all n! orders in lexicographic order; the returned sequence is
/// the lexicographically smallest optimum. Throws SizeLimitExceeded if n > n_cap.
OptimalResult brute_force(const Instance& instance, std::size_t n_cap = default_brute_force_cap);

/// Tardiness accumulated by a duplicate-free prefix scheduled from time 0.
/// Every completion of the prefix costs at least this much.
Time prefix_lower_bound(const Instance& instance, std::span<const JobId> prefix);

struct BranchAndBoundOptions {
    std::uint64_t node_limit = 50'000'000;
    /// Prune "k then j" when both jobs would stay on the same side of their
    /// deteriorating dates in either adjacent order and j dominates k. Sound for
    /// the optimal value; may change which optimum is returned.
    bool dominance_pruning = false;
};

/// Children are expanded in EDD order. A node is cut when its prefix
/// tardiness plus sum over unscheduled j of max(0, C + a_j - d_j), with C the
/// prefix completion time, reaches the incumbent (initially the EDD order).
/// nodes_explored counts generated non-root nodes.
OptimalResult branch_and_bound(const Instance& instance, const BranchAndBoundOptions& options = {});

}  // namespace stepsched

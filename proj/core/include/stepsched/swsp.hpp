#pragma once

// Simple weighted search procedure: for every weight triple on an n x n grid,
// build a sequence greedily by the weighted value
//     m_j = w1 * d_j + w2 * a_j + w3 * h_j
// (first job: earliest due date), keep the best one, then run one pass of
// pairwise interchanges over it.

#include <vector>

#include "stepsched/run_result.hpp"
#include "stepsched/schedule.hpp"

namespace stepsched {

struct WeightTriple {
    double w1 = 0.0;  // due date
    double w2 = 0.0;  // basic processing time
    double w3 = 0.0;  // deteriorating date

    friend bool operator==(const WeightTriple&, const WeightTriple&) = default;
};

struct SwspParams {
    double w1_min = 0.2;
    double w1_max = 0.9;
    double w2_min = 0.1;
    double w2_max = 0.7;
    double w3_fallback = 0.1;       // used when 1 - w1 - w2 is negative
    bool swap_until_fixpoint = false;  // repeat interchange passes until none improves

    /// Throws std::invalid_argument when a min exceeds its max or the fallback is not positive.
    void validate() const;
};

/// n^2 triples in (l1, l2) lexicographic order,
/// w1 = w1_min + (w1_max - w1_min)(l1 - 1)/(n - 1), likewise w2 with l2,
/// w3 = 1 - w1 - w2 or the fallback when that is negative. Requires n >= 2.
std::vector<WeightTriple> weight_grid(std::size_t n, const SwspParams& params = {});

/// Greedy construction for one triple. Ties on m_j (and on the first due date)
/// go to the smaller id.
Sequence greedy_construct(const Instance& instance, const WeightTriple& triple);
Sequence greedy_construct(const Evaluator& eval, const WeightTriple& triple);

/// For i in 0..n-1, for j in 0..n-1, i != j: swap positions i and j and keep
/// the result when it strictly lowers the total. One full pass.
Sequence pairwise_swap_pass(const Instance& instance, const Sequence& seq);
Sequence pairwise_swap_pass(const Evaluator& eval, const Sequence& seq);

struct SwspResult {
    RunResult run;                 // final sequence after the interchange pass
    Sequence constructive_best;    // best greedy sequence over the grid
    Time constructive_value = 0;
    WeightTriple best_triple;
};

/// Deterministic. For n = 1 the single order is returned.
SwspResult swsp(const Instance& instance, const SwspParams& params = {});

}  // namespace stepsched

#include <gtest/gtest.h>

#include <random>

#include "stepsched/exact.hpp"
#include "stepsched/instance_io.hpp"
#include "test_support.hpp"

using namespace stepsched;

namespace {

Instance two_jobs() { return Instance{"two", std::nullopt, {Job{1, 3, 0, 3, 10}, Job{2, 1, 0, 1, 10}}}; }

}  // namespace

TEST(BruteForce, Example8) {
    const OptimalResult r = brute_force(example8_instance());
    EXPECT_EQ(r.best_value, 572);
    EXPECT_EQ(r.best_sequence, (Sequence{2, 3, 4, 1, 5, 7, 8, 6}));
    EXPECT_EQ(r.optimal_set_size, 1u);
    EXPECT_TRUE(r.proven);
}

TEST(BruteForce, SingleJob) {
    Instance inst{"one", std::nullopt, {Job{1, 7, 2, 3, 0}}};
    const OptimalResult r = brute_force(inst);
    EXPECT_EQ(r.best_value, 4);
    EXPECT_EQ(r.best_sequence, (Sequence{1}));
}

TEST(BruteForce, TwoJobs) {
    const OptimalResult r = brute_force(two_jobs());
    EXPECT_EQ(r.best_value, 1);
    EXPECT_EQ(r.best_sequence, (Sequence{2, 1}));
}

TEST(BruteForce, SizeCap) {
    std::mt19937_64 rng(1);
    EXPECT_THROW(brute_force(oracle::random_instance(rng, 11)), SizeLimitExceeded);
    EXPECT_THROW(brute_force(oracle::random_instance(rng, 5), 4), SizeLimitExceeded);
}

TEST(BruteForce, MatchesOracle) {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        const Instance inst = oracle::random_instance(rng, 1 + rep % 7);
        const OptimalResult r = brute_force(inst);
        EXPECT_EQ(r.best_value, oracle::oracle_optimum(inst));
        EXPECT_EQ(oracle::oracle_total(inst, r.best_sequence.order), r.best_value);
        EXPECT_GE(r.optimal_set_size, 1u);
    }
}

TEST(PrefixBound, Examples) {
    const Instance inst = example8_instance();
    EXPECT_EQ(prefix_lower_bound(inst, {}), 0);
    const std::vector<JobId> prefix{2, 8};
    EXPECT_EQ(prefix_lower_bound(inst, prefix), 31);
    const std::vector<JobId> full{3, 2, 4, 1, 5, 7, 8, 6};
    EXPECT_EQ(prefix_lower_bound(inst, full), 575);
    const std::vector<JobId> bad{2, 2};
    EXPECT_THROW(prefix_lower_bound(inst, bad), InvalidSequence);
}

TEST(PrefixBound, NeverExceedsAnyCompletion) {
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 300; ++rep) {
        const std::size_t n = 2 + rep % 7;
        const Instance inst = oracle::random_instance(rng, n);
        const auto order = oracle::random_order(rng, n);
        const std::size_t len = rep % (n + 1);
        const std::vector<JobId> prefix(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(len));
        EXPECT_LE(prefix_lower_bound(inst, prefix), oracle::oracle_total(inst, order));
    }
}

TEST(BranchAndBound, Example8) {
    const OptimalResult r = branch_and_bound(example8_instance());
    EXPECT_EQ(r.best_value, 572);
    EXPECT_TRUE(r.proven);
    EXPECT_LT(r.nodes_explored, 40320u);
    EXPECT_EQ(evaluate_schedule(example8_instance(), r.best_sequence).total, 572);
}

TEST(BranchAndBound, SingleJob) {
    Instance inst{"one", std::nullopt, {Job{1, 7, 2, 3, 0}}};
    const OptimalResult r = branch_and_bound(inst);
    EXPECT_EQ(r.best_value, 4);
    EXPECT_EQ(r.nodes_explored, 1u);
}

TEST(BranchAndBound, NodeLimitLeavesUnproven) {
    std::mt19937_64 rng(8);
    const Instance inst = oracle::random_instance(rng, 9);
    BranchAndBoundOptions opt;
    opt.node_limit = 3;
    const OptimalResult r = branch_and_bound(inst, opt);
    EXPECT_FALSE(r.proven);
    EXPECT_TRUE(r.best_sequence.is_permutation_of(9));
    EXPECT_EQ(oracle::oracle_total(inst, r.best_sequence.order), r.best_value);
}

TEST(BranchAndBound, MatchesBruteForceAtNine) {
    std::mt19937_64 rng(30);
    for (int rep = 0; rep < 30; ++rep) {
        const Instance inst = oracle::random_instance(rng, 9);
        const Time opt = brute_force(inst).best_value;
        EXPECT_EQ(branch_and_bound(inst).best_value, opt) << "instance " << rep;
        BranchAndBoundOptions pruned;
        pruned.dominance_pruning = true;
        const OptimalResult r = branch_and_bound(inst, pruned);
        EXPECT_EQ(r.best_value, opt) << "instance " << rep << " with pruning";
        EXPECT_EQ(oracle::oracle_total(inst, r.best_sequence.order), opt);
    }
}

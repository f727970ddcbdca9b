#include <gtest/gtest.h>

#include <random>

#include "stepsched/exact.hpp"
#include "stepsched/instance_io.hpp"
#include "stepsched/schedule.hpp"
#include "test_support.hpp"

using namespace stepsched;

namespace {

Time total_of(const Instance& inst, std::initializer_list<JobId> ids) {
    return evaluate_schedule(inst, Sequence(ids)).total;
}

}  // namespace

TEST(ProcessingTime, BoundaryIsInclusive) {
    Job j{1, 10, 5, 0, 7};
    EXPECT_EQ(actual_processing_time(j, 7), 10);
    EXPECT_EQ(actual_processing_time(j, 8), 15);
}

TEST(ProcessingTime, Example8Jobs) {
    const Instance inst = example8_instance();
    EXPECT_EQ(actual_processing_time(inst.jobs[7], 302), 108);
    EXPECT_EQ(actual_processing_time(inst.jobs[2], 0), 45);
}

TEST(Evaluate, Example8KnownSequences) {
    const Instance inst = example8_instance();
    EXPECT_EQ(total_of(inst, {3, 2, 4, 1, 5, 7, 8, 6}), 575);
    EXPECT_EQ(total_of(inst, {2, 8, 3, 4, 6, 5, 1, 7}), 1291);
    EXPECT_EQ(total_of(inst, {2, 3, 1, 5, 8, 4, 7, 6}), 696);
}

TEST(Evaluate, PerPositionTardiness) {
    const Instance inst = example8_instance();
    const Sequence seq{3, 2, 4, 1, 5, 7, 8, 6};
    const ScheduleResult r = evaluate_schedule(inst, seq);
    const std::vector<Time> expected{0, 3, 0, 56, 64, 87, 317, 48};
    for (std::size_t pos = 0; pos < seq.size(); ++pos)
        EXPECT_EQ(r.tardiness[static_cast<std::size_t>(seq[pos] - 1)], expected[pos]) << "position " << pos;
    // job 8 is the one that deteriorates at start 302
    EXPECT_EQ(r.starts[7], 302);
    EXPECT_TRUE(r.deteriorated[7]);
    EXPECT_EQ(r.processing[7], 108);
}

TEST(Evaluate, SingleJob) {
    Instance inst{"one", std::nullopt, {Job{1, 5, 3, 100, 0}}};
    EXPECT_EQ(total_of(inst, {1}), 0);
}

TEST(Evaluate, ScheduleIsNoIdle) {
    const Instance inst = example8_instance();
    const ScheduleResult r = evaluate_schedule(inst, Sequence{2, 8, 3, 4, 6, 5, 1, 7});
    Time clock = 0;
    for (JobId id : r.sequence.order) {
        const auto k = static_cast<std::size_t>(id - 1);
        EXPECT_EQ(r.starts[k], clock);
        EXPECT_EQ(r.completions[k], r.starts[k] + r.processing[k]);
        clock = r.completions[k];
    }
}

TEST(Evaluate, MatchesIndependentOracle) {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 1 + rep % 12;
        const Instance inst = oracle::random_instance(rng, n);
        const auto order = oracle::random_order(rng, n);
        Evaluator eval(inst);
        EXPECT_EQ(eval.total(order), oracle::oracle_total(inst, order));
        EXPECT_EQ(evaluate_schedule(inst, Sequence(order)).total, oracle::oracle_total(inst, order));
    }
}

TEST(Evaluate, TotalFromResumesPrefix) {
    const Instance inst = example8_instance();
    Evaluator eval(inst);
    const std::vector<JobId> order{3, 2, 4, 1, 5, 7, 8, 6};
    Time clock = 0, tard = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
        EXPECT_EQ(eval.total_from(order, k, clock, tard), 575);
        const Job& j = eval.job(order[k]);
        clock += actual_processing_time(j, clock);
        tard += std::max<Time>(0, clock - j.d);
    }
    EXPECT_EQ(eval.makespan(order), clock);
}

TEST(Evaluate, RejectsNonPermutation) {
    const Instance inst = example8_instance();
    EXPECT_THROW(evaluate_schedule(inst, Sequence{1, 2, 3}), InvalidSequence);
    EXPECT_THROW(evaluate_schedule(inst, Sequence{1, 1, 2, 3, 4, 5, 6, 7}), InvalidSequence);
    EXPECT_THROW(evaluate_schedule(inst, Sequence{0, 1, 2, 3, 4, 5, 6, 7}), InvalidSequence);
}

TEST(Validate, Example8IsValid) {
    EXPECT_TRUE(validate_instance(example8_instance()).empty());
}

TEST(Validate, DuplicateId) {
    Instance inst = example8_instance();
    inst.jobs[3].id = 3;
    const auto report = validate_instance(inst);
    ASSERT_FALSE(report.empty());
    bool found = false;
    for (const auto& v : report) found = found || v.message == "duplicate id";
    EXPECT_TRUE(found);
    EXPECT_THROW(require_valid(inst), InvalidInstance);
}

TEST(Validate, ZeroBasicTime) {
    Instance inst = example8_instance();
    inst.jobs[0].a = 0;
    const auto report = validate_instance(inst);
    ASSERT_EQ(report.size(), 1u);
    EXPECT_EQ(report[0].field, "a");
    EXPECT_EQ(report[0].job, 1);
}

TEST(Validate, NegativeFieldsAndEmpty) {
    EXPECT_FALSE(validate_instance(Instance{}).empty());
    Instance inst{"x", std::nullopt, {Job{1, 1, -1, -1, -1}}};
    EXPECT_EQ(validate_instance(inst).size(), 3u);
}

TEST(Validate, OverflowGuard) {
    const Time big = std::numeric_limits<Time>::max() / 3;
    Instance inst{"x", std::nullopt, {Job{1, big, 0, 0, 0}, Job{2, big, 0, 0, 0}}};
    EXPECT_FALSE(validate_instance(inst).empty());
    EXPECT_THROW(Evaluator{inst}, InvalidInstance);
}

TEST(Sequence, ParseAndFormat) {
    EXPECT_EQ(parse_sequence("3, 2,4 ,1"), (Sequence{3, 2, 4, 1}));
    EXPECT_EQ(to_string(Sequence{3, 2, 4, 1}), "3,2,4,1");
    EXPECT_THROW(parse_sequence("1,,2"), InvalidSequence);
    EXPECT_THROW(parse_sequence("1,x"), InvalidSequence);
    EXPECT_EQ(identity_sequence(3), (Sequence{1, 2, 3}));
}

TEST(Dominance, TwoJobViolation) {
    Instance inst{"two", std::nullopt, {Job{1, 1, 0, 1, 100}, Job{2, 2, 0, 2, 100}}};
    const auto v = check_dominance(inst, evaluate_schedule(inst, Sequence{2, 1}));
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].earlier, 2);
    EXPECT_EQ(v[0].later, 1);
    EXPECT_EQ(v[0].rule, DominanceRule::basic_times);
    EXPECT_TRUE(check_dominance(inst, evaluate_schedule(inst, Sequence{1, 2})).empty());
}

TEST(Dominance, SingleJobHasNoPairs) {
    Instance inst{"one", std::nullopt, {Job{1, 5, 3, 100, 0}}};
    EXPECT_TRUE(check_dominance(inst, evaluate_schedule(inst, Sequence{1})).empty());
}

TEST(Dominance, SomeOptimumOfExample8Complies) {
    // All optimal sequences of the 8-job example, found by enumeration.
    const Instance inst = example8_instance();
    const Time best = oracle::oracle_optimum(inst);
    ASSERT_EQ(best, 572);
    std::vector<JobId> order{1, 2, 3, 4, 5, 6, 7, 8};
    bool any = false;
    do {
        if (oracle::oracle_total(inst, order) == best)
            any = any || check_dominance(inst, evaluate_schedule(inst, Sequence(order))).empty();
    } while (std::next_permutation(order.begin(), order.end()));
    EXPECT_TRUE(any);
}

TEST(Dominance, RulesAreNotNecessaryForOptimality) {
    // Three jobs whose unique optimum puts job 1 ahead of job 2 although job 2
    // has smaller basic time and due date and both start before h.
    Instance inst{"counter", std::nullopt,
                  {Job{1, 96, 30, 99, 17}, Job{2, 38, 33, 94, 126}, Job{3, 72, 29, 134, 145}}};
    const OptimalResult r = brute_force(inst);
    EXPECT_EQ(r.best_value, 112);
    EXPECT_EQ(r.best_sequence, (Sequence{1, 2, 3}));
    EXPECT_EQ(r.optimal_set_size, 1u);
    EXPECT_FALSE(check_dominance(inst, evaluate_schedule(inst, r.best_sequence)).empty());
}

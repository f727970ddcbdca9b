#include <gtest/gtest.h>

#include <set>

#include "stepsched/generator.hpp"

using namespace stepsched;

namespace {

Time sum_a(const Instance& inst) {
    Time s = 0;
    for (const Job& j : inst.jobs) s += j.a;
    return s;
}

}  // namespace

TEST(ReferenceMakespan, Examples) {
    const std::vector<Job> one{Job{1, 5, 1, 0, 0}};
    EXPECT_EQ(reference_makespan(one), 5);
    const std::vector<Job> two{Job{1, 2, 1, 0, 0}, Job{2, 4, 1, 0, 0}};
    EXPECT_EQ(reference_makespan(two), 7);
    const std::vector<Job> swapped{Job{1, 4, 1, 0, 0}, Job{2, 2, 1, 0, 0}};
    EXPECT_EQ(reference_makespan(swapped), 7);
    const std::vector<Job> no_b{Job{1, 4, 0, 0, 0}};
    EXPECT_THROW(reference_makespan(no_b), std::invalid_argument);
}

TEST(Generate, SameSeedSameInstance) {
    GenSpec spec{30, 3, 2, 0.5, 99};
    EXPECT_EQ(generate_instance(spec), generate_instance(spec));
    GenSpec other = spec;
    other.seed = 100;
    EXPECT_NE(generate_instance(spec), generate_instance(other));
    EXPECT_EQ(generate_instance(spec).name, "S_32_n30_seed99");
}

TEST(Generate, BasicTimesAreUniform) {
    double total = 0;
    std::size_t count = 0;
    Time lo = 1000, hi = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        for (const Job& j : generate_instance(GenSpec{100, 3, 2, 0.5, seed}).jobs) {
            total += static_cast<double>(j.a);
            lo = std::min(lo, j.a);
            hi = std::max(hi, j.a);
            ++count;
        }
    }
    ASSERT_EQ(count, 10000u);
    EXPECT_NEAR(total / static_cast<double>(count), 50.5, 1.0);
    EXPECT_GE(lo, 1);
    EXPECT_LE(hi, 100);
}

TEST(Generate, ClassIntervals) {
    for (auto [hc, dc] : all_groups()) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const Instance inst = generate_instance(GenSpec{50, hc, dc, 0.5, seed});
            const Time A = sum_a(inst);
            const Time cref = reference_makespan(inst.jobs);
            EXPECT_GE(cref, A);
            for (const Job& j : inst.jobs) {
                EXPECT_GE(j.b, 1);
                EXPECT_LE(j.b, 50);
                EXPECT_GE(j.h, hc == 2 ? (A + 1) / 2 : 1);
                EXPECT_LE(j.h, hc == 1 ? A / 2 : A);
                EXPECT_GE(j.d, 1);
                EXPECT_LE(j.d, dc == 1 ? cref / 2 : cref);
            }
        }
    }
}

TEST(Generate, TauScalesPenalty) {
    for (const Job& j : generate_instance(GenSpec{200, 1, 1, 0.1, 3}).jobs) EXPECT_LE(j.b, 10);
}

TEST(Generate, BadSpecs) {
    EXPECT_THROW(generate_instance(GenSpec{0, 1, 1, 0.5, 0}), std::invalid_argument);
    EXPECT_THROW(generate_instance(GenSpec{5, 4, 1, 0.5, 0}), std::invalid_argument);
    EXPECT_THROW(generate_instance(GenSpec{5, 1, 3, 0.5, 0}), std::invalid_argument);
    EXPECT_THROW(generate_instance(GenSpec{5, 1, 1, 0.0, 0}), std::invalid_argument);
    // tau too small leaves no admissible penalty
    EXPECT_THROW(generate_instance(GenSpec{5, 1, 1, 0.001, 0}), std::invalid_argument);
}

TEST(Suite, SmallAndLarge) {
    const auto small = generate_suite(small_sizes, 1);
    EXPECT_EQ(small.size(), 30u);
    const auto large = generate_suite(large_sizes, 1);
    EXPECT_EQ(large.size(), 36u);
    std::set<std::string> labels;
    for (std::size_t k = 0; k < 6; ++k) labels.insert(small[k].name.substr(0, 4));
    EXPECT_EQ(labels, (std::set<std::string>{"S_11", "S_12", "S_21", "S_22", "S_31", "S_32"}));
    EXPECT_EQ(small[0].size(), 8u);
    EXPECT_EQ(small[29].size(), 25u);
    EXPECT_EQ(generate_suite(small_sizes, 1), small);
}

TEST(Suite, EmptySizes) {
    EXPECT_THROW(generate_suite({}, 1), std::invalid_argument);
}

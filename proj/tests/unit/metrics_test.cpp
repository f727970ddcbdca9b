#include <gtest/gtest.h>

#include <vector>

#include "stepsched/metrics.hpp"

using namespace stepsched;

TEST(Rpd, Examples) {
    EXPECT_EQ(format_percent(rpd(680, 638)), "6.58");
    EXPECT_EQ(rpd(42, 42), 0.0);
    EXPECT_EQ(rpd(0, 0), 0.0);
    EXPECT_FALSE(rpd(5, 0).has_value());
    EXPECT_EQ(format_percent(rpd(5, 0)), "inf");
}

TEST(Mad, Examples) {
    const std::vector<double> pair{90, 110};
    EXPECT_EQ(format_percent(mad(pair)), "10.00");
    const std::vector<double> flat{7, 7, 7};
    EXPECT_EQ(mad(flat), 0.0);
    const std::vector<double> zeros{0, 0};
    EXPECT_EQ(mad(zeros), 0.0);
    const std::vector<double> single{123};
    EXPECT_EQ(mad(single), 0.0);
    const std::vector<double> empty;
    EXPECT_THROW(mad(empty), std::invalid_argument);
}

TEST(Format, TwoDecimals) {
    EXPECT_EQ(format_fixed2(0.0), "0.00");
    EXPECT_EQ(format_fixed2(-0.001), "0.00");
    EXPECT_EQ(format_fixed2(0.125), "0.13");
    EXPECT_EQ(format_fixed2(-2.5), "-2.50");
    EXPECT_EQ(format_fixed2(575), "575.00");
}

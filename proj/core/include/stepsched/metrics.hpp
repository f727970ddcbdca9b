#pragma once

#include <optional>
#include <span>
#include <string>

#include "stepsched/schedule.hpp"

namespace stepsched {

/// Relative percentage deviation 100 (alg - best) / best. Zero when both are
/// zero; nullopt (undefined) when best is zero and alg is not.
std::optional<double> rpd(double z_alg, double z_best);

/// Mean absolute deviation over replications, as a percentage of the mean:
/// 100 / (R mean) * sum_r |v_r - mean|. Zero for a single value or equal
/// values; nullopt when the mean is zero but the values differ.
std::optional<double> mad(std::span<const double> values);

double mean(std::span<const double> values);

/// Two decimals, or "inf" for an undefined percentage.
std::string format_percent(const std::optional<double>& value);
std::string format_fixed2(double value);

}  // namespace stepsched

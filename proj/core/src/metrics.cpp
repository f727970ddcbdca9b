#include "stepsched/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace stepsched {

std::optional<double> rpd(double z_alg, double z_best) {
    if (z_best == 0.0) {
        if (z_alg == 0.0) return 0.0;
        return std::nullopt;
    }
    return 100.0 * (z_alg - z_best) / z_best;
}

double mean(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("mean of an empty list");
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

std::optional<double> mad(std::span<const double> values) {
    const double m = mean(values);
    double spread = 0.0;
    for (double v : values) spread += std::fabs(v - m);
    if (spread == 0.0) return 0.0;
    if (m == 0.0) return std::nullopt;
    return 100.0 * spread / (static_cast<double>(values.size()) * m);
}

std::string format_fixed2(double value) {
    // Round half away from zero on the decimal value, then print; avoids
    // "-0.00" and platform differences in printf rounding of ties.
    double r = std::round(value * 100.0) / 100.0;
    if (r == 0.0) r = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", r);
    return buf;
}

std::string format_percent(const std::optional<double>& value) {
    return value ? format_fixed2(*value) : std::string("inf");
}

}  // namespace stepsched

#pragma once

// Test-only helpers: an independent schedule evaluator, exhaustive move
// re-scans and a small random instance factory. Nothing here calls the
// library's evaluation code, so it can serve as an oracle for it.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "stepsched/schedule.hpp"

namespace stepsched::oracle {

/// Straightforward evaluation by id lookup in a map.
inline Time oracle_total(const Instance& inst, const std::vector<JobId>& order) {
    std::map<JobId, Job> by_id;
    for (const Job& j : inst.jobs) by_id[j.id] = j;
    Time t = 0, total = 0;
    for (JobId id : order) {
        const Job& j = by_id.at(id);
        const Time p = (t <= j.h) ? j.a : j.a + j.b;
        t = t + p;
        if (t - j.d > 0) total += t - j.d;
    }
    return total;
}

/// Minimum over all permutations via std::next_permutation.
inline Time oracle_optimum(const Instance& inst) {
    std::vector<JobId> order;
    for (std::size_t k = 1; k <= inst.size(); ++k) order.push_back(static_cast<JobId>(k));
    Time best = oracle_total(inst, order);
    while (std::next_permutation(order.begin(), order.end())) best = std::min(best, oracle_total(inst, order));
    return best;
}

/// Random instance with a in 1..100, b in 1..50, h and d spread over the total work.
inline Instance random_instance(std::mt19937_64& rng, std::size_t n) {
    auto uni = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    Instance inst;
    inst.name = "random";
    Time work = 0;
    for (std::size_t k = 0; k < n; ++k) {
        Job j;
        j.id = static_cast<JobId>(k + 1);
        j.a = uni(1, 100);
        j.b = uni(1, 50);
        work += j.a;
        inst.jobs.push_back(j);
    }
    for (Job& j : inst.jobs) {
        j.h = uni(0, work);
        j.d = uni(0, work);
    }
    return inst;
}

inline std::vector<JobId> random_order(std::mt19937_64& rng, std::size_t n) {
    std::vector<JobId> order;
    for (std::size_t k = 1; k <= n; ++k) order.push_back(static_cast<JobId>(k));
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

inline bool is_permutation(const std::vector<JobId>& order, std::size_t n) {
    std::vector<JobId> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k)
        if (sorted[k] != static_cast<JobId>(k + 1)) return false;
    return sorted.size() == n;
}

}  // namespace stepsched::oracle

#include "stepsched/neighborhoods.hpp"

namespace stepsched::oracle {

/// Every neighbor of `order` under operator `kind`, built by explicit
/// erase/insert rather than through the library's move application.
inline std::vector<std::vector<JobId>> oracle_neighbors(const std::vector<JobId>& order, Neighborhood kind) {
    const std::size_t n = order.size();
    std::vector<std::vector<JobId>> out;
    auto pos = [](std::size_t p) { return static_cast<std::ptrdiff_t>(p); };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<JobId> s = order;
            switch (kind) {
                case Neighborhood::swap:
                    if (j <= i) continue;
                    std::swap(s[i], s[j]);
                    break;
                case Neighborhood::insertion: {
                    if (i == j) continue;
                    const JobId x = s[i];
                    s.erase(s.begin() + pos(i));
                    s.insert(s.begin() + pos(j), x);
                    break;
                }
                case Neighborhood::block_exchange:
                    if (j < i + 2 || j + 1 >= n) continue;
                    std::swap(s[i], s[j]);
                    std::swap(s[i + 1], s[j + 1]);
                    break;
                case Neighborhood::couple_insertion: {
                    if (i == j || i + 1 >= n || j + 1 >= n) continue;
                    const JobId x = s[i], y = s[i + 1];
                    s.erase(s.begin() + pos(i), s.begin() + pos(i + 2));
                    s.insert(s.begin() + pos(j), {x, y});
                    break;
                }
                case Neighborhood::two_opt:
                    if (j < i + 3) continue;
                    std::reverse(s.begin() + pos(i + 1), s.begin() + pos(j + 1));
                    break;
            }
            out.push_back(std::move(s));
        }
    }
    return out;
}

/// True when no single move of `kind` strictly lowers the total.
inline bool is_local_optimum(const Instance& inst, const std::vector<JobId>& order, Neighborhood kind) {
    const Time here = oracle_total(inst, order);
    for (const auto& nb : oracle_neighbors(order, kind))
        if (oracle_total(inst, nb) < here) return false;
    return true;
}

}  // namespace stepsched::oracle

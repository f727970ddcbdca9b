#include "stepsched/swsp.hpp"

#include <chrono>
#include <limits>
#include <stdexcept>

namespace stepsched {

void SwspParams::validate() const {
    if (w1_min > w1_max) throw std::invalid_argument("w1_min must not exceed w1_max");
    if (w2_min > w2_max) throw std::invalid_argument("w2_min must not exceed w2_max");
    if (!(w3_fallback > 0.0)) throw std::invalid_argument("w3_fallback must be positive");
}

std::vector<WeightTriple> weight_grid(std::size_t n, const SwspParams& params) {
    if (n < 2) throw std::invalid_argument("weight grid needs n >= 2");
    params.validate();
    // 1 - w1 - w2 can land a rounding error away from zero; treat that as zero.
    constexpr double zero_tol = 1e-9;
    const double steps = static_cast<double>(n - 1);
    std::vector<WeightTriple> grid;
    grid.reserve(n * n);
    for (std::size_t l1 = 1; l1 <= n; ++l1) {
        const double w1 = params.w1_min + (params.w1_max - params.w1_min) * static_cast<double>(l1 - 1) / steps;
        for (std::size_t l2 = 1; l2 <= n; ++l2) {
            const double w2 = params.w2_min + (params.w2_max - params.w2_min) * static_cast<double>(l2 - 1) / steps;
            double w3 = 1.0 - w1 - w2;
            if (w3 < -zero_tol) w3 = params.w3_fallback;
            else if (w3 < zero_tol) w3 = 0.0;
            grid.push_back({w1, w2, w3});
        }
    }
    return grid;
}

Sequence greedy_construct(const Evaluator& eval, const WeightTriple& w) {
    const std::size_t n = eval.size();
    std::vector<JobId> pending;
    pending.reserve(n);
    for (std::size_t k = 0; k < n; ++k) pending.push_back(static_cast<JobId>(k + 1));

    Sequence seq;
    seq.order.reserve(n);
    auto take = [&](std::size_t pos) {
        seq.order.push_back(pending[pos]);
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pos));
    };

    std::size_t first = 0;
    for (std::size_t k = 1; k < pending.size(); ++k)
        if (eval.job(pending[k]).d < eval.job(pending[first]).d) first = k;
    take(first);

    // static key: it never looks at the clock
    while (!pending.empty()) {
        std::size_t pick = 0;
        double pick_m = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < pending.size(); ++k) {
            const Job& j = eval.job(pending[k]);
            const double m = w.w1 * static_cast<double>(j.d) + w.w2 * static_cast<double>(j.a) +
                             w.w3 * static_cast<double>(j.h);
            if (m < pick_m) {
                pick_m = m;
                pick = k;
            }
        }
        take(pick);
    }
    return seq;
}

Sequence greedy_construct(const Instance& instance, const WeightTriple& triple) {
    return greedy_construct(Evaluator(instance), triple);
}

Sequence pairwise_swap_pass(const Evaluator& eval, const Sequence& seq) {
    const std::size_t n = seq.size();
    std::vector<JobId> best = seq.order;
    Time best_value = eval.total(best);
    std::vector<JobId> trial = best;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            std::swap(trial[i], trial[j]);
            const Time value = eval.total(trial);
            if (value < best_value) {
                best_value = value;
                best = trial;
            } else {
                std::swap(trial[i], trial[j]);
            }
        }
    }
    return Sequence(std::move(best));
}

Sequence pairwise_swap_pass(const Instance& instance, const Sequence& seq) {
    const Evaluator eval(instance);
    eval.check(seq);
    return pairwise_swap_pass(eval, seq);
}

SwspResult swsp(const Instance& instance, const SwspParams& params) {
    const auto started = std::chrono::steady_clock::now();
    const Evaluator eval(instance);
    params.validate();
    const std::size_t n = eval.size();

    SwspResult result;
    if (n == 1) {
        result.constructive_best = identity_sequence(1);
    } else {
        Time best = std::numeric_limits<Time>::max();
        for (const WeightTriple& w : weight_grid(n, params)) {
            Sequence seq = greedy_construct(eval, w);
            const Time value = eval.total(seq.order);
            if (value < best) {
                best = value;
                result.constructive_best = std::move(seq);
                result.best_triple = w;
            }
        }
    }
    result.constructive_value = eval.total(result.constructive_best.order);

    Sequence final_seq = pairwise_swap_pass(eval, result.constructive_best);
    if (params.swap_until_fixpoint) {
        for (;;) {
            Sequence next = pairwise_swap_pass(eval, final_seq);
            if (eval.total(next.order) >= eval.total(final_seq.order)) break;
            final_seq = std::move(next);
        }
    }
    result.run.best_value = eval.total(final_seq.order);
    result.run.best_sequence = std::move(final_seq);
    result.run.iterations = 1;
    result.run.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

}  // namespace stepsched

#include "stepsched/metaheuristics.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace stepsched {

namespace {

// Substream tags; each kind of random decision gets its own stream.
constexpr std::uint64_t shake_stream = 1;
constexpr std::uint64_t order_stream = 2;
constexpr std::uint64_t perturb_stream = 3;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

void SearchParams::validate() const {
    if (iter_max == 0) throw std::invalid_argument("iter_max must be positive");
    if (iter_nip == 0 || iter_nip > iter_max) throw std::invalid_argument("iter_nip must lie in 1..iter_max");
    if (gamma == 0 || gamma > iter_nip) throw std::invalid_argument("gamma must lie in 1..iter_nip");
}

Sequence edd_sequence(const Instance& instance) {
    const Evaluator eval(instance);
    Sequence seq = identity_sequence(eval.size());
    std::stable_sort(seq.order.begin(), seq.order.end(),
                     [&](JobId x, JobId y) { return eval.job(x).d < eval.job(y).d; });
    return seq;
}

Sequence vnd(const Evaluator& eval, const Sequence& seq, const NeighborhoodOrder& order, VndPolicy policy) {
    NeighborhoodOrder sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != all_neighborhoods) throw std::invalid_argument("neighborhood order must be a permutation of 1..5");

    Sequence current = seq;
    Time value = eval.total(current.order);
    std::size_t i = 0;
    while (i < order.size()) {
        Sequence candidate = descend(eval, current, order[i]);
        const Time candidate_value = eval.total(candidate.order);
        if (candidate_value < value) {
            current = std::move(candidate);
            value = candidate_value;
            if (policy == VndPolicy::restart_first) i = 0;
        } else {
            ++i;
        }
    }
    return current;
}

Sequence vnd(const Instance& instance, const Sequence& seq, const NeighborhoodOrder& order, VndPolicy policy) {
    const Evaluator eval(instance);
    eval.check(seq);
    return vnd(eval, seq, order, policy);
}

NeighborhoodOrder random_order(RandomStream& rng) {
    NeighborhoodOrder order = all_neighborhoods;
    rng.shuffle(std::span<Neighborhood>(order));
    return order;
}

RunResult gvns(const Instance& instance, const SearchParams& params) {
    const auto started = std::chrono::steady_clock::now();
    params.validate();
    const Evaluator eval(instance);
    const RandomStream root(params.seed);
    RandomStream shake_rng = root.substream(shake_stream);
    RandomStream order_rng = root.substream(order_stream);
    RandomStream perturb_rng = root.substream(perturb_stream);

    RunResult result;
    result.seed = params.seed;

    // `current` is the search point (replaced by a restart); `best` is the
    // best order ever seen and is what the run reports.
    Sequence current = edd_sequence(instance);
    Time current_value = eval.total(current.order);
    result.best_sequence = current;
    result.best_value = current_value;

    std::uint64_t iter1 = 0, iter2 = 0, iter3 = 0;
    Neighborhood k = Neighborhood::swap;
    do {
        Sequence candidate = shake(current, k, shake_rng);
        candidate = vnd(eval, candidate, random_order(order_rng));
        const Time candidate_value = eval.total(candidate.order);
        if (candidate_value < current_value) {
            current = std::move(candidate);
            current_value = candidate_value;
            iter2 = 0;
            iter3 = 0;
            if (current_value < result.best_value) {
                result.best_sequence = current;
                result.best_value = current_value;
            }
        } else {
            ++iter2;
            ++iter3;
        }
        ++iter1;
        if (iter3 > params.gamma && iter2 < params.iter_nip) {
            current = perturb_three_opt(current, perturb_rng);
            current_value = eval.total(current.order);
            iter3 = 0;
            if (current.size() >= 4) ++result.perturbations;
        }
        if (params.record_trace) result.trace.push_back(result.best_value);
        k = next_neighborhood(k);
    } while (iter1 <= params.iter_max && iter2 <= params.iter_nip);

    result.iterations = iter1;
    result.elapsed_seconds = seconds_since(started);
    return result;
}

RunResult vns(const Instance& instance, const SearchParams& params) {
    const auto started = std::chrono::steady_clock::now();
    params.validate();
    const Evaluator eval(instance);
    RandomStream shake_rng = RandomStream(params.seed).substream(shake_stream);

    RunResult result;
    result.seed = params.seed;
    Sequence current = edd_sequence(instance);
    Time current_value = eval.total(current.order);

    std::uint64_t iter1 = 0, iter2 = 0;
    Neighborhood k = Neighborhood::swap;
    do {
        Sequence candidate = descend(eval, shake(current, k, shake_rng), k);
        const Time candidate_value = eval.total(candidate.order);
        if (candidate_value < current_value) {
            current = std::move(candidate);
            current_value = candidate_value;
            iter2 = 0;
        } else {
            k = next_neighborhood(k);
            ++iter2;
        }
        ++iter1;
        if (params.record_trace) result.trace.push_back(current_value);
    } while (iter1 <= params.iter_max && iter2 <= params.iter_nip);

    result.best_sequence = std::move(current);
    result.best_value = current_value;
    result.iterations = iter1;
    result.elapsed_seconds = seconds_since(started);
    return result;
}

}  // namespace stepsched

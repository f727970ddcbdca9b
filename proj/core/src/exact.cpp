#include "stepsched/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace stepsched {

OptimalResult brute_force(const Instance& instance, std::size_t n_cap) {
    const Evaluator eval(instance);
    const std::size_t n = eval.size();
    if (n > n_cap) {
        throw SizeLimitExceeded("brute force is capped at n = " + std::to_string(n_cap) + " (instance has n = " +
                                std::to_string(n) + ")");
    }
    std::vector<JobId> order = identity_sequence(n).order;
    OptimalResult result;
    result.best_value = std::numeric_limits<Time>::max();
    do {
        const Time value = eval.total(order);
        if (value < result.best_value) {
            result.best_value = value;
            result.best_sequence.order = order;
            result.optimal_set_size = 1;
        } else if (value == result.best_value) {
            ++result.optimal_set_size;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return result;
}

Time prefix_lower_bound(const Instance& instance, std::span<const JobId> prefix) {
    const Evaluator eval(instance);
    std::vector<bool> seen(eval.size(), false);
    for (JobId id : prefix) {
        if (id < 1 || static_cast<std::size_t>(id) > eval.size() || seen[static_cast<std::size_t>(id - 1)])
            throw InvalidSequence("prefix must hold distinct job ids in 1.." + std::to_string(eval.size()));
        seen[static_cast<std::size_t>(id - 1)] = true;
    }
    return eval.total(prefix);
}

namespace {

class Search {
public:
    Search(const Evaluator& eval, const BranchAndBoundOptions& options) : eval_(eval), options_(options) {
        const std::size_t n = eval.size();
        edd_.resize(n);
        std::iota(edd_.begin(), edd_.end(), JobId{1});
        std::stable_sort(edd_.begin(), edd_.end(), [&](JobId x, JobId y) { return eval.job(x).d < eval.job(y).d; });
        used_.assign(n, false);
        prefix_.reserve(n);
        starts_.reserve(n);

        // EDD gives the first incumbent.
        best_.best_sequence.order = edd_;
        best_.best_value = eval.total(edd_);
    }

    OptimalResult run() {
        descend(0, 0);
        return best_;
    }

private:
    // Returns false once the node limit is hit.
    bool descend(Time clock, Time tardiness) {
        const std::size_t n = eval_.size();
        if (prefix_.size() == n) {
            if (tardiness < best_.best_value) {
                best_.best_value = tardiness;
                best_.best_sequence.order = prefix_;
            }
            return true;
        }
        for (JobId id : edd_) {
            const auto k = static_cast<std::size_t>(id - 1);
            if (used_[k]) continue;
            if (best_.nodes_explored >= options_.node_limit) {
                best_.proven = false;
                return false;
            }
            ++best_.nodes_explored;
            if (options_.dominance_pruning && dominated_append(id, clock)) continue;

            const Job& job = eval_.job(id);
            const Time finish = clock + actual_processing_time(job, clock);
            const Time prefix_tardiness = tardiness + std::max<Time>(0, finish - job.d);
            used_[k] = true;
            const Time bound = prefix_tardiness + pending_bound(finish);
            if (bound >= best_.best_value) {
                used_[k] = false;
                continue;
            }

            prefix_.push_back(id);
            starts_.push_back(clock);
            const bool ok = descend(finish, prefix_tardiness);
            starts_.pop_back();
            prefix_.pop_back();
            used_[k] = false;
            if (!ok) return false;
        }
        return true;
    }

    // Each unscheduled job finishes no earlier than clock + a_j.
    Time pending_bound(Time clock) const {
        Time sum = 0;
        for (const Job& j : eval_.jobs())
            if (!used_[static_cast<std::size_t>(j.id - 1)]) sum += std::max<Time>(0, clock + j.a - j.d);
        return sum;
    }

    // True when appending `next` right after the last prefix job is beaten by
    // the adjacent interchange: the pair's status (on time / deteriorated)
    // is the same in both orders and `next` dominates the last job.
    bool dominated_append(JobId next, Time clock) const {
        if (prefix_.empty()) return false;
        const Job& k = eval_.job(prefix_.back());
        const Job& j = eval_.job(next);
        const Time s = starts_.back();
        const bool k_late = s > k.h;
        const bool j_late = clock > j.h;
        if (k_late != j_late) return false;
        // Swapped: j starts at s, k after j.
        const bool j_late_swapped = s > j.h;
        const Time k_start_swapped = s + actual_processing_time(j, s);
        const bool k_late_swapped = k_start_swapped > k.h;
        if (j_late_swapped != j_late || k_late_swapped != k_late) return false;
        const Time pj = j_late ? j.a + j.b : j.a;
        const Time pk = k_late ? k.a + k.b : k.a;
        return pj <= pk && j.d <= k.d && (pj != pk || j.d != k.d);
    }

    const Evaluator& eval_;
    const BranchAndBoundOptions& options_;
    std::vector<JobId> edd_;
    std::vector<bool> used_;
    std::vector<JobId> prefix_;
    std::vector<Time> starts_;
    OptimalResult best_;
};

}  // namespace

OptimalResult branch_and_bound(const Instance& instance, const BranchAndBoundOptions& options) {
    const Evaluator eval(instance);
    Search search(eval, options);
    return search.run();
}

}  // namespace stepsched

#include "stepsched/schedule.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace stepsched {

bool Sequence::is_permutation_of(std::size_t n) const {
    if (order.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (JobId id : order) {
        if (id < 1 || static_cast<std::size_t>(id) > n) return false;
        const auto k = static_cast<std::size_t>(id - 1);
        if (seen[k]) return false;
        seen[k] = true;
    }
    return true;
}

Sequence identity_sequence(std::size_t n) {
    Sequence seq;
    seq.order.resize(n);
    for (std::size_t i = 0; i < n; ++i) seq.order[i] = static_cast<JobId>(i + 1);
    return seq;
}

std::string to_string(const Sequence& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(seq[i]);
    }
    return out;
}

Sequence parse_sequence(const std::string& text) {
    Sequence seq;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        auto first = token.find_first_not_of(" \t\r\n");
        auto last = token.find_last_not_of(" \t\r\n");
        if (first == std::string::npos) throw InvalidSequence("empty entry in sequence '" + text + "'");
        token = token.substr(first, last - first + 1);
        JobId id = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw InvalidSequence("not a job id: '" + token + "'");
        seq.order.push_back(id);
    }
    return seq;
}

ValidationReport validate_instance(const Instance& instance) {
    ValidationReport report;
    const std::size_t n = instance.size();
    if (n == 0) {
        report.push_back({0, "jobs", "instance must contain at least one job"});
        return report;
    }
    std::vector<int> count(n, 0);
    for (const Job& job : instance.jobs) {
        if (job.id < 1 || static_cast<std::size_t>(job.id) > n) {
            report.push_back({job.id, "id", "id must lie in 1.." + std::to_string(n)});
        } else if (++count[static_cast<std::size_t>(job.id - 1)] == 2) {
            report.push_back({job.id, "id", "duplicate id"});
        }
        if (job.a < 1) report.push_back({job.id, "a", "a must be >= 1"});
        if (job.b < 0) report.push_back({job.id, "b", "b must be >= 0"});
        if (job.d < 0) report.push_back({job.id, "d", "d must be >= 0"});
        if (job.h < 0) report.push_back({job.id, "h", "h must be >= 0"});
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (count[k] == 0) report.push_back({static_cast<JobId>(k + 1), "id", "missing id"});
    }

    // n * sum(a + b) bounds every completion time and the total tardiness.
    constexpr Time max_time = std::numeric_limits<Time>::max();
    Time work = 0;
    bool overflow = false;
    for (const Job& job : instance.jobs) {
        if (job.a < 0 || job.b < 0) continue;
        if (job.a > max_time - work || job.b > max_time - work - job.a) {
            overflow = true;
            break;
        }
        work += job.a + job.b;
    }
    if (overflow || work > max_time / static_cast<Time>(n)) {
        report.push_back({0, "jobs", "n * sum(a + b) must be below 2^63"});
    }
    return report;
}

std::string describe(const ValidationReport& report) {
    std::string out;
    for (const auto& v : report) {
        if (!out.empty()) out += "; ";
        if (v.job != 0) out += "job " + std::to_string(v.job) + ": ";
        out += v.message;
    }
    return out;
}

void require_valid(const Instance& instance) {
    auto report = validate_instance(instance);
    if (!report.empty()) throw InvalidInstance("invalid instance: " + describe(report));
}

Evaluator::Evaluator(const Instance& instance) {
    require_valid(instance);
    jobs_.resize(instance.size());
    for (const Job& job : instance.jobs) jobs_[static_cast<std::size_t>(job.id - 1)] = job;
}

Time Evaluator::total(std::span<const JobId> order) const noexcept {
    return total_from(order, 0, 0, 0);
}

Time Evaluator::total_from(std::span<const JobId> order, std::size_t first, Time clock,
                           Time tardiness) const noexcept {
    for (std::size_t k = first; k < order.size(); ++k) {
        const Job& j = jobs_[static_cast<std::size_t>(order[k] - 1)];
        clock += actual_processing_time(j, clock);
        if (clock > j.d) tardiness += clock - j.d;
    }
    return tardiness;
}

Time Evaluator::makespan(std::span<const JobId> order) const noexcept {
    Time clock = 0;
    for (JobId id : order) clock += actual_processing_time(job(id), clock);
    return clock;
}

void Evaluator::check(const Sequence& seq) const {
    if (!seq.is_permutation_of(size())) {
        throw InvalidSequence("sequence [" + to_string(seq) + "] is not a permutation of 1.." +
                              std::to_string(size()));
    }
}

ScheduleResult Evaluator::schedule(const Sequence& seq) const {
    check(seq);
    const std::size_t n = size();
    ScheduleResult r;
    r.sequence = seq;
    r.starts.assign(n, 0);
    r.processing.assign(n, 0);
    r.completions.assign(n, 0);
    r.tardiness.assign(n, 0);
    r.deteriorated.assign(n, false);
    Time clock = 0;
    for (JobId id : seq.order) {
        const Job& j = job(id);
        auto k = static_cast<std::size_t>(id - 1);
        r.starts[k] = clock;
        r.deteriorated[k] = clock > j.h;
        r.processing[k] = actual_processing_time(j, clock);
        clock += r.processing[k];
        r.completions[k] = clock;
        r.tardiness[k] = std::max<Time>(0, clock - j.d);
        r.total += r.tardiness[k];
    }
    return r;
}

ScheduleResult evaluate_schedule(const Instance& instance, const Sequence& seq) {
    return Evaluator(instance).schedule(seq);
}

std::vector<DominanceViolation> check_dominance(const Instance& instance,
                                                const ScheduleResult& schedule) {
    Evaluator eval(instance);
    eval.check(schedule.sequence);
    std::vector<DominanceViolation> out;
    const auto& order = schedule.sequence.order;
    auto late = [&](JobId id) { return schedule.starts[static_cast<std::size_t>(id - 1)] > eval.job(id).h; };
    for (std::size_t x = 0; x < order.size(); ++x) {
        for (std::size_t y = x + 1; y < order.size(); ++y) {
            const Job& k = eval.job(order[x]);
            const Job& j = eval.job(order[y]);
            const bool k_late = late(k.id);
            const bool j_late = late(j.id);
            if (!k_late && !j_late) {
                if (j.a <= k.a && j.d <= k.d && (j.a != k.a || j.d != k.d))
                    out.push_back({k.id, j.id, DominanceRule::basic_times});
            } else if (k_late && j_late) {
                const Time pj = j.a + j.b;
                const Time pk = k.a + k.b;
                if (pj <= pk && j.d <= k.d && (pj != pk || j.d != k.d))
                    out.push_back({k.id, j.id, DominanceRule::deteriorated_times});
            }
        }
    }
    return out;
}

}  // namespace stepsched

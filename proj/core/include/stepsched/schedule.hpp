#pragma once

// Core domain types for single-machine scheduling with step-deteriorating
// jobs, and the no-idle schedule evaluator everything else is built on.
//
// A job j has a basic processing time a_j, a penalty b_j, a due date d_j and
// a deteriorating date h_j. Started at time s, it takes a_j if s <= h_j and
// a_j + b_j otherwise. The objective is the total tardiness
// sum_j max(0, C_j - d_j) of a permutation processed back to back from 0.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace stepsched {

using Time = std::int64_t;
using JobId = std::int32_t;  // 1-based

struct Job {
    JobId id = 0;
    Time a = 1;  // basic processing time
    Time b = 0;  // deterioration penalty
    Time d = 0;  // due date
    Time h = 0;  // deteriorating date

    friend bool operator==(const Job&, const Job&) = default;
};

struct Instance {
    std::string name;
    std::optional<std::uint64_t> seed;
    std::vector<Job> jobs;

    std::size_t size() const noexcept { return jobs.size(); }
    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Processing order as a list of job ids. Valid when it is a permutation of
/// {1..n} for the instance it is used with.
struct Sequence {
    std::vector<JobId> order;

    Sequence() = default;
    explicit Sequence(std::vector<JobId> ids) : order(std::move(ids)) {}
    Sequence(std::initializer_list<JobId> ids) : order(ids) {}

    std::size_t size() const noexcept { return order.size(); }
    JobId operator[](std::size_t pos) const { return order[pos]; }
    bool is_permutation_of(std::size_t n) const;

    friend bool operator==(const Sequence&, const Sequence&) = default;
    friend auto operator<=>(const Sequence&, const Sequence&) = default;
};

/// Identity sequence [1, 2, ..., n].
Sequence identity_sequence(std::size_t n);

std::string to_string(const Sequence& seq);

/// Parses "3,2,4,1" (whitespace tolerated). Throws std::invalid_argument.
Sequence parse_sequence(const std::string& text);

/// Per-job vectors are indexed by job id - 1.
struct ScheduleResult {
    Sequence sequence;
    std::vector<Time> starts;
    std::vector<Time> processing;
    std::vector<Time> completions;
    std::vector<Time> tardiness;
    std::vector<bool> deteriorated;  // start > h
    Time total = 0;
};

class InvalidInstance : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidSequence : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Violation {
    JobId job = 0;       // 0 when the violation concerns the whole instance
    std::string field;
    std::string message;
};

using ValidationReport = std::vector<Violation>;

/// Empty report iff the instance is well formed: n >= 1, ids exactly {1..n},
/// a >= 1, b, d, h >= 0, and n * sum(a + b) fits in a signed 64-bit integer.
ValidationReport validate_instance(const Instance& instance);

/// Throws InvalidInstance listing every violation.
void require_valid(const Instance& instance);

std::string describe(const ValidationReport& report);

constexpr Time actual_processing_time(const Job& job, Time start) noexcept {
    return start <= job.h ? job.a : job.a + job.b;
}

/// Dense, validated view of an instance for hot loops. Jobs are stored by id
/// so lookups are O(1) regardless of the order in Instance::jobs.
class Evaluator {
public:
    explicit Evaluator(const Instance& instance);

    std::size_t size() const noexcept { return jobs_.size(); }
    const Job& job(JobId id) const { return jobs_[static_cast<std::size_t>(id - 1)]; }
    std::span<const Job> jobs() const noexcept { return jobs_; }

    /// Total tardiness of a full or partial order. Unchecked.
    Time total(std::span<const JobId> order) const noexcept;

    /// Continues a no-idle schedule from `clock` with accumulated tardiness
    /// `tardiness` over order[first..]. Unchecked.
    Time total_from(std::span<const JobId> order, std::size_t first, Time clock,
                    Time tardiness) const noexcept;

    /// Completion time of the last job in `order`.
    Time makespan(std::span<const JobId> order) const noexcept;

    ScheduleResult schedule(const Sequence& seq) const;

    /// Throws InvalidSequence unless seq is a permutation of {1..n}.
    void check(const Sequence& seq) const;

private:
    std::vector<Job> jobs_;
};

/// Checked evaluation: validates the instance and the permutation.
ScheduleResult evaluate_schedule(const Instance& instance, const Sequence& seq);

enum class DominanceRule { basic_times = 1, deteriorated_times = 2 };

/// Pair (earlier, later) where `later` dominates `earlier` but is sequenced
/// after it.
struct DominanceViolation {
    JobId earlier = 0;
    JobId later = 0;
    DominanceRule rule = DominanceRule::basic_times;

    friend bool operator==(const DominanceViolation&, const DominanceViolation&) = default;
};

/// Pairs that contradict the pairwise dominance rules: both jobs on time
/// relative to h with a_j <= a_k and d_j <= d_k, or both deteriorated with
/// a_j + b_j <= a_k + b_k and d_j <= d_k. Ties on both keys are skipped.
std::vector<DominanceViolation> check_dominance(const Instance& instance,
                                                const ScheduleResult& schedule);

}  // namespace stepsched

#pragma once

// Random benchmark instances.
//
//   a_j  uniform on {1..100}
//   A    = sum_j a_j
//   h_j  class 1: {1..floor(A/2)}   class 2: {ceil(A/2)..A}   class 3: {1..A}
//   b_j  uniform on {1..floor(100 tau)}
//   d_j  class 1: {1..floor(Cref/2)}   class 2: {1..Cref}
//
// Cref is the no-idle makespan with jobs in non-decreasing a_j / b_j order.
// Groups are labelled S_<h_class><d_class>.
//
// Suite seeds: the instance for (n, group g in 0..5) of a suite with master
// seed S uses seed mix64(S ^ mix64(n * 8 + g)), with mix64 the SplitMix64
// finalizer from random.hpp.

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "stepsched/schedule.hpp"

namespace stepsched {

struct GenSpec {
    std::size_t n = 10;
    int h_class = 1;  // 1..3
    int d_class = 1;  // 1..2
    double tau = 0.5;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

/// "S_<h><d>"
std::string group_label(int h_class, int d_class);

/// Makespan of the jobs ordered by a_j / b_j (ties by id), with step
/// deterioration applied. Requires b_j > 0 for every job.
Time reference_makespan(std::span<const Job> jobs);

/// Throws std::invalid_argument when an interval is empty (e.g. A = 1 with
/// h class 1).
Instance generate_instance(const GenSpec& spec);

/// The six groups in order S_11, S_12, S_21, S_22, S_31, S_32.
std::vector<std::pair<int, int>> all_groups();

std::uint64_t suite_cell_seed(std::uint64_t master, std::size_t n, std::size_t group_index);

/// One instance per (size, group), sizes in the given order, groups in
/// all_groups() order. Throws std::invalid_argument for an empty size list.
std::vector<Instance> generate_suite(std::span<const std::size_t> sizes, std::uint64_t seed, double tau = 0.5);

inline constexpr std::array<std::size_t, 5> small_sizes = {8, 10, 15, 20, 25};
inline constexpr std::array<std::size_t, 6> large_sizes = {50, 60, 70, 80, 90, 100};

}  // namespace stepsched

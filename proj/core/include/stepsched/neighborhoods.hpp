#pragma once

// The five move neighborhoods used by the local searches, their random
// (shaking) counterparts and the direction-preserving 3-opt perturbation.
// Positions are 0-based.
//
//   swap             exchange the jobs at positions i < j
//   insertion        move the job at i so that it ends up at position j != i
//   block_exchange   exchange the adjacent couples (i, i+1) and (j, j+1), j >= i + 2
//   couple_insertion move the couple (i, i+1) so that it starts at j != i
//   two_opt          keep 0..I, reverse I+1..J, keep the rest; J - I >= 3

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "stepsched/random.hpp"
#include "stepsched/schedule.hpp"

namespace stepsched {

enum class Neighborhood { swap = 1, insertion = 2, block_exchange = 3, couple_insertion = 4, two_opt = 5 };

inline constexpr std::array<Neighborhood, 5> all_neighborhoods = {
    Neighborhood::swap, Neighborhood::insertion, Neighborhood::block_exchange, Neighborhood::couple_insertion,
    Neighborhood::two_opt};

/// Maps 1..5 to a neighborhood; throws std::out_of_range otherwise.
Neighborhood neighborhood_from_index(int k);
constexpr int index_of(Neighborhood k) noexcept { return static_cast<int>(k); }
/// k mod 5 + 1
constexpr Neighborhood next_neighborhood(Neighborhood k) noexcept {
    return static_cast<Neighborhood>(index_of(k) % 5 + 1);
}
std::string_view name_of(Neighborhood k);

struct Move {
    Neighborhood kind = Neighborhood::swap;
    std::size_t i = 0;
    std::size_t j = 0;

    friend bool operator==(const Move&, const Move&) = default;
};

/// Every move of `kind` for a sequence of length n, in canonical scan order
/// (row-major over (i, j)).
std::vector<Move> enumerate_moves(Neighborhood kind, std::size_t n);

/// Applies a move in place. The move must be admissible for order.size().
void apply_move(std::span<JobId> order, const Move& move);

/// Smallest position whose job can change under the move.
std::size_t first_touched(const Move& move);

/// 2-opt on a linear sequence. Symmetric in i and j; requires
/// max(i, j) - min(i, j) >= 3 and both < size (std::invalid_argument otherwise).
Sequence two_opt_move(const Sequence& seq, std::size_t i, std::size_t j);

/// First-improvement descent: scan moves in canonical order, take the first
/// strictly improving one, rescan from the start; stop after a clean scan.
Sequence descend(const Evaluator& eval, const Sequence& seq, Neighborhood kind);
Sequence descend(const Instance& instance, const Sequence& seq, Neighborhood kind);

/// One uniformly random move of `kind`; identity when the move set is empty.
Sequence shake(const Sequence& seq, Neighborhood kind, RandomStream& rng);

/// Cut points: the job at each cut position loses its successor edge.
struct ThreeOptCuts {
    std::array<std::size_t, 3> after{};  // strictly increasing, each < n - 1
    std::array<int, 3> order{};          // permutation of {0, 1, 2}: order of the three trailing fragments
};

/// Rebuilds [A | B | C | D] as A followed by B, C, D in `cuts.order`, with
/// every fragment's internal direction kept.
Sequence apply_three_opt(const Sequence& seq, const ThreeOptCuts& cuts);

/// Three distinct random cuts and a uniformly random non-identity fragment
/// order. Identity for n < 4.
Sequence perturb_three_opt(const Sequence& seq, RandomStream& rng);

}  // namespace stepsched

#include "stepsched/neighborhoods.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stepsched {

Neighborhood neighborhood_from_index(int k) {
    if (k < 1 || k > 5) throw std::out_of_range("neighborhood index must be in 1..5, got " + std::to_string(k));
    return static_cast<Neighborhood>(k);
}

std::string_view name_of(Neighborhood k) {
    switch (k) {
        case Neighborhood::swap: return "swap";
        case Neighborhood::insertion: return "insertion";
        case Neighborhood::block_exchange: return "block-exchange";
        case Neighborhood::couple_insertion: return "couple-insertion";
        case Neighborhood::two_opt: return "2-opt";
    }
    return "?";
}

std::vector<Move> enumerate_moves(Neighborhood kind, std::size_t n) {
    std::vector<Move> moves;
    switch (kind) {
        case Neighborhood::swap:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) moves.push_back({kind, i, j});
            break;
        case Neighborhood::insertion:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (i != j) moves.push_back({kind, i, j});
            break;
        case Neighborhood::block_exchange:
            for (std::size_t i = 0; i + 3 < n; ++i)
                for (std::size_t j = i + 2; j + 1 < n; ++j) moves.push_back({kind, i, j});
            break;
        case Neighborhood::couple_insertion:
            for (std::size_t i = 0; i + 1 < n; ++i)
                for (std::size_t j = 0; j + 1 < n; ++j)
                    if (i != j) moves.push_back({kind, i, j});
            break;
        case Neighborhood::two_opt:
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 3; j < n; ++j) moves.push_back({kind, i, j});
            break;
    }
    return moves;
}

void apply_move(std::span<JobId> order, const Move& m) {
    auto at = [&](std::size_t p) { return order.begin() + static_cast<std::ptrdiff_t>(p); };
    switch (m.kind) {
        case Neighborhood::swap:
            std::swap(order[m.i], order[m.j]);
            break;
        case Neighborhood::insertion:
            if (m.i < m.j) std::rotate(at(m.i), at(m.i + 1), at(m.j + 1));
            else std::rotate(at(m.j), at(m.i), at(m.i + 1));
            break;
        case Neighborhood::block_exchange:
            std::swap(order[m.i], order[m.j]);
            std::swap(order[m.i + 1], order[m.j + 1]);
            break;
        case Neighborhood::couple_insertion:
            if (m.i < m.j) std::rotate(at(m.i), at(m.i + 2), at(m.j + 2));
            else std::rotate(at(m.j), at(m.i), at(m.i + 2));
            break;
        case Neighborhood::two_opt: {
            const std::size_t lo = std::min(m.i, m.j);
            const std::size_t hi = std::max(m.i, m.j);
            std::reverse(at(lo + 1), at(hi + 1));
            break;
        }
    }
}

std::size_t first_touched(const Move& m) {
    const std::size_t lo = std::min(m.i, m.j);
    return m.kind == Neighborhood::two_opt ? lo + 1 : lo;
}

Sequence two_opt_move(const Sequence& seq, std::size_t i, std::size_t j) {
    const std::size_t lo = std::min(i, j);
    const std::size_t hi = std::max(i, j);
    if (hi >= seq.size() || hi - lo < 3)
        throw std::invalid_argument("2-opt needs positions within the sequence that are at least 3 apart");
    Sequence out = seq;
    apply_move(out.order, {Neighborhood::two_opt, i, j});
    return out;
}

Sequence descend(const Evaluator& eval, const Sequence& seq, Neighborhood kind) {
    const std::size_t n = seq.size();
    const std::vector<Move> moves = enumerate_moves(kind, n);
    std::vector<JobId> current = seq.order;
    std::vector<JobId> scratch = current;

    // clock[k], tard[k]: machine time and tardiness accumulated before position k.
    std::vector<Time> clock(n + 1), tard(n + 1);
    auto refresh = [&] {
        for (std::size_t k = 0; k < n; ++k) {
            const Job& job = eval.job(current[k]);
            clock[k + 1] = clock[k] + actual_processing_time(job, clock[k]);
            tard[k + 1] = tard[k] + std::max<Time>(0, clock[k + 1] - job.d);
        }
    };
    refresh();

    std::size_t idx = 0;
    while (idx < moves.size()) {
        const Move& m = moves[idx];
        const std::size_t f = first_touched(m);
        apply_move(scratch, m);
        const Time value = eval.total_from(scratch, f, clock[f], tard[f]);
        if (value < tard[n]) {
            std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(f), scratch.end(),
                      current.begin() + static_cast<std::ptrdiff_t>(f));
            refresh();
            idx = 0;
        } else {
            std::copy(current.begin() + static_cast<std::ptrdiff_t>(f), current.end(),
                      scratch.begin() + static_cast<std::ptrdiff_t>(f));
            ++idx;
        }
    }
    return Sequence(std::move(current));
}

Sequence descend(const Instance& instance, const Sequence& seq, Neighborhood kind) {
    const Evaluator eval(instance);
    eval.check(seq);
    return descend(eval, seq, kind);
}

Sequence shake(const Sequence& seq, Neighborhood kind, RandomStream& rng) {
    const std::vector<Move> moves = enumerate_moves(kind, seq.size());
    Sequence out = seq;
    if (moves.empty()) return out;
    apply_move(out.order, moves[rng.below(moves.size())]);
    return out;
}

Sequence apply_three_opt(const Sequence& seq, const ThreeOptCuts& cuts) {
    const std::size_t n = seq.size();
    const auto& c = cuts.after;
    if (!(c[0] < c[1] && c[1] < c[2] && c[2] + 1 < n))
        throw std::invalid_argument("3-opt cuts must be increasing positions below n - 1");
    // Fragments B, C, D as [begin, end) ranges.
    const std::array<std::pair<std::size_t, std::size_t>, 3> frag = {
        std::pair{c[0] + 1, c[1] + 1}, std::pair{c[1] + 1, c[2] + 1}, std::pair{c[2] + 1, n}};
    Sequence out;
    out.order.reserve(n);
    out.order.insert(out.order.end(), seq.order.begin(), seq.order.begin() + static_cast<std::ptrdiff_t>(c[0] + 1));
    for (int f : cuts.order) {
        const auto [b, e] = frag[static_cast<std::size_t>(f)];
        out.order.insert(out.order.end(), seq.order.begin() + static_cast<std::ptrdiff_t>(b),
                         seq.order.begin() + static_cast<std::ptrdiff_t>(e));
    }
    return out;
}

Sequence perturb_three_opt(const Sequence& seq, RandomStream& rng) {
    const std::size_t n = seq.size();
    if (n < 4) return seq;

    static constexpr std::array<std::array<int, 3>, 5> reorders = {{
        {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

    ThreeOptCuts cuts;
    auto& c = cuts.after;
    do {
        c = {rng.below(n - 1), rng.below(n - 1), rng.below(n - 1)};
    } while (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]);
    std::sort(c.begin(), c.end());
    cuts.order = reorders[rng.below(reorders.size())];
    return apply_three_opt(seq, cuts);
}

}  // namespace stepsched

#include "stepsched/generator.hpp"

#include <algorithm>
#include <cmath>

#include "stepsched/random.hpp"

namespace stepsched {

void GenSpec::validate() const {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (h_class < 1 || h_class > 3) throw std::invalid_argument("h class must be 1, 2 or 3");
    if (d_class < 1 || d_class > 2) throw std::invalid_argument("d class must be 1 or 2");
    if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
}

std::string group_label(int h_class, int d_class) {
    return "S_" + std::to_string(h_class) + std::to_string(d_class);
}

Time reference_makespan(std::span<const Job> jobs) {
    std::vector<Job> sorted(jobs.begin(), jobs.end());
    for (const Job& j : sorted)
        if (j.b <= 0) throw std::invalid_argument("reference makespan needs b_j > 0 for every job");
    // a_x / b_x < a_y / b_y  <=>  a_x b_y < a_y b_x  (b > 0)
    std::sort(sorted.begin(), sorted.end(), [](const Job& x, const Job& y) {
        const Time lhs = x.a * y.b;
        const Time rhs = y.a * x.b;
        return lhs != rhs ? lhs < rhs : x.id < y.id;
    });
    Time clock = 0;
    for (const Job& j : sorted) clock += actual_processing_time(j, clock);
    return clock;
}

namespace {

Time draw(RandomStream& rng, Time lo, Time hi, const char* what) {
    if (hi < lo) {
        throw std::invalid_argument(std::string("empty interval for ") + what + ": {" + std::to_string(lo) + ".." +
                                    std::to_string(hi) + "}");
    }
    return rng.between(lo, hi);
}

}  // namespace

Instance generate_instance(const GenSpec& spec) {
    spec.validate();
    RandomStream rng(spec.seed);
    const std::size_t n = spec.n;

    Instance inst;
    inst.name = group_label(spec.h_class, spec.d_class) + "_n" + std::to_string(n) + "_seed" +
                std::to_string(spec.seed);
    inst.seed = spec.seed;
    inst.jobs.resize(n);
    for (std::size_t k = 0; k < n; ++k) inst.jobs[k].id = static_cast<JobId>(k + 1);

    Time total_a = 0;
    for (Job& j : inst.jobs) {
        j.a = draw(rng, 1, 100, "a");
        total_a += j.a;
    }

    Time h_lo = 1, h_hi = total_a;
    if (spec.h_class == 1) h_hi = total_a / 2;
    else if (spec.h_class == 2) h_lo = (total_a + 1) / 2;
    for (Job& j : inst.jobs) j.h = draw(rng, h_lo, h_hi, "h");

    const auto b_hi = static_cast<Time>(std::floor(100.0 * spec.tau + 1e-9));
    for (Job& j : inst.jobs) j.b = draw(rng, 1, b_hi, "b");

    const Time cref = reference_makespan(inst.jobs);
    const Time d_hi = spec.d_class == 1 ? cref / 2 : cref;
    for (Job& j : inst.jobs) j.d = draw(rng, 1, d_hi, "d");

    require_valid(inst);
    return inst;
}

std::vector<std::pair<int, int>> all_groups() {
    return {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}, {3, 2}};
}

std::uint64_t suite_cell_seed(std::uint64_t master, std::size_t n, std::size_t group_index) {
    return mix64(master ^ mix64(static_cast<std::uint64_t>(n) * 8 + group_index));
}

std::vector<Instance> generate_suite(std::span<const std::size_t> sizes, std::uint64_t seed, double tau) {
    if (sizes.empty()) throw std::invalid_argument("suite needs at least one size");
    std::vector<Instance> suite;
    const auto groups = all_groups();
    for (std::size_t n : sizes) {
        for (std::size_t g = 0; g < groups.size(); ++g) {
            GenSpec spec;
            spec.n = n;
            spec.h_class = groups[g].first;
            spec.d_class = groups[g].second;
            spec.tau = tau;
            spec.seed = suite_cell_seed(seed, n, g);
            suite.push_back(generate_instance(spec));
        }
    }
    return suite;
}

}  // namespace stepsched

#pragma once

// Batch experiments: run a set of methods over a set of instances, with
// replications for the stochastic ones, and report best / mean / RPD / MAD /
// time per (instance, method) as CSV.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "stepsched/generator.hpp"
#include "stepsched/run_result.hpp"
#include "stepsched/schedule.hpp"

namespace stepsched {

enum class Method { exact, bb, swsp, edd, vns, gvns };

std::string to_string(Method m);
/// Throws std::invalid_argument for unknown names.
Method parse_method(const std::string& name);
bool is_stochastic(Method m);

struct SolveOptions {
    std::uint64_t seed = 0;
    std::uint64_t iter_max = 500;
    std::uint64_t iter_nip = 150;
    std::uint64_t gamma = 75;
    std::size_t exact_cap = 10;
    std::uint64_t node_limit = 50'000'000;
    bool dominance_pruning = false;
    bool swap_until_fixpoint = false;
};

/// Runs one method once. Exact methods fill iterations with the node count
/// (bb) or the optimal-set size (exact). Throws SizeLimitExceeded when the
/// brute-force cap is exceeded and std::runtime_error when branch and bound
/// stops at its node limit.
RunResult solve(const Instance& instance, Method method, const SolveOptions& options);

struct InstanceSource {
    std::optional<std::filesystem::path> path;  // load from file, or
    std::optional<GenSpec> spec;                // generate
};

struct ExperimentConfig {
    std::vector<InstanceSource> instances;
    std::vector<Method> methods;
    std::size_t replications = 10;
    std::uint64_t base_seed = 1;
    SolveOptions solve;
    bool timing = true;
    std::optional<std::filesystem::path> output;

    /// Throws std::invalid_argument unless there is at least one method,
    /// one instance and one replication.
    void validate() const;
};

/// Parses the JSON config. Relative instance paths resolve against `base_dir`.
///   {"instances": [path...], "generate": [{"n","h_class","d_class","seed","tau"}...],
///    "suite": {"sizes": [...], "seed": S, "tau": t}, "methods": [...],
///    "replications": R, "seed": base, "iter_max", "iter_nip", "gamma",
///    "exact_cap", "node_limit", "dominance_pruning", "swap_until_fixpoint",
///    "timing": bool, "output": path}
ExperimentConfig parse_experiment_config(const std::string& json_text, const std::filesystem::path& base_dir = {});

struct ReportRow {
    std::string group;
    std::size_t n = 0;
    std::string method;
    std::string instance;
    std::optional<Time> best;      // unset when the cell failed
    double mean = 0.0;
    std::optional<double> rpd_pct;  // against the best value over all methods on this instance
    std::optional<double> mad_pct;
    double time_s = 0.0;
    std::string error;

    bool ok() const { return error.empty(); }
};

struct Report {
    std::vector<ReportRow> rows;  // sorted by (group, n, method)
    bool timing = true;

    std::size_t failures() const;
};

/// Runs every cell; per-cell failures (missing files, caps, invalid data) are
/// recorded on their rows and do not stop the batch.
Report run_benchmark(const ExperimentConfig& config);

inline constexpr const char* report_csv_header = "group,n,method,best,mean,rpd_pct,mad_pct,time_s";

std::string to_csv(const Report& report);
std::string to_markdown(const Report& report);

/// Group label for an instance: "S_xy" when its name starts with it, else the name.
std::string group_of(const Instance& instance);

}  // namespace stepsched

#include "stepsched/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "stepsched/exact.hpp"
#include "stepsched/instance_io.hpp"
#include "stepsched/metaheuristics.hpp"
#include "stepsched/metrics.hpp"
#include "stepsched/swsp.hpp"

namespace stepsched {

using nlohmann::json;

std::string to_string(Method m) {
    switch (m) {
        case Method::exact: return "exact";
        case Method::bb: return "bb";
        case Method::swsp: return "swsp";
        case Method::edd: return "edd";
        case Method::vns: return "vns";
        case Method::gvns: return "gvns";
    }
    return "?";
}

Method parse_method(const std::string& name) {
    for (Method m : {Method::exact, Method::bb, Method::swsp, Method::edd, Method::vns, Method::gvns})
        if (to_string(m) == name) return m;
    throw std::invalid_argument("unknown method '" + name + "' (expected exact, bb, swsp, edd, vns or gvns)");
}

bool is_stochastic(Method m) { return m == Method::vns || m == Method::gvns; }

RunResult solve(const Instance& instance, Method method, const SolveOptions& options) {
    switch (method) {
        case Method::exact: {
            const auto t0 = std::chrono::steady_clock::now();
            OptimalResult opt = brute_force(instance, options.exact_cap);
            RunResult r;
            r.best_sequence = std::move(opt.best_sequence);
            r.best_value = opt.best_value;
            r.iterations = opt.optimal_set_size;
            r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return r;
        }
        case Method::bb: {
            const auto t0 = std::chrono::steady_clock::now();
            OptimalResult opt = branch_and_bound(instance, {options.node_limit, options.dominance_pruning});
            if (!opt.proven) {
                throw std::runtime_error("branch and bound hit its node limit of " +
                                         std::to_string(options.node_limit) + " (incumbent " +
                                         std::to_string(opt.best_value) + " not proven optimal)");
            }
            RunResult r;
            r.best_sequence = std::move(opt.best_sequence);
            r.best_value = opt.best_value;
            r.iterations = opt.nodes_explored;
            r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return r;
        }
        case Method::swsp: {
            SwspParams p;
            p.swap_until_fixpoint = options.swap_until_fixpoint;
            return swsp(instance, p).run;
        }
        case Method::edd: {
            RunResult r;
            r.best_sequence = edd_sequence(instance);
            r.best_value = evaluate_schedule(instance, r.best_sequence).total;
            return r;
        }
        case Method::vns:
        case Method::gvns: {
            SearchParams p;
            p.iter_max = options.iter_max;
            p.iter_nip = options.iter_nip;
            p.gamma = options.gamma;
            p.seed = options.seed;
            return method == Method::gvns ? gvns(instance, p) : vns(instance, p);
        }
    }
    throw std::logic_error("unhandled method");
}

void ExperimentConfig::validate() const {
    if (methods.empty()) throw std::invalid_argument("config needs at least one method");
    if (instances.empty()) throw std::invalid_argument("config needs at least one instance");
    if (replications < 1) throw std::invalid_argument("replications must be at least 1");
}

namespace {

template <class T>
T get_or(const json& doc, const char* key, T fallback) {
    if (!doc.contains(key)) return fallback;
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config field '") + key + "': " + e.what());
    }
}

GenSpec gen_spec_from(const json& j) {
    GenSpec spec;
    spec.n = get_or<std::size_t>(j, "n", spec.n);
    spec.h_class = get_or<int>(j, "h_class", spec.h_class);
    spec.d_class = get_or<int>(j, "d_class", spec.d_class);
    spec.tau = get_or<double>(j, "tau", spec.tau);
    spec.seed = get_or<std::uint64_t>(j, "seed", spec.seed);
    spec.validate();
    return spec;
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& json_text, const std::filesystem::path& base_dir) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed config JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");

    ExperimentConfig cfg;
    for (const auto& p : get_or<std::vector<std::string>>(doc, "instances", {})) {
        std::filesystem::path path(p);
        if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
        cfg.instances.push_back({path, std::nullopt});
    }
    if (doc.contains("generate")) {
        for (const auto& g : doc["generate"]) cfg.instances.push_back({std::nullopt, gen_spec_from(g)});
    }
    if (doc.contains("suite")) {
        const json& s = doc["suite"];
        const auto sizes = get_or<std::vector<std::size_t>>(s, "sizes", {});
        if (sizes.empty()) throw std::invalid_argument("suite needs a non-empty 'sizes' list");
        const auto seed = get_or<std::uint64_t>(s, "seed", 0);
        const auto tau = get_or<double>(s, "tau", 0.5);
        const auto groups = all_groups();
        for (std::size_t n : sizes) {
            for (std::size_t g = 0; g < groups.size(); ++g) {
                GenSpec spec{n, groups[g].first, groups[g].second, tau, suite_cell_seed(seed, n, g)};
                spec.validate();
                cfg.instances.push_back({std::nullopt, spec});
            }
        }
    }
    for (const auto& m : get_or<std::vector<std::string>>(doc, "methods", {})) cfg.methods.push_back(parse_method(m));
    cfg.replications = get_or<std::size_t>(doc, "replications", cfg.replications);
    cfg.base_seed = get_or<std::uint64_t>(doc, "seed", cfg.base_seed);
    cfg.solve.iter_max = get_or<std::uint64_t>(doc, "iter_max", cfg.solve.iter_max);
    cfg.solve.iter_nip = get_or<std::uint64_t>(doc, "iter_nip", cfg.solve.iter_nip);
    cfg.solve.gamma = get_or<std::uint64_t>(doc, "gamma", cfg.solve.gamma);
    cfg.solve.exact_cap = get_or<std::size_t>(doc, "exact_cap", cfg.solve.exact_cap);
    cfg.solve.node_limit = get_or<std::uint64_t>(doc, "node_limit", cfg.solve.node_limit);
    cfg.solve.dominance_pruning = get_or<bool>(doc, "dominance_pruning", cfg.solve.dominance_pruning);
    cfg.solve.swap_until_fixpoint = get_or<bool>(doc, "swap_until_fixpoint", cfg.solve.swap_until_fixpoint);
    cfg.timing = get_or<bool>(doc, "timing", cfg.timing);
    if (doc.contains("output")) {
        std::filesystem::path out(get_or<std::string>(doc, "output", {}));
        if (out.is_relative() && !base_dir.empty()) out = base_dir / out;
        cfg.output = out;
    }
    cfg.validate();
    return cfg;
}

std::string group_of(const Instance& instance) {
    static const std::regex label(R"(^(S_[1-3][1-2])(_|$))");
    std::smatch m;
    if (std::regex_search(instance.name, m, label)) return m[1].str();
    return instance.name.empty() ? std::string("-") : instance.name;
}

std::size_t Report::failures() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return !r.ok(); }));
}

Report run_benchmark(const ExperimentConfig& config) {
    config.validate();
    Report report;
    report.timing = config.timing;

    for (std::size_t idx = 0; idx < config.instances.size(); ++idx) {
        const InstanceSource& src = config.instances[idx];
        std::optional<Instance> instance;
        std::string load_error;
        try {
            instance = src.path ? load_instance(*src.path) : generate_instance(*src.spec);
        } catch (const std::exception& e) {
            load_error = e.what();
        }

        std::vector<ReportRow> rows;
        for (Method method : config.methods) {
            ReportRow row;
            row.method = to_string(method);
            if (!instance) {
                row.group = src.path ? src.path->stem().string() : "-";
                row.instance = row.group;
                row.error = load_error;
                rows.push_back(std::move(row));
                continue;
            }
            row.group = group_of(*instance);
            row.n = instance->size();
            row.instance = instance->name;
            const std::size_t runs = is_stochastic(method) ? config.replications : 1;
            std::vector<double> values;
            double seconds = 0.0;
            try {
                Time best = std::numeric_limits<Time>::max();
                for (std::size_t r = 0; r < runs; ++r) {
                    SolveOptions opts = config.solve;
                    opts.seed = config.base_seed + r;
                    RunResult run = solve(*instance, method, opts);
                    const Time checked = evaluate_schedule(*instance, run.best_sequence).total;
                    if (checked != run.best_value) {
                        throw std::logic_error("reported value " + std::to_string(run.best_value) +
                                               " does not match re-evaluated " + std::to_string(checked));
                    }
                    best = std::min(best, checked);
                    values.push_back(static_cast<double>(checked));
                    seconds += run.elapsed_seconds;
                }
                row.best = best;
                row.mean = mean(values);
                row.mad_pct = mad(values);
                row.time_s = seconds / static_cast<double>(runs);
            } catch (const std::exception& e) {
                row.error = e.what();
            }
            rows.push_back(std::move(row));
        }

        std::optional<Time> reference;
        for (const ReportRow& row : rows)
            if (row.best) reference = reference ? std::min(*reference, *row.best) : *row.best;
        for (ReportRow& row : rows)
            if (row.best && reference) row.rpd_pct = rpd(row.mean, static_cast<double>(*reference));
        for (ReportRow& row : rows) report.rows.push_back(std::move(row));
    }

    std::stable_sort(report.rows.begin(), report.rows.end(), [](const ReportRow& x, const ReportRow& y) {
        return std::tie(x.group, x.n, x.method) < std::tie(y.group, y.n, y.method);
    });
    return report;
}

namespace {

struct Cells {
    std::string best, mean, rpd, mad, time;
};

Cells cells_of(const ReportRow& row, bool timing) {
    if (!row.ok()) return {"NA", "NA", "NA", "NA", "NA"};
    return {std::to_string(*row.best), format_fixed2(row.mean), format_percent(row.rpd_pct),
            format_percent(row.mad_pct), timing ? format_fixed2(row.time_s) : std::string("-")};
}

}  // namespace

std::string to_csv(const Report& report) {
    std::ostringstream out;
    out << report_csv_header << '\n';
    for (const ReportRow& row : report.rows) {
        const Cells c = cells_of(row, report.timing);
        out << row.group << ',' << row.n << ',' << row.method << ',' << c.best << ',' << c.mean << ',' << c.rpd << ','
            << c.mad << ',' << c.time << '\n';
    }
    return out.str();
}

std::string to_markdown(const Report& report) {
    std::ostringstream out;
    out << "| group | n | method | best | mean | RPD (%) | MAD (%) | time (s) |\n";
    out << "|---|---:|---|---:|---:|---:|---:|---:|\n";
    for (const ReportRow& row : report.rows) {
        const Cells c = cells_of(row, report.timing);
        out << "| " << row.group << " | " << row.n << " | " << row.method << " | " << c.best << " | " << c.mean
            << " | " << c.rpd << " | " << c.mad << " | " << c.time << " |\n";
    }
    return out.str();
}

}  // namespace stepsched

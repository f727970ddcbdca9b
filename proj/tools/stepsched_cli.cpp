// stepsched: command-line front end.
//
//   stepsched gen          generate an instance (or a whole suite)
//   stepsched eval         total tardiness of a given sequence
//   stepsched solve        run one method on one instance
//   stepsched bench        run an experiment config and write the CSV report
//   stepsched export-milp  write the integer program in LP format
//
// Exit status: 0 success, 1 runtime failure, 2 usage error, 3 benchmark
// finished with failed cells.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stepsched/exact.hpp"
#include "stepsched/experiment.hpp"
#include "stepsched/generator.hpp"
#include "stepsched/instance_io.hpp"
#include "stepsched/milp.hpp"
#include "stepsched/schedule.hpp"

namespace fs = std::filesystem;
using namespace stepsched;

namespace {

constexpr int exit_runtime = 1;
constexpr int exit_usage = 2;
constexpr int exit_partial = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") std::cout << text;
    else write_text_file(out_path, text);
}

struct GenArgs {
    std::size_t n = 10;
    int h_class = 1;
    int d_class = 1;
    double tau = 0.5;
    std::uint64_t seed = 0;
    std::string out;
    std::vector<std::size_t> sizes;
    std::string out_dir;
};

int run_gen(const GenArgs& args) {
    if (!args.sizes.empty()) {
        if (args.out_dir.empty()) throw CLI::ValidationError("--sizes requires --out-dir");
        fs::create_directories(args.out_dir);
        for (const Instance& inst : generate_suite(args.sizes, args.seed, args.tau)) {
            const std::string file = group_of(inst) + "_n" + std::to_string(inst.size()) + ".json";
            save_instance(inst, fs::path(args.out_dir) / file);
        }
        return 0;
    }
    GenSpec spec{args.n, args.h_class, args.d_class, args.tau, args.seed};
    emit(instance_to_json(generate_instance(spec)), args.out);
    return 0;
}

struct EvalArgs {
    std::string instance;
    std::string sequence;
    std::string sequence_file;
    bool detail = false;
};

int run_eval(const EvalArgs& args) {
    const Instance inst = load_instance(args.instance);
    std::string text = args.sequence;
    if (!args.sequence_file.empty()) text = read_text_file(args.sequence_file);
    if (text.empty()) throw CLI::ValidationError("one of --sequence or --sequence-file is required");
    const ScheduleResult r = evaluate_schedule(inst, parse_sequence(text));
    if (args.detail) {
        std::cout << "job,start,processing,completion,due,tardiness\n";
        for (JobId id : r.sequence.order) {
            const auto k = static_cast<std::size_t>(id - 1);
            std::cout << id << ',' << r.starts[k] << ',' << r.processing[k] << ',' << r.completions[k] << ','
                      << inst.jobs[k].d << ',' << r.tardiness[k] << '\n';
        }
    }
    std::cout << r.total << '\n';
    return 0;
}

struct SolveArgs {
    std::string instance;
    std::string method = "gvns";
    SolveOptions options;
    bool timing = false;
    std::string out;
};

int run_solve(const SolveArgs& args) {
    const Instance inst = load_instance(args.instance);
    const Method method = parse_method(args.method);
    const RunResult r = solve(inst, method, args.options);

    nlohmann::ordered_json doc;
    doc["instance"] = inst.name;
    doc["n"] = inst.size();
    doc["method"] = to_string(method);
    doc["value"] = r.best_value;
    doc["sequence"] = r.best_sequence.order;
    if (is_stochastic(method)) {
        doc["seed"] = r.seed;
        doc["iterations"] = r.iterations;
        doc["perturbations"] = r.perturbations;
    } else if (method == Method::bb) {
        doc["nodes_explored"] = r.iterations;
    } else if (method == Method::exact) {
        doc["optimal_set_size"] = r.iterations;
    }
    if (args.timing) doc["elapsed_s"] = r.elapsed_seconds;
    emit(doc.dump(2) + "\n", args.out);
    return 0;
}

struct BenchArgs {
    std::string config;
    std::string out;
    bool markdown = false;
    bool no_timing = false;
};

int run_bench(const BenchArgs& args) {
    const fs::path config_path(args.config);
    ExperimentConfig cfg = parse_experiment_config(read_text_file(config_path), config_path.parent_path());
    if (args.no_timing) cfg.timing = false;
    const Report report = run_benchmark(cfg);
    std::string out = args.out;
    if (out.empty() && cfg.output) out = cfg.output->string();
    emit(args.markdown ? to_markdown(report) : to_csv(report), out);
    for (const ReportRow& row : report.rows)
        if (!row.ok()) std::cerr << "stepsched: " << row.instance << " / " << row.method << ": " << row.error << '\n';
    return report.failures() == 0 ? 0 : exit_partial;
}

struct ExportArgs {
    std::string instance;
    std::string out;
};

int run_export(const ExportArgs& args) {
    emit(milp::export_lp(milp::build_model(load_instance(args.instance))), args.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Single-machine total tardiness with step-deteriorating jobs"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance as JSON");
    gen_cmd->add_option("--n", gen.n, "Number of jobs")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--h-class", gen.h_class, "Deteriorating-date interval: 1 (0,A/2], 2 [A/2,A], 3 (0,A]")
        ->check(CLI::Range(1, 3));
    gen_cmd->add_option("--d-class", gen.d_class, "Due-date interval: 1 (0,Cref/2], 2 (0,Cref]")
        ->check(CLI::Range(1, 2));
    gen_cmd->add_option("--tau", gen.tau, "Penalty scale: b uniform on (0, 100 tau]");
    gen_cmd->add_option("--seed", gen.seed, "Random seed");
    gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");
    gen_cmd->add_option("--sizes", gen.sizes, "Generate a suite: one instance per size and group")->delimiter(',');
    gen_cmd->add_option("--out-dir", gen.out_dir, "Directory for --sizes output");

    EvalArgs eval;
    auto* eval_cmd = app.add_subcommand("eval", "Print the total tardiness of a sequence");
    eval_cmd->add_option("--instance", eval.instance, "Instance JSON file")->required();
    eval_cmd->add_option("--sequence", eval.sequence, "Comma-separated job ids, e.g. 3,2,4,1");
    eval_cmd->add_option("--sequence-file", eval.sequence_file, "File holding comma-separated job ids");
    eval_cmd->add_flag("--detail", eval.detail, "Also print the per-job schedule as CSV");

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Solve one instance with one method (JSON result)");
    solve_cmd->add_option("--instance", solve_args.instance, "Instance JSON file")->required();
    solve_cmd->add_option("--method", solve_args.method, "exact | bb | swsp | edd | vns | gvns")
        ->check(CLI::IsMember({"exact", "bb", "swsp", "edd", "vns", "gvns"}));
    solve_cmd->add_option("--seed", solve_args.options.seed, "Seed for vns/gvns");
    solve_cmd->add_option("--iter-max", solve_args.options.iter_max, "Iteration budget for vns/gvns");
    solve_cmd->add_option("--iter-nip", solve_args.options.iter_nip, "Stop after this many non-improving iterations");
    solve_cmd->add_option("--gamma", solve_args.options.gamma, "Stagnation length before a 3-opt restart (gvns)");
    solve_cmd->add_option("--cap", solve_args.options.exact_cap, "Largest n accepted by --method exact");
    solve_cmd->add_option("--node-limit", solve_args.options.node_limit, "Node budget for --method bb");
    solve_cmd->add_flag("--dominance-pruning", solve_args.options.dominance_pruning,
                        "Enable adjacent-interchange pruning in bb");
    solve_cmd->add_flag("--swap-until-fixpoint", solve_args.options.swap_until_fixpoint,
                        "Repeat swsp interchange passes until no improvement");
    solve_cmd->add_flag("--timing", solve_args.timing, "Include elapsed seconds in the output");
    solve_cmd->add_option("--out", solve_args.out, "Output file (default stdout)");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run an experiment config and write a CSV report");
    bench_cmd->add_option("--config", bench.config, "Experiment config JSON")->required();
    bench_cmd->add_option("--out", bench.out, "Report file (overrides the config's output)");
    bench_cmd->add_flag("--markdown", bench.markdown, "Render a Markdown table instead of CSV");
    bench_cmd->add_flag("--no-timing", bench.no_timing, "Leave the time column out ('-') for reproducible files");

    ExportArgs exp;
    auto* export_cmd = app.add_subcommand("export-milp", "Write the integer program in LP format");
    export_cmd->add_option("--instance", exp.instance, "Instance JSON file")->required();
    export_cmd->add_option("--out", exp.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*eval_cmd) return run_eval(eval);
        if (*solve_cmd) return run_solve(solve_args);
        if (*bench_cmd) return run_bench(bench);
        if (*export_cmd) return run_export(exp);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "stepsched: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "stepsched: " << e.what() << '\n';
        return exit_runtime;
    }
    return exit_usage;
}

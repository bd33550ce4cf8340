#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "epr/serialization.hpp"
#include "harness/chart.hpp"
#include "harness/harness.hpp"

namespace {

using epr::harness::ChartMetric;
using epr::harness::OutputFormat;
using epr::harness::RunConfig;
using epr::harness::SweepOptions;

std::set<OutputFormat> parse_formats(const std::vector<std::string>& names) {
    std::set<OutputFormat> out;
    for (const auto& name : names) {
        if (name == "json")
            out.insert(OutputFormat::json);
        else if (name == "csv")
            out.insert(OutputFormat::csv);
        else if (name == "svg")
            out.insert(OutputFormat::svg);
        else if (name == "text")
            out.insert(OutputFormat::text);
        else
            throw CLI::ValidationError("--format", "unknown format \"" + name + "\"");
    }
    return out;
}

// Options shared by simulate, sweep and bench.
struct CommonArgs {
    std::string preset;
    std::string constraints_path;
    std::uint64_t seed = 1;
    std::string method = "rejection";
    std::uint64_t batch_size = 1000;
    int workers = 1;
    std::uint64_t burn_in = 0;
    std::string out_dir = "epr-out";
    std::vector<std::string> formats;
};

void add_common_options(CLI::App* cmd, CommonArgs& args) {
    auto* preset = cmd->add_option("--preset", args.preset,
                                   "Constraint preset: pr-box, classical or tsirelson");
    auto* file = cmd->add_option("--constraints", args.constraints_path,
                                 "Constraint table JSON file");
    preset->excludes(file);
    cmd->add_option("--seed", args.seed, "Base RNG seed")->capture_default_str();
    cmd->add_option("--method", args.method, "Sampler: rejection or metropolis")
        ->check(CLI::IsMember({"rejection", "metropolis"}))
        ->capture_default_str();
    cmd->add_option("--batch-size", args.batch_size,
                    "Proposals per chain batch (metropolis)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--workers", args.workers, "Parallel sampler workers")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--burn-in", args.burn_in,
                    "Chain steps discarded before tallying (metropolis)")
        ->capture_default_str();
    cmd->add_option("--out", args.out_dir, "Output directory")
        ->envname("EPR_SIM_OUT_DIR")
        ->capture_default_str();
    cmd->add_option("--format", args.formats,
                    "Output formats (json, csv, svg, text); repeatable")
        ->delimiter(',');
}

RunConfig make_run_config(const CommonArgs& args,
                          std::set<OutputFormat> default_formats) {
    RunConfig cfg;
    cfg.preset = args.preset;
    cfg.constraints_path = args.constraints_path;
    cfg.sampler.seed = args.seed;
    cfg.sampler.method = epr::method_from_name(args.method);
    cfg.sampler.batch_size = args.batch_size;
    cfg.sampler.workers = args.workers;
    cfg.sampler.burn_in = args.burn_in;
    cfg.out_dir = args.out_dir;
    cfg.formats = args.formats.empty() ? std::move(default_formats)
                                       : parse_formats(args.formats);
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"EPR simulation toolkit: composes measurement-context hypergraphs "
                 "with the Foulis-Randall product, samples under input-correlation "
                 "constraints, and tests the CHSH inequalities"};
    app.require_subcommand(1);

    CommonArgs sim_args, sweep_args, bench_args;
    std::uint64_t sim_iterations = 50000;
    std::vector<std::uint64_t> sweep_iterations, bench_iterations;
    int sweep_repeats = 5, bench_repeats = 3;
    std::vector<std::string> bench_methods = {"rejection", "metropolis"};
    std::string verify_path;
    std::string render_csv, render_out = "chart.svg", render_metric = "error",
                render_title;

    CLI::App* simulate = app.add_subcommand(
        "simulate", "Run one sampling experiment and write distribution + report");
    add_common_options(simulate, sim_args);
    simulate->add_option("--iterations", sim_iterations, "Accepted samples to collect")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Repeat simulations over increasing N and record accuracy");
    add_common_options(sweep, sweep_args);
    sweep->add_option("--iterations", sweep_iterations,
                      "Ascending accepted-sample counts (repeatable)")
        ->required()
        ->delimiter(',');
    sweep->add_option("--repeats", sweep_repeats, "Seeds per N")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* bench = app.add_subcommand("bench",
                                         "Time simulations over increasing N");
    add_common_options(bench, bench_args);
    bench->add_option("--iterations", bench_iterations,
                      "Accepted-sample counts (repeatable)")
        ->required()
        ->delimiter(',');
    bench->add_option("--repeats", bench_repeats, "Runs per N per method")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--methods", bench_methods,
                      "Sampler methods to compare (repeatable)")
        ->delimiter(',')
        ->check(CLI::IsMember({"rejection", "metropolis"}))
        ->capture_default_str();

    CLI::App* verify = app.add_subcommand(
        "verify", "Recheck a stored scenario/constraints/distribution/report file");
    verify->add_option("file", verify_path, "File to verify")->required();

    CLI::App* render = app.add_subcommand("render", "Render a sweep/bench CSV as SVG");
    render->add_option("--csv", render_csv, "Input CSV")->required();
    render->add_option("--out", render_out, "Output SVG path")->capture_default_str();
    render->add_option("--metric", render_metric, "Chart metric: error or time")
        ->check(CLI::IsMember({"error", "time"}))
        ->capture_default_str();
    render->add_option("--title", render_title, "Chart title");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return epr::harness::exit_config;
    }

    try {
        if (simulate->parsed()) {
            RunConfig cfg = make_run_config(
                sim_args, {OutputFormat::json, OutputFormat::text});
            cfg.sampler.target_accepted = sim_iterations;
            return epr::harness::cmd_simulate(cfg, std::cout, std::cerr);
        }
        if (sweep->parsed()) {
            RunConfig cfg = make_run_config(sweep_args, {OutputFormat::svg});
            SweepOptions opts;
            opts.iteration_counts = sweep_iterations;
            opts.repeats = sweep_repeats;
            opts.methods = {cfg.sampler.method};
            return epr::harness::cmd_sweep(cfg, opts, std::cout, std::cerr);
        }
        if (bench->parsed()) {
            RunConfig cfg = make_run_config(bench_args, {OutputFormat::svg});
            if (cfg.preset.empty() && cfg.constraints_path.empty())
                cfg.preset = "pr-box";
            SweepOptions opts;
            opts.iteration_counts = bench_iterations;
            opts.repeats = bench_repeats;
            for (const auto& name : bench_methods)
                opts.methods.push_back(epr::method_from_name(name));
            return epr::harness::cmd_bench(cfg, opts, std::cout, std::cerr);
        }
        if (verify->parsed())
            return epr::harness::cmd_verify(verify_path, std::cout, std::cerr);
        if (render->parsed())
            return epr::harness::cmd_render(
                render_csv, render_out,
                render_metric == "time" ? ChartMetric::time : ChartMetric::error,
                render_title.empty()
                    ? (render_metric == "time" ? "elapsed time" : "max |S| error")
                    : render_title,
                std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return epr::harness::exit_unexpected;
    }
    return epr::harness::exit_config;
}

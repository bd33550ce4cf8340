#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "epr/analysis.hpp"
#include "epr/constraints.hpp"
#include "epr/sampling.hpp"
#include "epr/scenario.hpp"

namespace epr::harness {

/// Process exit codes, stable across releases.
enum ExitCode : int {
    exit_ok = 0,
    exit_unexpected = 1,
    exit_config = 2,
    exit_sampling = 3,
    exit_verify = 4,
    exit_io = 5,
};

enum class OutputFormat { json, csv, svg, text };

struct RunConfig {
    /// Exactly one of preset / constraints_path must be set.
    std::string preset;
    std::filesystem::path constraints_path;
    SamplerConfig sampler;
    std::filesystem::path out_dir = "epr-out";
    std::set<OutputFormat> formats = {OutputFormat::json, OutputFormat::text};
};

struct SimulationResult {
    ConstraintTable table;
    Tally tally;
    GlobalDistribution distribution;
    ChshReport report;
    double analytic_max_s = 0.0;
    std::chrono::nanoseconds elapsed{0};
};

/// One line of a sweep or bench CSV. Column order:
/// N,seed,method,max_s,abs_error,delta,residual_max,elapsed_ns,accepted,proposed
struct SweepRow {
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    std::string method;
    double max_s = 0.0;
    double abs_error = 0.0;
    double delta = 0.0;
    double residual_max = 0.0;
    std::uint64_t elapsed_ns = 0;
    std::uint64_t accepted = 0;
    std::uint64_t proposed = 0;
};

struct SweepOptions {
    std::vector<std::uint64_t> iteration_counts;
    int repeats = 5;
    std::vector<SamplerMethod> methods;
};

struct TrendPoint {
    std::uint64_t n = 0;
    double median_error = 0.0;
};

struct TrendSummary {
    std::vector<TrendPoint> points;
    bool non_increasing = true;
};

/// CSV header shared by sweep and bench output.
extern const char* const kSweepCsvHeader;

ConstraintTable resolve_constraint_source(const RunConfig& cfg);

/// Sample, normalize and analyze; `elapsed` covers exactly that region
/// (no file or process overhead).
SimulationResult run_simulation(const ConstraintTable& table, const SamplerConfig& cfg);

/// Rows for every (N, seed offset, method) combination, sorted by
/// (N, seed, method). Per-row failures are reported to `log` and the
/// sweep continues.
std::vector<SweepRow> run_sweep(const ConstraintTable& table, const SamplerConfig& base,
                                const SweepOptions& opts, std::ostream* log);

TrendSummary sweep_trend(const std::vector<SweepRow>& rows);

std::string rows_to_csv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> rows_from_csv(const std::string& text);

/// Least-squares slope of log10(elapsed seconds) against log10(N),
/// using the per-N median over seeds. Requires at least two distinct N.
double fit_loglog_slope(const std::vector<SweepRow>& rows, const std::string& method);

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, const SweepOptions& opts, std::ostream& out,
              std::ostream& err);
int cmd_bench(const RunConfig& cfg, const SweepOptions& opts, std::ostream& out,
              std::ostream& err);
int cmd_verify(const std::filesystem::path& file, std::ostream& out, std::ostream& err);

enum class ChartMetric { error, time };
int cmd_render(const std::filesystem::path& csv_path, const std::filesystem::path& svg_path,
               ChartMetric metric, const std::string& title, std::ostream& out,
               std::ostream& err);

} // namespace epr::harness

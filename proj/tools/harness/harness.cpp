#include "harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "chart.hpp"
#include "epr/serialization.hpp"

namespace epr::harness {

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr double kVerifyTolerance = 1e-9;

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    if (!out)
        throw std::runtime_error("write failed for " + path.string());
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double median(std::vector<double> values) {
    if (values.empty())
        throw std::runtime_error("median of empty set");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

const char* preset_display_name(const std::string& preset) {
    return preset.empty() ? "constraints-file" : preset.c_str();
}

ConstraintTable preset_by_name(const std::string& name) {
    if (name == "pr-box")
        return pr_box();
    if (name == "classical")
        return classical_uniform();
    if (name == "tsirelson")
        return tsirelson();
    throw ConfigError("unknown preset \"" + name +
                      "\" (expected pr-box, classical or tsirelson)");
}

std::string run_source(const RunConfig& cfg) {
    return cfg.preset.empty() ? "file:" + cfg.constraints_path.string()
                              : "preset:" + cfg.preset;
}

json run_metadata(const RunConfig& cfg, const SimulationResult& r) {
    json run;
    run["source"] = run_source(cfg);
    run["method"] = method_name(cfg.sampler.method);
    run["iterations"] = cfg.sampler.target_accepted;
    run["seed"] = cfg.sampler.seed;
    run["workers"] = cfg.sampler.workers;
    run["batch_size"] = cfg.sampler.batch_size;
    run["burn_in"] = cfg.sampler.burn_in;
    run["accepted"] = r.tally.accepted;
    run["proposed"] = r.tally.proposed;
    run["analytic_max_s"] = r.analytic_max_s;
    return run;
}

std::string distribution_csv(const GlobalDistribution& d) {
    std::string out = "index,a,b,x,y,weight\n";
    for (int i = 0; i < 16; ++i) {
        const JointVertex v = joint_vertex(i);
        out += std::to_string(i) + "," + std::to_string(v.a) + "," +
               std::to_string(v.b) + "," + std::to_string(v.x) + "," +
               std::to_string(v.y) + "," + fmt_double(d[i]) + "\n";
    }
    return out;
}

} // namespace

const char* const kSweepCsvHeader =
    "N,seed,method,max_s,abs_error,delta,residual_max,elapsed_ns,accepted,proposed";

ConstraintTable resolve_constraint_source(const RunConfig& cfg) {
    const bool has_preset = !cfg.preset.empty();
    const bool has_file = !cfg.constraints_path.empty();
    if (has_preset == has_file)
        throw ConfigError("exactly one of --preset / --constraints must be given");
    if (has_preset)
        return preset_by_name(cfg.preset);
    const json j = json::parse(read_text_file(cfg.constraints_path));
    return constraints_from_json(j);
}

SimulationResult run_simulation(const ConstraintTable& table, const SamplerConfig& cfg) {
    const Scenario scenario = foulis_randall_product(make_local_scenario(),
                                                     make_local_scenario());
    SimulationResult r;
    r.table = table;

    const auto start = std::chrono::steady_clock::now();
    r.tally = sample_run(table, cfg, scenario);
    r.distribution = normalize(r.tally, scenario);
    r.report = analyze(r.distribution);
    r.elapsed = std::chrono::steady_clock::now() - start;

    r.analytic_max_s = analyze(analytic_distribution(table)).max_s;
    return r;
}

std::vector<SweepRow> run_sweep(const ConstraintTable& table, const SamplerConfig& base,
                                const SweepOptions& opts, std::ostream* log) {
    std::vector<SweepRow> rows;
    for (std::uint64_t n : opts.iteration_counts) {
        for (int rep = 0; rep < opts.repeats; ++rep) {
            const std::uint64_t seed = base.seed + static_cast<std::uint64_t>(rep);
            for (SamplerMethod method : opts.methods) {
                SamplerConfig cfg = base;
                cfg.target_accepted = n;
                cfg.seed = seed;
                cfg.method = method;
                try {
                    const SimulationResult r = run_simulation(table, cfg);
                    SweepRow row;
                    row.n = n;
                    row.seed = seed;
                    row.method = method_name(method);
                    row.max_s = r.report.max_s;
                    row.abs_error = std::abs(r.report.max_s - r.analytic_max_s);
                    row.delta = r.report.delta;
                    row.residual_max = *std::max_element(
                        r.report.nosignalling_residuals.begin(),
                        r.report.nosignalling_residuals.end());
                    row.elapsed_ns = static_cast<std::uint64_t>(r.elapsed.count());
                    row.accepted = r.tally.accepted;
                    row.proposed = r.tally.proposed;
                    rows.push_back(std::move(row));
                } catch (const std::exception& e) {
                    if (log)
                        *log << "sweep: N=" << n << " seed=" << seed << " method="
                             << method_name(method) << " failed: " << e.what() << "\n";
                }
            }
        }
    }
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        return std::tie(a.n, a.seed, a.method) < std::tie(b.n, b.seed, b.method);
    });
    return rows;
}

TrendSummary sweep_trend(const std::vector<SweepRow>& rows) {
    TrendSummary trend;
    std::vector<std::uint64_t> ns;
    for (const auto& row : rows)
        ns.push_back(row.n);
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

    for (std::uint64_t n : ns) {
        std::vector<double> errors;
        for (const auto& row : rows)
            if (row.n == n)
                errors.push_back(row.abs_error);
        trend.points.push_back({n, median(std::move(errors))});
    }
    for (std::size_t i = 1; i < trend.points.size(); ++i)
        if (trend.points[i].median_error > trend.points[i - 1].median_error)
            trend.non_increasing = false;
    return trend;
}

std::string rows_to_csv(const std::vector<SweepRow>& rows) {
    std::string out = std::string(kSweepCsvHeader) + "\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + "," + std::to_string(r.seed) + "," + r.method +
               "," + fmt_double(r.max_s) + "," + fmt_double(r.abs_error) + "," +
               fmt_double(r.delta) + "," + fmt_double(r.residual_max) + "," +
               std::to_string(r.elapsed_ns) + "," + std::to_string(r.accepted) + "," +
               std::to_string(r.proposed) + "\n";
    }
    return out;
}

std::vector<SweepRow> rows_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("csv: empty input");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != kSweepCsvHeader)
        throw std::runtime_error("csv: unexpected header \"" + line + "\"");

    std::vector<SweepRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream fs(line);
        while (std::getline(fs, field, ','))
            fields.push_back(field);
        if (fields.size() != 10)
            throw std::runtime_error("csv: line " + std::to_string(line_no) +
                                     " has " + std::to_string(fields.size()) +
                                     " fields, expected 10");
        try {
            SweepRow r;
            r.n = std::stoull(fields[0]);
            r.seed = std::stoull(fields[1]);
            r.method = fields[2];
            r.max_s = std::stod(fields[3]);
            r.abs_error = std::stod(fields[4]);
            r.delta = std::stod(fields[5]);
            r.residual_max = std::stod(fields[6]);
            r.elapsed_ns = std::stoull(fields[7]);
            r.accepted = std::stoull(fields[8]);
            r.proposed = std::stoull(fields[9]);
            rows.push_back(std::move(r));
        } catch (const std::exception&) {
            throw std::runtime_error("csv: line " + std::to_string(line_no) +
                                     " is malformed");
        }
    }
    return rows;
}

double fit_loglog_slope(const std::vector<SweepRow>& rows, const std::string& method) {
    std::vector<std::uint64_t> ns;
    for (const auto& r : rows)
        if (r.method == method)
            ns.push_back(r.n);
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    if (ns.size() < 2)
        throw std::runtime_error("slope fit needs at least two distinct N for method " +
                                 method);

    std::vector<double> xs, ys;
    for (std::uint64_t n : ns) {
        std::vector<double> secs;
        for (const auto& r : rows)
            if (r.method == method && r.n == n)
                secs.push_back(static_cast<double>(r.elapsed_ns) / 1e9);
        xs.push_back(std::log10(static_cast<double>(n)));
        ys.push_back(std::log10(median(std::move(secs))));
    }

    const double k = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    ConstraintTable table;
    try {
        table = resolve_constraint_source(cfg);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_io;
    }

    const ConstraintValidation v = validate_constraints(table);
    if (!v.valid()) {
        err << "config error: constraint table invalid:\n";
        for (const auto& p : v.problems)
            err << "  " << p << "\n";
        return exit_config;
    }

    SimulationResult r;
    try {
        r = run_simulation(table, cfg.sampler);
    } catch (const std::exception& e) {
        err << "sampling error: " << e.what() << "\n";
        return exit_sampling;
    }

    try {
        std::filesystem::create_directories(cfg.out_dir);
        const Scenario scenario = foulis_randall_product(make_local_scenario(),
                                                         make_local_scenario());
        if (cfg.formats.count(OutputFormat::json)) {
            write_text_file(cfg.out_dir / "scenario.json", dump(scenario_to_json(scenario)));
            write_text_file(cfg.out_dir / "distribution.json",
                            dump(distribution_to_json(r.distribution, scenario)));
            json report = report_to_json(r.report, r.distribution);
            report["run"] = run_metadata(cfg, r);
            write_text_file(cfg.out_dir / "report.json", dump(report));
        }
        if (cfg.formats.count(OutputFormat::csv))
            write_text_file(cfg.out_dir / "distribution.csv",
                            distribution_csv(r.distribution));
        if (cfg.formats.count(OutputFormat::svg))
            write_text_file(cfg.out_dir / "distribution.svg",
                            render_distribution_chart(
                                r.distribution,
                                std::string("weights: ") + preset_display_name(cfg.preset)));
        if (cfg.formats.count(OutputFormat::text))
            write_text_file(cfg.out_dir / "report.txt", report_to_text(r.report));
    } catch (const std::exception& e) {
        err << "io error: " << e.what() << "\n";
        return exit_io;
    }

    out << "source        " << run_source(cfg) << "\n"
        << "method        " << method_name(cfg.sampler.method) << "\n"
        << "accepted      " << r.tally.accepted << " (proposed " << r.tally.proposed
        << ")\n"
        << "max |S|       " << fmt_double(r.report.max_s) << " (analytic "
        << fmt_double(r.analytic_max_s) << ")\n"
        << "delta         " << fmt_double(r.report.delta) << "\n"
        << "elapsed       " << r.elapsed.count() / 1000000.0 << " ms\n"
        << "output dir    " << cfg.out_dir.string() << "\n";
    return exit_ok;
}

namespace {

int sweep_or_bench(const RunConfig& cfg, const SweepOptions& opts, bool is_bench,
                   std::ostream& out, std::ostream& err) {
    if (opts.iteration_counts.empty()) {
        err << "config error: at least one iteration count is required\n";
        return exit_config;
    }
    if (!is_bench &&
        !std::is_sorted(opts.iteration_counts.begin(), opts.iteration_counts.end())) {
        err << "config error: sweep iteration counts must be ascending\n";
        return exit_config;
    }
    if (opts.repeats < 1) {
        err << "config error: repeats must be >= 1\n";
        return exit_config;
    }
    if (opts.methods.empty()) {
        err << "config error: at least one method is required\n";
        return exit_config;
    }

    ConstraintTable table;
    try {
        table = resolve_constraint_source(cfg);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_io;
    }

    const std::vector<SweepRow> rows = run_sweep(table, cfg.sampler, opts, &err);
    if (rows.empty()) {
        err << "sampling error: every row of the "
            << (is_bench ? "bench" : "sweep") << " failed\n";
        return exit_sampling;
    }

    const char* csv_name = is_bench ? "bench.csv" : "sweep.csv";
    const char* svg_name = is_bench ? "bench.svg" : "sweep.svg";
    try {
        std::filesystem::create_directories(cfg.out_dir);
        write_text_file(cfg.out_dir / csv_name, rows_to_csv(rows));
        if (cfg.formats.count(OutputFormat::svg))
            write_text_file(cfg.out_dir / svg_name,
                            render_chart(rows,
                                         is_bench ? ChartMetric::time : ChartMetric::error,
                                         is_bench ? "elapsed time" : "max |S| error"));
    } catch (const std::exception& e) {
        err << "io error: " << e.what() << "\n";
        return exit_io;
    }

    if (is_bench) {
        for (SamplerMethod m : opts.methods) {
            const std::string name = method_name(m);
            // Per-N spread across the repeated identical runs.
            for (const auto& n : opts.iteration_counts) {
                std::vector<double> secs;
                for (const auto& r : rows)
                    if (r.method == name && r.n == n)
                        secs.push_back(static_cast<double>(r.elapsed_ns) / 1e9);
                if (secs.empty())
                    continue;
                const auto [lo, hi] = std::minmax_element(secs.begin(), secs.end());
                out << name << " N=" << n << "  median " << median(secs) << " s  min "
                    << *lo << " s  max " << *hi << " s\n";
            }
            try {
                const double slope = fit_loglog_slope(rows, name);
                out << name << " log-log slope " << slope
                    << (slope <= 1.3 ? "  (<= 1.3: linear-with-slack ok)"
                                     : "  (> 1.3: superlinear growth)")
                    << "\n";
            } catch (const std::exception& e) {
                out << name << " slope unavailable: " << e.what() << "\n";
            }
        }
    } else {
        const TrendSummary trend = sweep_trend(rows);
        for (const auto& p : trend.points)
            out << "N=" << p.n << "  median |max_s - analytic| = "
                << fmt_double(p.median_error) << "\n";
        out << "median error non-increasing: "
            << (trend.non_increasing ? "PASS" : "FAIL") << "\n";
    }
    out << "wrote " << (cfg.out_dir / csv_name).string() << "\n";
    return exit_ok;
}

} // namespace

int cmd_sweep(const RunConfig& cfg, const SweepOptions& opts, std::ostream& out,
              std::ostream& err) {
    return sweep_or_bench(cfg, opts, false, out, err);
}

int cmd_bench(const RunConfig& cfg, const SweepOptions& opts, std::ostream& out,
              std::ostream& err) {
    return sweep_or_bench(cfg, opts, true, out, err);
}

namespace {

struct Mismatch {
    std::string check;
    double stored = 0.0;
    double recomputed = 0.0;
};

bool close(double a, double b) { return std::abs(a - b) <= kVerifyTolerance; }

// First mismatch between a stored numeric array and its recomputation.
template <typename Stored, typename Fresh>
bool compare_array(const std::string& name, const Stored& stored, const Fresh& fresh,
                   Mismatch& m) {
    for (std::size_t i = 0; i < fresh.size(); ++i) {
        if (!close(stored.at(i), fresh[i])) {
            m = {name + "[" + std::to_string(i) + "]", stored.at(i), fresh[i]};
            return false;
        }
    }
    return true;
}

int verify_distribution_doc(const json& j, std::ostream& out, std::ostream& err,
                            const std::string& label) {
    const GlobalDistribution d = distribution_from_json(j);
    const Scenario scenario = foulis_randall_product(make_local_scenario(),
                                                     make_local_scenario());
    const ChshReport r = analyze(d);
    const std::vector<double> sums = hyperedge_weight_sums(d, scenario);
    const std::array<double, 4> corr = {r.correlations.e00, r.correlations.e01,
                                        r.correlations.e10, r.correlations.e11};

    Mismatch m;
    const auto stored_sums = j.at("edge_sums").get<std::vector<double>>();
    if (stored_sums.size() != sums.size()) {
        err << "verify FAILED: edge_sums has " << stored_sums.size()
            << " entries, expected " << sums.size() << "\n";
        return exit_verify;
    }
    if (!compare_array("edge_sums", stored_sums, sums, m) ||
        !compare_array("correlations", j.at("correlations"), corr, m) ||
        !compare_array("s_values", j.at("s_values"), r.s_values, m) ||
        !compare_array("residuals", j.at("residuals"), r.nosignalling_residuals, m)) {
        err << "verify FAILED: " << m.check << " stored " << fmt_double(m.stored)
            << " recomputed " << fmt_double(m.recomputed) << "\n";
        return exit_verify;
    }
    if (!close(j.at("delta").get<double>(), r.delta)) {
        err << "verify FAILED: delta stored " << fmt_double(j.at("delta").get<double>())
            << " recomputed " << fmt_double(r.delta) << "\n";
        return exit_verify;
    }
    out << "verify OK: " << label << "\n";
    return exit_ok;
}

int verify_report_doc(const json& j, std::ostream& out, std::ostream& err,
                      const std::string& label) {
    const auto weights = j.at("weights").get<std::vector<double>>();
    if (weights.size() != 16) {
        err << "verify FAILED: expected 16 weights, got " << weights.size() << "\n";
        return exit_verify;
    }
    GlobalDistribution d;
    std::copy(weights.begin(), weights.end(), d.p.begin());
    const ChshReport r = analyze(d);
    const std::array<double, 4> corr = {r.correlations.e00, r.correlations.e01,
                                        r.correlations.e10, r.correlations.e11};

    Mismatch m;
    if (!compare_array("correlations", j.at("correlations"), corr, m) ||
        !compare_array("s_values", j.at("s_values"), r.s_values, m) ||
        !compare_array("residuals", j.at("residuals"), r.nosignalling_residuals, m)) {
        err << "verify FAILED: " << m.check << " stored " << fmt_double(m.stored)
            << " recomputed " << fmt_double(m.recomputed) << "\n";
        return exit_verify;
    }
    if (!close(j.at("delta").get<double>(), r.delta) ||
        !close(j.at("max_s").get<double>(), r.max_s)) {
        err << "verify FAILED: delta/max_s disagree with recomputation\n";
        return exit_verify;
    }
    const auto violated = j.at("violated").get<std::vector<bool>>();
    const auto corrected = j.at("corrected_tests").get<std::vector<bool>>();
    for (std::size_t i = 0; i < 4; ++i) {
        if (violated.at(i) != r.violated[i]) {
            err << "verify FAILED: violated[" << i << "] stored " << violated.at(i)
                << " recomputed " << r.violated[i] << "\n";
            return exit_verify;
        }
        if (corrected.at(i) != r.corrected_tests[i]) {
            err << "verify FAILED: corrected_tests[" << i << "] stored "
                << corrected.at(i) << " recomputed " << r.corrected_tests[i] << "\n";
            return exit_verify;
        }
    }
    out << "verify OK: " << label << "\n";
    return exit_ok;
}

int verify_scenario_doc(const json& j, std::ostream& out, std::ostream& err,
                        const std::string& label) {
    const Scenario s = scenario_from_json(j);
    const ScenarioStats stats = validate_scenario(s);
    if (!stats.ok()) {
        err << "verify FAILED: " << stats.violations.front() << "\n";
        return exit_verify;
    }
    if (s.vertex_count == 16 && stats.n_edges == 12) {
        for (int card : stats.edge_cardinalities)
            if (card != 4) {
                err << "verify FAILED: composite edge cardinality " << card
                    << ", expected 4\n";
                return exit_verify;
            }
        for (int deg : stats.edges_per_vertex)
            if (deg != 3) {
                err << "verify FAILED: composite vertex degree " << deg
                    << ", expected 3\n";
                return exit_verify;
            }
    }
    out << "verify OK: " << label << "\n";
    return exit_ok;
}

int verify_constraints_doc(const json& j, std::ostream& out, std::ostream& err,
                           const std::string& label) {
    const ConstraintTable c = constraints_from_json(j);
    const ConstraintValidation v = validate_constraints(c);
    if (!v.valid()) {
        err << "verify FAILED: " << v.problems.front() << "\n";
        return exit_verify;
    }
    out << "verify OK: " << label << "\n";
    return exit_ok;
}

// Distribution CSV: 16 rows whose index column matches the bit encoding
// and whose weights are finite and non-negative.
int verify_distribution_csv(const std::string& text, std::ostream& out,
                            std::ostream& err, const std::string& label) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line); // header, already sniffed
    std::array<bool, 16> seen{};
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        ++rows;
        int index = 0, a = 0, b = 0, x = 0, y = 0;
        double weight = 0.0;
        if (std::sscanf(line.c_str(), "%d,%d,%d,%d,%d,%lf", &index, &a, &b, &x, &y,
                        &weight) != 6)
            throw std::runtime_error("malformed row \"" + line + "\"");
        if (index < 0 || index > 15 || seen[static_cast<std::size_t>(index)]) {
            err << "verify FAILED: bad or repeated index " << index << "\n";
            return exit_verify;
        }
        seen[static_cast<std::size_t>(index)] = true;
        if (index != vertex_index(a, b, x, y)) {
            err << "verify FAILED: index " << index << " does not encode (a=" << a
                << ", b=" << b << ", x=" << x << ", y=" << y << ")\n";
            return exit_verify;
        }
        if (!(weight >= 0.0) || !std::isfinite(weight)) {
            err << "verify FAILED: weight " << weight << " at index " << index
                << " is not a finite non-negative value\n";
            return exit_verify;
        }
    }
    if (rows != 16) {
        err << "verify FAILED: expected 16 rows, got " << rows << "\n";
        return exit_verify;
    }
    out << "verify OK: " << label << "\n";
    return exit_ok;
}

} // namespace

int cmd_verify(const std::filesystem::path& file, std::ostream& out, std::ostream& err) {
    json j;
    std::string format;
    try {
        const std::string text = read_text_file(file);
        if (text.rfind("index,a,b,x,y,weight", 0) == 0)
            return verify_distribution_csv(text, out, err,
                                           file.string() + " (distribution csv)");
        j = json::parse(text);
        if (!j.is_object() || !j.contains("format"))
            throw std::runtime_error("document has no \"format\" field");
        format = j.at("format").get<std::string>();
    } catch (const std::exception& e) {
        err << "io error: " << file.string() << ": " << e.what() << "\n";
        return exit_io;
    }

    const std::string label = file.string() + " (" + format + ")";
    try {
        if (format == "epr-distribution")
            return verify_distribution_doc(j, out, err, label);
        if (format == "epr-report")
            return verify_report_doc(j, out, err, label);
        if (format == "epr-scenario")
            return verify_scenario_doc(j, out, err, label);
        if (format == "epr-constraints")
            return verify_constraints_doc(j, out, err, label);
    } catch (const std::exception& e) {
        err << "io error: " << file.string() << ": " << e.what() << "\n";
        return exit_io;
    }
    err << "io error: unknown document format \"" << format << "\"\n";
    return exit_io;
}

int cmd_render(const std::filesystem::path& csv_path, const std::filesystem::path& svg_path,
               ChartMetric metric, const std::string& title, std::ostream& out,
               std::ostream& err) {
    std::vector<SweepRow> rows;
    try {
        rows = rows_from_csv(read_text_file(csv_path));
    } catch (const std::exception& e) {
        err << "io error: " << e.what() << "\n";
        return exit_io;
    }
    try {
        write_text_file(svg_path, render_chart(rows, metric, title));
    } catch (const std::exception& e) {
        err << "io error: " << e.what() << "\n";
        return exit_io;
    }
    out << "wrote " << svg_path.string() << "\n";
    return exit_ok;
}

} // namespace epr::harness

#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hurstlab/csv.hpp"
#include "hurstlab/dfa.hpp"
#include "hurstlab/divisor.hpp"
#include "hurstlab/errors.hpp"
#include "hurstlab/json_io.hpp"
#include "hurstlab/mc.hpp"
#include "hurstlab/series.hpp"
#include "hurstlab/synth.hpp"

namespace hurstlab {

enum class OutputFormat { Csv, Json };

struct EstimateCmd {
    std::string input;
    DivisorPlan plan;
    std::size_t window_start = 0;
    SeriesKind kind = SeriesKind::Prices;
    std::string out;        // empty = stdout
    std::string curve_out;  // optional two-column N,F CSV
};

struct CalibrateCmd {
    std::size_t reps = 5000;
    std::uint64_t seed = 0;
    std::string case_sel = "both";  // a | b | both
    std::string out;
    unsigned threads = 0;
    OutputFormat format = OutputFormat::Csv;
};

struct SweepDCmd {
    std::size_t L = 0;
    std::size_t d_min = 0;
    std::size_t d_max = 0;
    std::size_t min_divisor = kMinBoxSize;
    std::size_t reps = 5000;
    std::uint64_t seed = 0;
    std::string out;
    unsigned threads = 0;
    OutputFormat format = OutputFormat::Csv;
};

struct SweepChoiceCmd {
    std::size_t L = 0;
    std::size_t d = 0;
    std::size_t windows = 5;
    std::size_t min_divisor = 8;
    std::size_t reps = 5000;
    std::uint64_t seed = 0;
    std::string out;
    unsigned threads = 0;
    OutputFormat format = OutputFormat::Csv;
};

struct GenCmd {
    std::size_t n = 0;
    std::string kind = "gaussian";  // gaussian | fgn
    double h = 0.5;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::string out;
};

struct RunConfig {
    std::variant<EstimateCmd, CalibrateCmd, SweepDCmd, SweepChoiceCmd, GenCmd> cmd;
};

/// Thrown by parse_args when --help is requested; carries the help text.
struct HelpRequested {
    std::string text;
};

namespace detail {

inline unsigned default_threads() {
    if (const char* env = std::getenv("HURST_LAB_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return 0;  // resolved to hardware concurrency downstream
}

inline std::string quantile_note() {
    return "empirical quantiles, linear interpolation between order statistics (type 7)";
}

// Provenance headers carry only fields that determine the numbers, so runs
// differing in thread count or output path stay byte-identical.
inline std::string provenance_line(const nlohmann::json& config) {
    return "# " + config.dump() + "\n";
}

inline nlohmann::json summary_to_json(const McSummary& s) {
    nlohmann::json intervals;
    for (const auto& [level, iv] : s.quantile_intervals)
        intervals[format_double(level)] = {iv.lo, iv.hi};
    return nlohmann::json{{"mean", s.mean_h},
                          {"sd", s.sd_h},
                          {"reps", s.r},
                          {"degenerate", s.degenerate_count},
                          {"intervals", intervals}};
}

inline void append_summary_csv(std::string& out, char case_tag, const DivisorPlan& plan,
                               const McSummary& s) {
    const QuantileInterval& q68 = s.quantile_intervals.at(kSigmaLevels[0]);
    const QuantileInterval& q95 = s.quantile_intervals.at(kSigmaLevels[1]);
    const QuantileInterval& q99 = s.quantile_intervals.at(kSigmaLevels[2]);
    out += case_tag;
    out += ',' + std::to_string(plan.window_length) + ',' + std::to_string(plan.count()) + ',' +
           std::to_string(plan.n_min()) + ',' + std::to_string(s.r) + ',' +
           format_double(s.mean_h) + ',' + format_double(s.sd_h) + ',' + format_double(q68.lo) +
           ',' + format_double(q68.hi) + ',' + format_double(q95.lo) + ',' +
           format_double(q95.hi) + ',' + format_double(q99.lo) + ',' + format_double(q99.hi) +
           ',' + std::to_string(s.degenerate_count) + '\n';
}

}  // namespace detail

// Renderers (pure, to keep output formatting testable) -----------------------

inline std::string render_calibrate_csv(const CalibrationTables& tables, const CalibrateCmd& cmd) {
    nlohmann::json config{{"tool", "hurstlab"},    {"subcommand", "calibrate"},
                          {"reps", cmd.reps},      {"seed", cmd.seed},
                          {"case", cmd.case_sel},  {"source", "gaussian"},
                          {"levels", kSigmaLevels}, {"quantile", detail::quantile_note()}};
    std::string out = detail::provenance_line(config);
    out += "case,L,d,n_min,reps,mean,sd,lo68,hi68,lo95,hi95,lo99,hi99,degenerate\n";
    for (const CalibrationRow& row : tables.case_a)
        detail::append_summary_csv(out, 'a', row.plan, row.summary);
    for (const CalibrationRow& row : tables.case_b)
        detail::append_summary_csv(out, 'b', row.plan, row.summary);
    return out;
}

inline std::string render_calibrate_json(const CalibrationTables& tables,
                                         const CalibrateCmd& cmd) {
    nlohmann::json rows = nlohmann::json::array();
    for (const std::vector<CalibrationRow>* table : {&tables.case_a, &tables.case_b})
        for (const CalibrationRow& row : *table) {
            nlohmann::json j = detail::summary_to_json(row.summary);
            j["case"] = std::string(1, row.case_tag);
            j["L"] = row.plan.window_length;
            j["d"] = row.plan.count();
            j["n_min"] = row.plan.n_min();
            rows.push_back(std::move(j));
        }
    nlohmann::json doc{{"tool", "hurstlab"},
                       {"subcommand", "calibrate"},
                       {"reps", cmd.reps},
                       {"seed", cmd.seed},
                       {"case", cmd.case_sel},
                       {"source", "gaussian"},
                       {"quantile", detail::quantile_note()},
                       {"rows", std::move(rows)}};
    return doc.dump(2) + "\n";
}

inline std::string render_sweep_csv(const SweepResult& result, const nlohmann::json& config,
                                    const std::string& x_name) {
    std::string out = detail::provenance_line(config);
    out += x_name + ",reps,mean,sd\n";
    const std::string reps = config.contains("reps") ? config.at("reps").dump() : "0";
    for (const SweepRow& row : result.rows)
        out += format_double(row.x) + ',' + reps + ',' + format_double(row.mean) + ',' +
               format_double(row.sd) + '\n';
    if (result.fit)
        out += "fit," + format_double(result.fit->slope) + ',' +
               format_double(result.fit->intercept) + ',' + format_double(result.fit->r_squared) +
               '\n';
    return out;
}

inline std::string render_sweep_json(const SweepResult& result, nlohmann::json config,
                                     const std::string& x_name) {
    nlohmann::json rows = nlohmann::json::array();
    for (const SweepRow& row : result.rows)
        rows.push_back({{x_name, row.x}, {"mean", row.mean}, {"sd", row.sd},
                        {"plan", row.plan_label}});
    config["rows"] = std::move(rows);
    if (result.fit)
        config["fit"] = {{"slope", result.fit->slope},
                         {"intercept", result.fit->intercept},
                         {"r_squared", result.fit->r_squared}};
    return config.dump(2) + "\n";
}

inline std::string render_gen_csv(const ReturnSeries& series, const GenCmd& cmd) {
    nlohmann::json config{{"tool", "hurstlab"}, {"subcommand", "gen"}, {"kind", cmd.kind},
                          {"n", cmd.n},         {"seed", cmd.seed},    {"stream", cmd.stream}};
    if (cmd.kind == "fgn") config["h"] = cmd.h;
    std::string out = detail::provenance_line(config);
    for (double v : series.values()) out += format_double(v) + '\n';
    return out;
}

inline std::string render_curve_csv(const FluctuationCurve& curve) {
    std::string out = "# " + nlohmann::json{{"tool", "hurstlab"},
                                            {"subcommand", "estimate"},
                                            {"plan", curve.plan_label}}
                                 .dump() +
                      "\nN,F\n";
    for (const auto& [n, f] : curve.points)
        out += std::to_string(n) + ',' + format_double(f) + '\n';
    return out;
}

// Argument parsing ------------------------------------------------------------

/// Parses argv (program name excluded) into a validated RunConfig.
/// Throws HelpRequested for --help and UsageError subclasses on bad input;
/// every parameter is validated here, before any computation starts.
inline RunConfig parse_args(std::vector<std::string> args) {
    CLI::App app{"DFA Hurst-exponent estimation with Monte Carlo confidence intervals"};
    app.name("hurstlab");
    app.require_subcommand(1);
    // --h is a real option on `gen`, so only the long form requests help
    app.set_help_flag("--help", "print usage");

    const unsigned env_threads = detail::default_threads();

    // estimate
    auto* est = app.add_subcommand("estimate", "Estimate H for one window of a CSV series");
    std::string est_input, est_plan, est_kind = "prices", est_out, est_curve_out;
    std::size_t est_window_start = 0;
    std::optional<std::size_t> est_window_length;
    est->add_option("--input", est_input, "input CSV (single column, or timestamp,value)")
        ->required();
    est->add_option("--plan", est_plan,
                    "divisor plan: caseA:L | caseB:L | explicit:N1,N2,... | lowest:d=D,min=M")
        ->required();
    est->add_option("--L", est_window_length, "window length (required for explicit/lowest plans)");
    est->add_option("--window-start", est_window_start, "0-based start index into the returns");
    est->add_option("--kind", est_kind, "prices | increments")
        ->check(CLI::IsMember({"prices", "increments"}));
    est->add_option("--out", est_out, "write the JSON result here instead of stdout");
    est->add_option("--curve-out", est_curve_out, "also write the (N, F) curve as CSV");

    // calibrate
    auto* cal = app.add_subcommand("calibrate",
                                   "Monte Carlo mean/SD/intervals for the case A and B plans");
    CalibrateCmd cal_cmd;
    cal_cmd.threads = env_threads;
    cal->add_option("--reps", cal_cmd.reps, "replications per configuration (default 5000)");
    cal->add_option("--seed", cal_cmd.seed, "master seed")->required();
    cal->add_option("--case", cal_cmd.case_sel, "a | b | both")
        ->check(CLI::IsMember({"a", "b", "both"}));
    cal->add_option("--out", cal_cmd.out, "output file")->required();
    cal->add_option("--threads", cal_cmd.threads, "worker threads (default: all cores)");
    std::string cal_format = "csv";
    cal->add_option("--format", cal_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    // sweep-d
    auto* swd = app.add_subcommand("sweep-d", "SD of H as a function of the divisor count");
    SweepDCmd swd_cmd;
    swd_cmd.threads = env_threads;
    swd->add_option("--L", swd_cmd.L, "window length")->required();
    swd->add_option("--d-min", swd_cmd.d_min, "smallest divisor count")->required();
    swd->add_option("--d-max", swd_cmd.d_max, "largest divisor count")->required();
    swd->add_option("--min-divisor", swd_cmd.min_divisor,
                    "smallest eligible divisor (default 4)");
    swd->add_option("--reps", swd_cmd.reps, "replications per point (default 5000)");
    swd->add_option("--seed", swd_cmd.seed, "master seed")->required();
    swd->add_option("--out", swd_cmd.out, "output file")->required();
    swd->add_option("--threads", swd_cmd.threads, "worker threads");
    std::string swd_format = "csv";
    swd->add_option("--format", swd_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    // sweep-choice
    auto* swc = app.add_subcommand("sweep-choice",
                                   "SD of H as a function of which consecutive divisors are used");
    SweepChoiceCmd swc_cmd;
    swc_cmd.threads = env_threads;
    swc->add_option("--L", swc_cmd.L, "window length")->required();
    swc->add_option("--d", swc_cmd.d, "divisors per window")->required();
    swc->add_option("--windows", swc_cmd.windows, "number of windows (default 5)");
    swc->add_option("--min-divisor", swc_cmd.min_divisor,
                    "smallest divisor the windows may use (default 8)");
    swc->add_option("--reps", swc_cmd.reps, "replications per window (default 5000)");
    swc->add_option("--seed", swc_cmd.seed, "master seed")->required();
    swc->add_option("--out", swc_cmd.out, "output file")->required();
    swc->add_option("--threads", swc_cmd.threads, "worker threads");
    std::string swc_format = "csv";
    swc->add_option("--format", swc_format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    // gen
    auto* gen = app.add_subcommand("gen", "Write a synthetic series as single-column CSV");
    GenCmd gen_cmd;
    gen->add_option("--n", gen_cmd.n, "number of values")->required();
    gen->add_option("--kind", gen_cmd.kind, "gaussian | fgn")
        ->check(CLI::IsMember({"gaussian", "fgn"}));
    gen->add_option("--h", gen_cmd.h, "Hurst exponent in (0,1), fgn only");
    gen->add_option("--seed", gen_cmd.seed, "master seed")->required();
    gen->add_option("--stream", gen_cmd.stream, "stream index (default 0)");
    gen->add_option("--out", gen_cmd.out, "output file")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::RequiredError& e) {
        throw MissingRequired(e.what());
    } catch (const CLI::ExtrasError& e) {
        throw UnknownFlag(e.what());
    } catch (const CLI::ConversionError& e) {
        throw InvalidValue(e.what());
    } catch (const CLI::ValidationError& e) {
        throw InvalidValue(e.what());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    const auto as_format = [](const std::string& f) {
        return f == "json" ? OutputFormat::Json : OutputFormat::Csv;
    };

    if (app.got_subcommand(est)) {
        EstimateCmd cmd;
        cmd.input = est_input;
        cmd.window_start = est_window_start;
        cmd.kind = est_kind == "increments" ? SeriesKind::Increments : SeriesKind::Prices;
        cmd.out = est_out;
        cmd.curve_out = est_curve_out;
        try {
            cmd.plan = resolve_plan_spec(parse_plan_spec(est_plan), est_window_length);
        } catch (const Error& e) {
            throw InvalidValue(std::string("--plan: ") + e.what());
        }
        return RunConfig{std::move(cmd)};
    }
    if (app.got_subcommand(cal)) {
        cal_cmd.format = as_format(cal_format);
        if (cal_cmd.reps < 100)
            throw InvalidValue("--reps: calibration needs at least 100 replications");
        return RunConfig{cal_cmd};
    }
    if (app.got_subcommand(swd)) {
        swd_cmd.format = as_format(swd_format);
        if (swd_cmd.d_min < 2 || swd_cmd.d_min > swd_cmd.d_max)
            throw InvalidValue("--d-min/--d-max: expected 2 <= d-min <= d-max, got [" +
                               std::to_string(swd_cmd.d_min) + ", " +
                               std::to_string(swd_cmd.d_max) + "]");
        if (swd_cmd.reps < 2) throw InvalidValue("--reps: need at least 2 replications");
        try {
            resolve_plan(swd_cmd.L, LowestCount{swd_cmd.d_max, swd_cmd.min_divisor});
        } catch (const Error& e) {
            throw InvalidValue(std::string("--d-max: ") + e.what());
        }
        return RunConfig{swd_cmd};
    }
    if (app.got_subcommand(swc)) {
        swc_cmd.format = as_format(swc_format);
        if (swc_cmd.reps < 2) throw InvalidValue("--reps: need at least 2 replications");
        const std::size_t eligible = eligible_divisors(swc_cmd.L, swc_cmd.min_divisor).size();
        if (swc_cmd.d < 2 || eligible < swc_cmd.d)
            throw InvalidValue("--d: L=" + std::to_string(swc_cmd.L) + " has " +
                               std::to_string(eligible) + " eligible divisors, need d in [2, " +
                               std::to_string(eligible) + "]");
        if (swc_cmd.windows < 2 || swc_cmd.windows > eligible - swc_cmd.d + 1)
            throw InvalidValue("--windows: must lie in [2, " +
                               std::to_string(eligible - swc_cmd.d + 1) + "]");
        return RunConfig{swc_cmd};
    }
    // gen
    if (gen_cmd.n < 1) throw InvalidValue("--n: need at least 1 value");
    if (gen_cmd.kind == "fgn") {
        if (!gen->count("--h"))
            throw MissingRequired("--h is required for --kind fgn");
        if (!(gen_cmd.h > 0.0 && gen_cmd.h < 1.0))
            throw InvalidValue("--h: Hurst exponent must lie in (0, 1)");
    }
    return RunConfig{gen_cmd};
}

// Execution -------------------------------------------------------------------

namespace detail {

inline void write_or_print(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file_atomic(out_path, content);
}

inline void note_runtime(const std::string& what, std::chrono::steady_clock::time_point begin) {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
    std::fprintf(stderr, "hurstlab: %s in %.1f s\n", what.c_str(), secs);
}

inline int run_estimate(const EstimateCmd& cmd) {
    const CsvSeries csv = read_series_csv(std::filesystem::path(cmd.input));
    if (csv.values.empty()) throw Error("input '" + cmd.input + "' contains no values");
    if (cmd.kind == SeriesKind::Prices)
        for (std::size_t i = 0; i < csv.values.size(); ++i)
            if (csv.values[i] <= 0.0)
                throw Error("input line " + std::to_string(csv.line_numbers[i]) +
                            ": non-positive price " + format_double(csv.values[i]));

    if (cmd.plan.n_min() < 8)
        std::fprintf(stderr,
                     "hurstlab: warning: plan '%s' uses box sizes below 8 (N_min=%zu); "
                     "divisors that small are noisy\n",
                     cmd.plan.label.c_str(), cmd.plan.n_min());

    const RawSeries raw = cmd.kind == SeriesKind::Prices ? RawSeries::prices(csv.values)
                                                         : RawSeries::increments(csv.values);
    const ReturnSeries returns = to_returns(raw);
    const Window window{cmd.window_start, cmd.plan.window_length};
    const Profile profile = build_profile(returns, window);
    const FluctuationCurve curve = fluctuation_curve(profile, cmd.plan);
    const HurstEstimate est = fit_hurst(curve);

    if (!cmd.curve_out.empty()) write_file_atomic(cmd.curve_out, render_curve_csv(curve));
    write_or_print(cmd.out, estimate_to_json(est, curve).dump(2) + "\n");
    return 0;
}

inline int run_calibrate(const CalibrateCmd& cmd) {
    const auto begin = std::chrono::steady_clock::now();
    CalibrationTables tables;
    if (cmd.case_sel == "a" || cmd.case_sel == "both")
        for (int n = 6; n <= 13; ++n) {
            McConfig cfg{case_a_plan(n), cmd.reps, cmd.seed, McSource::gaussian(), cmd.threads};
            tables.case_a.push_back(CalibrationRow{'a', cfg.plan, run_mc(cfg)});
        }
    if (cmd.case_sel == "b" || cmd.case_sel == "both")
        for (int k = 1; k <= 8; ++k) {
            McConfig cfg{case_b_plan(k), cmd.reps, cmd.seed, McSource::gaussian(), cmd.threads};
            tables.case_b.push_back(CalibrationRow{'b', cfg.plan, run_mc(cfg)});
        }
    const std::string content = cmd.format == OutputFormat::Json
                                    ? render_calibrate_json(tables, cmd)
                                    : render_calibrate_csv(tables, cmd);
    write_or_print(cmd.out, content);
    note_runtime(std::to_string(tables.case_a.size() + tables.case_b.size()) +
                     " configurations x " + std::to_string(cmd.reps) + " replications",
                 begin);
    return 0;
}

inline int run_sweep_d(const SweepDCmd& cmd) {
    const auto begin = std::chrono::steady_clock::now();
    if (cmd.min_divisor < 8)
        std::fprintf(stderr,
                     "hurstlab: note: sweep uses divisors down to %zu; values below 8 are "
                     "noisy by design\n",
                     cmd.min_divisor);
    const SweepResult result = sweep_divisor_count(cmd.L, cmd.d_min, cmd.d_max, cmd.reps,
                                                   cmd.seed, cmd.threads, cmd.min_divisor);
    nlohmann::json config{{"tool", "hurstlab"},
                          {"subcommand", "sweep-d"},
                          {"L", cmd.L},
                          {"d_min", cmd.d_min},
                          {"d_max", cmd.d_max},
                          {"min_divisor", cmd.min_divisor},
                          {"reps", cmd.reps},
                          {"seed", cmd.seed},
                          {"source", "gaussian"}};
    const std::string content = cmd.format == OutputFormat::Json
                                    ? render_sweep_json(result, config, "d")
                                    : render_sweep_csv(result, config, "d");
    write_or_print(cmd.out, content);
    note_runtime(std::to_string(result.rows.size()) + " divisor counts x " +
                     std::to_string(cmd.reps) + " replications",
                 begin);
    return 0;
}

inline int run_sweep_choice(const SweepChoiceCmd& cmd) {
    const auto begin = std::chrono::steady_clock::now();
    const SweepResult result = sweep_divisor_choice(cmd.L, cmd.d, cmd.windows, cmd.reps,
                                                    cmd.seed, cmd.threads, cmd.min_divisor);
    if (!result.rows.empty() && result.rows.front().x < 8)
        std::fprintf(stderr, "hurstlab: note: the lowest window starts at divisor %g; values "
                             "below 8 are noisy by design\n",
                     result.rows.front().x);
    nlohmann::json config{{"tool", "hurstlab"},
                          {"subcommand", "sweep-choice"},
                          {"L", cmd.L},
                          {"d", cmd.d},
                          {"windows", cmd.windows},
                          {"min_divisor", cmd.min_divisor},
                          {"reps", cmd.reps},
                          {"seed", cmd.seed},
                          {"source", "gaussian"}};
    const std::string content = cmd.format == OutputFormat::Json
                                    ? render_sweep_json(result, config, "n_min")
                                    : render_sweep_csv(result, config, "n_min");
    write_or_print(cmd.out, content);
    note_runtime(std::to_string(result.rows.size()) + " windows x " + std::to_string(cmd.reps) +
                     " replications",
                 begin);
    return 0;
}

inline int run_gen(const GenCmd& cmd) {
    const SeedSpec seed{cmd.seed, cmd.stream};
    const ReturnSeries series =
        cmd.kind == "fgn" ? fgn_series(cmd.n, cmd.h, seed) : gaussian_series(cmd.n, seed);
    write_file_atomic(cmd.out, render_gen_csv(series, cmd));
    return 0;
}

}  // namespace detail

/// Dispatches a validated config.  Throws hurstlab::Error on domain
/// failures; the caller maps exceptions to exit codes.
inline int run(const RunConfig& cfg) {
    return std::visit(
        [](const auto& cmd) -> int {
            using T = std::decay_t<decltype(cmd)>;
            if constexpr (std::is_same_v<T, EstimateCmd>) return detail::run_estimate(cmd);
            if constexpr (std::is_same_v<T, CalibrateCmd>) return detail::run_calibrate(cmd);
            if constexpr (std::is_same_v<T, SweepDCmd>) return detail::run_sweep_d(cmd);
            if constexpr (std::is_same_v<T, SweepChoiceCmd>) return detail::run_sweep_choice(cmd);
            if constexpr (std::is_same_v<T, GenCmd>) return detail::run_gen(cmd);
        },
        cfg.cmd);
}

/// Exit codes: 0 success, 1 domain error, 2 usage error.
inline int cli_main(const std::vector<std::string>& args) {
    try {
        return run(parse_args(args));
    } catch (const HelpRequested& help) {
        std::cout << help.text;
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "hurstlab: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "hurstlab: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "hurstlab: " << e.what() << '\n';
        return 1;
    }
}

inline int cli_main(int argc, const char* const* argv) {
    return cli_main(std::vector<std::string>(argv + 1, argv + argc));
}

}  // namespace hurstlab

#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hurstlab/dfa.hpp"
#include "hurstlab/divisor.hpp"
#include "hurstlab/errors.hpp"
#include "hurstlab/synth.hpp"

namespace hurstlab {

/// The 3-sigma-law confidence levels, realized as empirical quantiles.
inline constexpr std::array<double, 3> kSigmaLevels = {0.683, 0.955, 0.997};

struct QuantileInterval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
};

/// Per-configuration Monte Carlo statistics of the H distribution.
struct McSummary {
    double mean_h = 0.0;
    double sd_h = 0.0;  // sample SD, denominator (effective - 1)
    std::map<double, QuantileInterval> quantile_intervals;
    std::size_t r = 0;  // replications requested
    std::size_t degenerate_count = 0;

    std::size_t effective() const { return r - degenerate_count; }
};

enum class SourceKind { Gaussian, Fgn };

/// Synthetic window source for the Monte Carlo engine.
struct McSource {
    SourceKind kind = SourceKind::Gaussian;
    double h_true = 0.5;  // used only for Fgn

    static McSource gaussian() { return McSource{SourceKind::Gaussian, 0.5}; }
    static McSource fgn(double h_true) { return McSource{SourceKind::Fgn, h_true}; }
};

struct McConfig {
    DivisorPlan plan;
    std::size_t replications = 0;
    std::uint64_t master_seed = 0;
    McSource source = McSource::gaussian();
    unsigned threads = 0;  // 0 = hardware concurrency
};

// Quantiles ---------------------------------------------------------------

/// Empirical quantile with linear interpolation between order statistics
/// (the "type 7" convention): index h = (n-1)p into the sorted sample.
inline double empirical_quantile(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) throw EmptySamples("quantile of an empty sample");
    if (p <= 0.0) return sorted.front();
    if (p >= 1.0) return sorted.back();
    const double pos = static_cast<double>(sorted.size() - 1) * p;
    const std::size_t lo = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(lo);
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

/// Central interval per level p: quantiles at (1-p)/2 and (1+p)/2.
/// Intervals for increasing levels are nested by construction.
inline std::map<double, QuantileInterval> quantile_intervals(std::vector<double> samples,
                                                             const std::vector<double>& levels) {
    if (samples.empty()) throw EmptySamples("quantile intervals of an empty sample");
    for (double p : levels)
        if (!(p > 0.0 && p < 1.0))
            throw OutOfRange("confidence level must lie in (0, 1), got " + std::to_string(p));
    std::sort(samples.begin(), samples.end());
    std::map<double, QuantileInterval> out;
    for (double p : levels)
        out[p] = QuantileInterval{empirical_quantile(samples, (1.0 - p) / 2.0),
                                  empirical_quantile(samples, (1.0 + p) / 2.0)};
    return out;
}

// Parallel replication loop ------------------------------------------------

namespace detail {

/// Runs fn(i) for i in [0, count) on up to `threads` workers.  Work items
/// are claimed from an atomic counter; callers must make fn(i) write only
/// to slot i so the result is identical for any worker count.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    unsigned hw = threads != 0 ? threads : std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const std::size_t workers = std::min<std::size_t>(hw, count);

    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        constexpr std::size_t chunk = 8;
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t begin = next.fetch_add(chunk);
            if (begin >= count) break;
            const std::size_t end = std::min(begin + chunk, count);
            try {
                for (std::size_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

/// Monte Carlo core over an arbitrary window drawer; replication r
/// (1-based) must draw with stream_index = r.  Exposed for tests that need
/// a degenerate source.
template <typename Drawer>
McSummary run_mc_draws(const DivisorPlan& plan, std::size_t replications, unsigned threads,
                       Drawer&& draw) {
    if (replications < 2)
        throw OutOfRange("Monte Carlo needs at least 2 replications, got " +
                         std::to_string(replications));

    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> h(replications, nan);
    const Window window{0, plan.window_length};

    parallel_for(replications, threads, [&](std::size_t i) {
        const ReturnSeries series = draw(static_cast<std::uint64_t>(i + 1));
        try {
            h[i] = dfa_estimate(series, window, plan).h;
        } catch (const DegenerateFluctuation&) {
            // excluded and counted below
        }
    });

    McSummary summary;
    summary.r = replications;

    std::vector<double> effective;
    effective.reserve(replications);
    for (double v : h) {
        if (std::isnan(v))
            ++summary.degenerate_count;
        else
            effective.push_back(v);
    }
    if (effective.empty())
        throw AllDegenerate("every replication produced a degenerate fluctuation");

    double sum = 0.0;
    for (double v : effective) sum += v;
    summary.mean_h = sum / static_cast<double>(effective.size());

    if (effective.size() > 1) {
        double ss = 0.0;
        for (double v : effective) {
            const double d = v - summary.mean_h;
            ss += d * d;
        }
        summary.sd_h = std::sqrt(ss / static_cast<double>(effective.size() - 1));
    } else {
        summary.sd_h = std::numeric_limits<double>::quiet_NaN();
    }

    summary.quantile_intervals = quantile_intervals(
        std::move(effective), std::vector<double>(kSigmaLevels.begin(), kSigmaLevels.end()));
    return summary;
}

}  // namespace detail

/// Replicates dfa_estimate over cfg.replications independent windows and
/// summarizes the empirical H distribution.  Replication r uses
/// stream_index r under cfg.master_seed, so the result is bit-identical
/// for any thread count.
inline McSummary run_mc(const McConfig& cfg) {
    if (cfg.source.kind == SourceKind::Fgn) {
        const FgnGenerator gen(cfg.plan.window_length, cfg.source.h_true);
        return detail::run_mc_draws(cfg.plan, cfg.replications, cfg.threads,
                                    [&](std::uint64_t r) {
                                        return gen.sample(SeedSpec{cfg.master_seed, r});
                                    });
    }
    return detail::run_mc_draws(cfg.plan, cfg.replications, cfg.threads, [&](std::uint64_t r) {
        return gaussian_series(cfg.plan.window_length, SeedSpec{cfg.master_seed, r});
    });
}

// Calibration tables --------------------------------------------------------

struct CalibrationRow {
    char case_tag = 'a';
    DivisorPlan plan;
    McSummary summary;
};

struct CalibrationTables {
    std::vector<CalibrationRow> case_a;
    std::vector<CalibrationRow> case_b;
};

/// Runs the Monte Carlo over all eight case A and all eight case B plans
/// with a Gaussian source; rows come out in table order (ascending L).
/// Every configuration reuses the same master seed, so replication r sees
/// the same underlying streams across configurations.
inline CalibrationTables calibrate_tables(std::size_t replications, std::uint64_t master_seed,
                                          unsigned threads = 0) {
    if (replications < 100)
        throw OutOfRange("calibration needs at least 100 replications, got " +
                         std::to_string(replications));
    CalibrationTables tables;
    for (int n = 6; n <= 13; ++n) {
        McConfig cfg{case_a_plan(n), replications, master_seed, McSource::gaussian(), threads};
        tables.case_a.push_back(CalibrationRow{'a', cfg.plan, run_mc(cfg)});
    }
    for (int k = 1; k <= 8; ++k) {
        McConfig cfg{case_b_plan(k), replications, master_seed, McSource::gaussian(), threads};
        tables.case_b.push_back(CalibrationRow{'b', cfg.plan, run_mc(cfg)});
    }
    return tables;
}

// Parameter sweeps -----------------------------------------------------------

struct SweepRow {
    double x = 0.0;  // divisor count d, or the window's smallest divisor N_1
    double mean = 0.0;
    double sd = 0.0;
    std::string plan_label;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::optional<LinearFit> fit;  // OLS of sd against x, when >= 2 rows
};

/// SD of H as a function of the divisor count d: one Monte Carlo run per d
/// with the d smallest eligible divisors >= min_divisor.
inline SweepResult sweep_divisor_count(std::size_t L, std::size_t d_min, std::size_t d_max,
                                       std::size_t replications, std::uint64_t master_seed,
                                       unsigned threads = 0,
                                       std::size_t min_divisor = kMinBoxSize) {
    if (d_min < 2 || d_min > d_max)
        throw OutOfRange("divisor-count range [" + std::to_string(d_min) + ", " +
                         std::to_string(d_max) + "] is empty or starts below 2");
    SweepResult result;
    for (std::size_t d = d_min; d <= d_max; ++d) {
        McConfig cfg{resolve_plan(L, LowestCount{d, min_divisor}), replications, master_seed,
                     McSource::gaussian(), threads};
        const McSummary s = run_mc(cfg);
        result.rows.push_back(SweepRow{static_cast<double>(d), s.mean_h, s.sd_h, cfg.plan.label});
    }
    if (result.rows.size() >= 2) {
        std::vector<double> xs, ys;
        for (const SweepRow& row : result.rows) {
            xs.push_back(row.x);
            ys.push_back(row.sd);
        }
        result.fit = detail::linear_fit(xs, ys);
    }
    return result;
}

/// SD of H as a function of which d consecutive divisors are used: window
/// start ranks are spaced as evenly as possible from the lowest window to
/// the highest.  Rows are labeled by each window's smallest divisor.
/// Ranking defaults to the divisors >= 8, the floor the reference
/// calibration uses; pass min_divisor = 4 to let the lowest window go lower.
inline SweepResult sweep_divisor_choice(std::size_t L, std::size_t d, std::size_t n_windows,
                                        std::size_t replications, std::uint64_t master_seed,
                                        unsigned threads = 0, std::size_t min_divisor = 8) {
    const std::size_t eligible = eligible_divisors(L, min_divisor).size();
    if (eligible < d)
        throw NotEnoughDivisors("L=" + std::to_string(L) + " has " + std::to_string(eligible) +
                                " eligible divisors, need " + std::to_string(d));
    const std::size_t max_start = eligible - d + 1;
    if (n_windows < 2 || n_windows > max_start)
        throw NotEnoughDivisors("cannot place " + std::to_string(n_windows) +
                                " windows over start ranks 1.." + std::to_string(max_start));

    SweepResult result;
    for (std::size_t i = 0; i < n_windows; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n_windows - 1);
        const std::size_t rank =
            1 + static_cast<std::size_t>(std::llround(t * static_cast<double>(max_start - 1)));
        McConfig cfg{resolve_plan(L, ConsecutiveWindow{rank, d, min_divisor}), replications,
                     master_seed, McSource::gaussian(), threads};
        const McSummary s = run_mc(cfg);
        result.rows.push_back(
            SweepRow{static_cast<double>(cfg.plan.n_min()), s.mean_h, s.sd_h, cfg.plan.label});
    }
    return result;
}

}  // namespace hurstlab

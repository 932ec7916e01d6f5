#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hurstlab/divisor.hpp"
#include "hurstlab/errors.hpp"
#include "hurstlab/series.hpp"

namespace hurstlab {

/// Fluctuation values (N_i, F(N_i)); the input to the log-log fit.
struct FluctuationCurve {
    std::vector<std::pair<std::size_t, double>> points;
    std::string plan_label;
};

/// Slope/intercept/R^2 of an ordinary least-squares line.
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// The fitted Hurst exponent with its fit diagnostics.
struct HurstEstimate {
    double h = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::vector<double> residuals;  // ln F - fitted, in curve order
    std::string plan_label;

    std::size_t n_points() const { return residuals.size(); }
};

namespace detail {

// OLS line a + b*t over x[0..n-1] with local time t = 1..n.  The moment
// sums over t are closed-form; everything stays exact in double for the
// box sizes in play (n <= 8192).
inline void box_line_fit(const double* x, std::size_t n, double& a, double& b) {
    const double nn = static_cast<double>(n);
    const double st = 0.5 * nn * (nn + 1.0);
    const double stt = nn * (nn + 1.0) * (2.0 * nn + 1.0) / 6.0;
    double sx = 0.0, stx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        stx += static_cast<double>(i + 1) * x[i];
    }
    const double denom = nn * stt - st * st;  // n^2 (n^2 - 1) / 12
    b = (nn * stx - st * sx) / denom;
    a = (sx - b * st) / nn;
}

inline void check_box_size(const Profile& p, std::size_t box) {
    if (box < kMinBoxSize)
        throw BoxTooSmall("box size " + std::to_string(box) + " is below the minimum of " +
                          std::to_string(kMinBoxSize));
    if (box == 0 || p.window_length() % box != 0)
        throw NotADivisor("box size " + std::to_string(box) + " does not divide L=" +
                          std::to_string(p.window_length()));
}

/// Centered two-pass OLS of y on x with the coefficient of determination.
inline LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double xm = 0.0, ym = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        xm += x[i];
        ym += y[i];
    }
    xm /= static_cast<double>(n);
    ym /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - xm;
        const double dy = y[i] - ym;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }

    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = ym - fit.slope * xm;

    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = y[i] - (fit.intercept + fit.slope * x[i]);
        ss_res += e * e;
    }
    fit.r_squared = (syy > 0.0) ? 1.0 - ss_res / syy : 1.0;
    if (fit.r_squared < 0.0) fit.r_squared = 0.0;
    if (fit.r_squared > 1.0) fit.r_squared = 1.0;
    return fit;
}

}  // namespace detail

/// Partitions the profile into L/N consecutive boxes, removes the OLS line
/// within each box, and returns the concatenated residuals X(t) - Y(t).
inline std::vector<double> box_detrend_residuals(const Profile& p, std::size_t box) {
    detail::check_box_size(p, box);
    const std::vector<double>& x = p.values();
    std::vector<double> out(x.size());
    for (std::size_t begin = 0; begin < x.size(); begin += box) {
        double a, b;
        detail::box_line_fit(x.data() + begin, box, a, b);
        for (std::size_t i = 0; i < box; ++i)
            out[begin + i] = x[begin + i] - (a + b * static_cast<double>(i + 1));
    }
    return out;
}

/// F(N) = sqrt( (1/L) sum_t [X(t) - Y(t)]^2 ), the root-mean-square of the
/// box-detrended profile with denominator L (no degrees-of-freedom
/// correction).  Throws DegenerateFluctuation when the residual is zero to
/// within 1e-12 of the profile's magnitude, since log F is undefined there.
inline double fluctuation(const Profile& p, std::size_t box) {
    detail::check_box_size(p, box);
    const std::vector<double>& x = p.values();
    double ss = 0.0;
    double max_abs = 0.0;
    for (std::size_t begin = 0; begin < x.size(); begin += box) {
        double a, b;
        detail::box_line_fit(x.data() + begin, box, a, b);
        for (std::size_t i = 0; i < box; ++i) {
            const double r = x[begin + i] - (a + b * static_cast<double>(i + 1));
            ss += r * r;
            max_abs = std::max(max_abs, std::abs(x[begin + i]));
        }
    }
    const double f = std::sqrt(ss / static_cast<double>(x.size()));
    if (f <= 1e-12 * max_abs || f == 0.0)
        throw DegenerateFluctuation("F(" + std::to_string(box) +
                                    ") vanished; the profile is (piecewise) linear");
    return f;
}

/// Evaluates F over every box size in the plan.
inline FluctuationCurve fluctuation_curve(const Profile& p, const DivisorPlan& plan) {
    if (p.window_length() != plan.window_length)
        throw NotADivisor("plan '" + plan.label + "' expects L=" +
                          std::to_string(plan.window_length) + ", profile has L=" +
                          std::to_string(p.window_length()));
    FluctuationCurve curve;
    curve.plan_label = plan.label;
    curve.points.reserve(plan.box_sizes.size());
    for (std::size_t box : plan.box_sizes) curve.points.emplace_back(box, fluctuation(p, box));
    return curve;
}

/// OLS fit of ln F against ln N; the slope is the Hurst estimate.
inline HurstEstimate fit_hurst(const FluctuationCurve& curve) {
    if (curve.points.size() < 2)
        throw TooFewPoints("log-log fit needs at least 2 points, got " +
                           std::to_string(curve.points.size()));
    std::vector<double> ln_n(curve.points.size()), ln_f(curve.points.size());
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        ln_n[i] = std::log(static_cast<double>(curve.points[i].first));
        ln_f[i] = std::log(curve.points[i].second);
    }
    const LinearFit fit = detail::linear_fit(ln_n, ln_f);

    HurstEstimate est;
    est.h = fit.slope;
    est.intercept = fit.intercept;
    est.r_squared = fit.r_squared;
    est.plan_label = curve.plan_label;
    est.residuals.resize(curve.points.size());
    for (std::size_t i = 0; i < curve.points.size(); ++i)
        est.residuals[i] = ln_f[i] - (fit.intercept + fit.slope * ln_n[i]);
    return est;
}

/// End-to-end DFA: profile -> fluctuation at every N_i -> log-log fit.
inline HurstEstimate dfa_estimate(const ReturnSeries& r, Window window,
                                  const DivisorPlan& plan) {
    if (window.length != plan.window_length)
        throw WindowOutOfBounds("window length " + std::to_string(window.length) +
                                " does not match plan L=" + std::to_string(plan.window_length));
    const Profile p = build_profile(r, window);
    return fit_hurst(fluctuation_curve(p, plan));
}

}  // namespace hurstlab

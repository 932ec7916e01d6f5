#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hurstlab/errors.hpp"

namespace hurstlab {

enum class SeriesKind { Prices, Increments };

/// Raw input series: either prices S_t (log-returns are derived from them)
/// or pre-computed increments r_t that enter the pipeline directly.
struct RawSeries {
    std::vector<double> values;
    SeriesKind kind = SeriesKind::Increments;

    static RawSeries prices(std::vector<double> v) {
        if (v.size() < 2)
            throw TooShort("price series needs at least 2 values, got " +
                           std::to_string(v.size()));
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!std::isfinite(v[i]))
                throw Error("non-finite value at index " + std::to_string(i));
            if (v[i] <= 0.0) throw NonPositivePrice(i, v[i]);
        }
        return RawSeries{std::move(v), SeriesKind::Prices};
    }

    static RawSeries increments(std::vector<double> v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!std::isfinite(v[i]))
                throw Error("non-finite value at index " + std::to_string(i));
        return RawSeries{std::move(v), SeriesKind::Increments};
    }
};

/// Increment series r_t with its arithmetic mean cached.
class ReturnSeries {
public:
    explicit ReturnSeries(std::vector<double> returns)
        : returns_(std::move(returns)) {
        double sum = 0.0;
        for (std::size_t i = 0; i < returns_.size(); ++i) {
            if (!std::isfinite(returns_[i]))
                throw Error("non-finite return at index " + std::to_string(i));
            sum += returns_[i];
        }
        mean_ = returns_.empty() ? 0.0 : sum / static_cast<double>(returns_.size());
    }

    const std::vector<double>& values() const { return returns_; }
    double mean() const { return mean_; }
    std::size_t size() const { return returns_.size(); }

private:
    std::vector<double> returns_;
    double mean_ = 0.0;
};

/// Half-open index range [start, start + length) into a ReturnSeries.
struct Window {
    std::size_t start = 0;
    std::size_t length = 0;
};

/// Cumulative demeaned profile X(1..L).  X(L) telescopes to zero.
class Profile {
public:
    Profile(std::vector<double> x) : x_(std::move(x)) {}

    const std::vector<double>& values() const { return x_; }
    std::size_t window_length() const { return x_.size(); }

private:
    std::vector<double> x_;
};

/// r_t = ln S_t - ln S_{t-1}
inline ReturnSeries log_returns(const RawSeries& raw) {
    if (raw.kind != SeriesKind::Prices)
        throw Error("log_returns expects a price series");
    if (raw.values.size() < 2)
        throw TooShort("price series needs at least 2 values, got " +
                       std::to_string(raw.values.size()));
    std::vector<double> r(raw.values.size() - 1);
    for (std::size_t i = 0; i + 1 < raw.values.size(); ++i) {
        if (raw.values[i] <= 0.0) throw NonPositivePrice(i, raw.values[i]);
        r[i] = std::log(raw.values[i + 1]) - std::log(raw.values[i]);
    }
    if (raw.values.back() <= 0.0)
        throw NonPositivePrice(raw.values.size() - 1, raw.values.back());
    return ReturnSeries(std::move(r));
}

/// Prices go through log_returns; increments pass through unchanged.
inline ReturnSeries to_returns(const RawSeries& raw) {
    if (raw.kind == SeriesKind::Prices) return log_returns(raw);
    return ReturnSeries(raw.values);
}

/// Partial sums of the window-demeaned increments:
///   X(k) = sum_{t=1..k} (r_t - rbar),  k = 1..L,
/// where rbar is the mean over the window only.
inline Profile build_profile(const ReturnSeries& r, Window window) {
    if (window.length < 2)
        throw TooShort("profile window needs length >= 2, got " +
                       std::to_string(window.length));
    if (window.start > r.size() || window.length > r.size() - window.start)
        throw WindowOutOfBounds(
            "window [" + std::to_string(window.start) + ", " +
            std::to_string(window.start + window.length) + ") exceeds series of length " +
            std::to_string(r.size()));

    const double* v = r.values().data() + window.start;
    const std::size_t n = window.length;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += v[i];
    const double rbar = sum / static_cast<double>(n);

    std::vector<double> x(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += v[i] - rbar;
        x[i] = acc;
    }
    return Profile(std::move(x));
}

}  // namespace hurstlab

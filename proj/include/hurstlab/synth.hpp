#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "hurstlab/errors.hpp"
#include "hurstlab/fft.hpp"
#include "hurstlab/rng.hpp"
#include "hurstlab/series.hpp"

namespace hurstlab {

/// n iid standard normal draws, deterministic per (master_seed, stream_index).
inline ReturnSeries gaussian_series(std::size_t n, SeedSpec seed) {
    if (n < 1) throw TooShort("gaussian_series needs n >= 1");
    Rng rng(seed);
    std::vector<double> values(n);
    for (double& v : values) v = rng.next_gaussian();
    return ReturnSeries(std::move(values));
}

/// Autocovariance of fractional Gaussian noise with unit variance:
///   gamma(k) = 1/2 (|k+1|^{2H} - 2|k|^{2H} + |k-1|^{2H})
inline double fgn_autocovariance(double h, std::size_t lag) {
    if (lag == 0) return 1.0;
    const double k = static_cast<double>(lag);
    const double e = 2.0 * h;
    return 0.5 * (std::pow(k + 1.0, e) - 2.0 * std::pow(k, e) + std::pow(k - 1.0, e));
}

/// Exact fractional-Gaussian-noise sampler via circulant embedding
/// (Davies-Harte).  The covariance row gamma(0..m) is embedded in a
/// circulant of size 2m, m = next power of two >= n; its eigenvalues are
/// the DFT of the row and are nonnegative for fGn, so a sample is the
/// real part of the FFT of eigenvalue-scaled complex Gaussians.
///
/// Construction is O(m log m) once per (n, h); each sample reuses the
/// precomputed eigenvalue roots.
class FgnGenerator {
public:
    FgnGenerator(std::size_t n, double h) : n_(n), h_(h) {
        if (n < 2) throw TooShort("fgn_series needs n >= 2");
        if (!(h > 0.0 && h < 1.0))
            throw OutOfRange("fGn exponent must lie in (0, 1), got " + std::to_string(h));

        m_ = detail::next_power_of_two(n);
        const std::size_t size = 2 * m_;
        std::vector<std::complex<double>> row(size);
        for (std::size_t j = 0; j <= m_; ++j) row[j] = fgn_autocovariance(h, j);
        for (std::size_t j = m_ + 1; j < size; ++j) row[j] = row[size - j];

        detail::fft_radix2(row);

        double max_eig = 0.0;
        for (const auto& z : row) max_eig = std::max(max_eig, z.real());
        const double tol = 1e-8 * std::max(1.0, max_eig);

        sqrt_eigenvalues_.resize(size);
        for (std::size_t j = 0; j < size; ++j) {
            const double lambda = row[j].real();
            if (lambda < -tol)
                throw EmbeddingNotPSD("circulant eigenvalue " + std::to_string(lambda) +
                                      " at index " + std::to_string(j) +
                                      " is negative beyond tolerance");
            sqrt_eigenvalues_[j] = std::sqrt(std::max(lambda, 0.0));
        }
    }

    std::size_t size() const { return n_; }
    double hurst() const { return h_; }

    ReturnSeries sample(SeedSpec seed) const {
        const std::size_t size = 2 * m_;
        Rng rng(seed);
        std::vector<std::complex<double>> w(size);

        // Hermitian-symmetric Gaussian spectrum; draw order is fixed so the
        // stream is reproducible: w[0], w[m], then the conjugate pairs.
        w[0] = sqrt_eigenvalues_[0] * rng.next_gaussian();
        w[m_] = sqrt_eigenvalues_[m_] * rng.next_gaussian();
        constexpr double inv_sqrt2 = 0.7071067811865475244;
        for (std::size_t k = 1; k < m_; ++k) {
            const double re = rng.next_gaussian() * inv_sqrt2;
            const double im = rng.next_gaussian() * inv_sqrt2;
            w[k] = sqrt_eigenvalues_[k] * std::complex<double>(re, im);
            w[size - k] = std::conj(w[k]);
        }

        detail::fft_radix2(w);

        const double scale = 1.0 / std::sqrt(static_cast<double>(size));
        std::vector<double> values(n_);
        for (std::size_t j = 0; j < n_; ++j) values[j] = w[j].real() * scale;
        return ReturnSeries(std::move(values));
    }

private:
    std::size_t n_;
    double h_;
    std::size_t m_ = 0;
    std::vector<double> sqrt_eigenvalues_;
};

/// Stationary fGn draw; convenience wrapper when a single sample is wanted.
inline ReturnSeries fgn_series(std::size_t n, double h, SeedSpec seed) {
    return FgnGenerator(n, h).sample(seed);
}

}  // namespace hurstlab

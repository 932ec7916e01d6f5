#pragma once

#include <cmath>
#include <cstdint>

namespace hurstlab {

/// Addresses one reproducible random stream.  Replication r of a Monte
/// Carlo run uses stream_index = r under a single master seed, so results
/// do not depend on worker count or execution order.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;
};

namespace detail {

// SplitMix64 finalizer (Steele, Lea, Flood 2014); bijective on 64 bits.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        return mix64(state);
    }
};

}  // namespace detail

/// xoshiro256++ seeded through SplitMix64 from a (master_seed, stream_index)
/// pair.  The Gaussian variate method is the Marsaglia polar transform;
/// golden files depend on both choices, so neither is configurable.
class Rng {
public:
    explicit Rng(SeedSpec seed) {
        detail::SplitMix64 sm{detail::mix64(seed.master_seed) ^
                              detail::mix64(seed.stream_index ^ 0x6A09E667F3BCC909ull)};
        for (auto& word : state_) word = sm.next();
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0)
            state_[0] = 0x9E3779B97F4A7C15ull;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on the open interval (0, 1); never returns an endpoint.
    double next_open01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal draw, Marsaglia polar method with a cached spare.
    double next_gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * next_open01() - 1.0;
            v = 2.0 * next_open01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace hurstlab

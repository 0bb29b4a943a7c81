#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>

namespace rostering {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seeded random stream. All draw primitives are implemented on top of the
/// raw 64-bit output so sequences do not depend on the standard library's
/// distribution implementations.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform index in [0, n). Rejection sampling, exact.
    std::size_t uniform_index(std::size_t n) {
        if (n == 0) throw std::invalid_argument("uniform_index: n must be positive");
        const std::uint64_t bound = static_cast<std::uint64_t>(n);
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = next_u64();
            if (x >= threshold) return static_cast<std::size_t>(x % bound);
        }
    }

    /// Index drawn proportionally to non-negative integer weights (exact).
    std::size_t pick_weighted(std::span<const long long> weights) {
        long long total = 0;
        for (long long w : weights) {
            if (w < 0) throw std::invalid_argument("pick_weighted: negative weight");
            total += w;
        }
        if (total <= 0) throw std::invalid_argument("pick_weighted: all weights zero");
        const std::uint64_t r = static_cast<std::uint64_t>(
            uniform_index(static_cast<std::size_t>(total)));
        std::uint64_t cum = 0;
        for (std::size_t j = 0; j < weights.size(); ++j) {
            cum += static_cast<std::uint64_t>(weights[j]);
            if (r < cum) return j;
        }
        return weights.size() - 1;  // unreachable
    }

    /// Index drawn proportionally to non-negative real weights.
    /// Zero-weight entries are never selected.
    std::size_t pick_weighted(std::span<const double> weights) {
        double total = 0.0;
        for (double w : weights) {
            if (w < 0.0) throw std::invalid_argument("pick_weighted: negative weight");
            total += w;
        }
        if (total <= 0.0) throw std::invalid_argument("pick_weighted: all weights zero");
        const double u = next_unit() * total;
        double cum = 0.0;
        std::size_t last_positive = 0;
        for (std::size_t j = 0; j < weights.size(); ++j) {
            if (weights[j] > 0.0) last_positive = j;
            cum += weights[j];
            if (u < cum && weights[j] > 0.0) return j;
        }
        return last_positive;
    }

    /// Deterministic child stream for (run seed, a, b), e.g. (generation, path index).
    RandomStream derive(std::uint64_t a, std::uint64_t b) const {
        return RandomStream(splitmix64(splitmix64(seed_ ^ splitmix64(a)) ^ b));
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace rostering

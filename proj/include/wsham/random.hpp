#pragma once

#include <cstdint>
#include <random>

namespace wsham {

/// Seeded RNG with a fixed mapping from bits to doubles, so outputs are
/// reproducible independent of the standard library's distribution
/// implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform in [-1, 1) excluding a band around zero, for values that are
    /// divided by.
    double nonzero(double min_abs = 0.1) {
        for (;;) {
            double v = uniform(-1.0, 1.0);
            if (v >= min_abs || v <= -min_abs) return v;
        }
    }

    std::uint64_t bits() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

} // namespace wsham

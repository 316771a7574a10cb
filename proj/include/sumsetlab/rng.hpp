#pragma once

#include <cstdint>
#include <random>

namespace sumsetlab {

/// Deterministic RNG wrapper. mt19937_64 is fully specified by the standard
/// and uniform draws below avoid std::uniform_int_distribution, whose output
/// is implementation-defined; the same seed yields the same stream on every
/// platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [lo, hi] inclusive, by rejection.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;  // hi >= lo
        if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
        std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + static_cast<std::int64_t>(v % span);
    }

    /// Uniform in [0, 1) with 53-bit resolution (diagnostics only; verdicts
    /// never depend on floating point).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace sumsetlab

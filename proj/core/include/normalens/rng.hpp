#pragma once

#include <cstdint>
#include <random>

namespace normalens {

/// Deterministic random generator with explicitly specified algorithms, so
/// that fixed seeds give bit-identical streams on every platform (the
/// std::*_distribution adapters are implementation-defined and are not used).
/// Not thread-safe; derive one generator per thread/trial via derive_stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// 53-bit uniform in [0, 1).
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Uniform angle in (-pi, pi].
    double uniform_angle();

    /// Standard normal (Marsaglia polar method, cached spare).
    double normal();

    /// Gamma(shape, 1), shape > 0. Marsaglia-Tsang squeeze for shape >= 1;
    /// shape < 1 via the boost identity G_a = G_{a+1} U^{1/a}.
    double gamma(double shape);

    /// Decorrelated child seed for (seed, stream) — splitmix64 mixing.
    static std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream);

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace normalens

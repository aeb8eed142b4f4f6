#pragma once

#include <cstdint>
#include <random>

namespace qst {

/// Seeded random stream used by the noise generators. The underlying engine
/// is std::mt19937_64 (fully specified by the C++ standard, so the raw stream
/// is portable); the Gaussian and Poisson samplers on top are implemented
/// here rather than taken from <random> because the standard leaves those
/// distribution algorithms unspecified. A re-implementation that follows the
/// same engine and sampler recipes reproduces the draws exactly.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on (0, 1): never returns 0, safe inside logs.
    double uniform();

    /// Standard normal via the Box-Muller transform; the paired value is
    /// cached, so draws consume one uniform pair per two normals.
    double normal();

    /// Poisson draw. Knuth's product-of-uniforms method for mean < 10,
    /// Hormann's PTRS transformed rejection above; the switch point is part
    /// of the documented recipe.
    std::uint64_t poisson(double mean);

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace qst

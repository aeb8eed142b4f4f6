#include "qst/synth.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qst/rng.hpp"

namespace qst {

namespace {

constexpr double kHighLevel = 40.0;
constexpr double kHighSwing = 12.0;
constexpr double kLowLevel = 8.0;
constexpr double kLowSwing = 4.8;

double wave(double cycles, double phase, int i, int len) {
    return std::sin(2.0 * std::numbers::pi * cycles * i / len + phase);
}

}  // namespace

Field make_signal(int n, std::uint64_t seed) {
    if (n < 64) throw std::invalid_argument("make_signal: n must be >= 64");
    SeededRng rng(seed);
    const double phase_lo = 2.0 * std::numbers::pi * rng.uniform();
    const double phase_hi = 2.0 * std::numbers::pi * rng.uniform();
    const int cycles_lo = 2 + static_cast<int>(rng.uniform() * 2.0);  // 2 or 3
    const int cycles_hi = 8 * cycles_lo;

    const int half = n / 2;
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < half; ++i)
        v[i] = kHighLevel + kHighSwing * wave(cycles_lo, phase_lo, i, half);
    for (int i = half; i < n; ++i)
        v[i] = kLowLevel + kLowSwing * wave(cycles_hi, phase_hi, i - half, n - half);
    return Field::signal(std::move(v));
}

Field make_image(int n, std::uint64_t seed) {
    if (n < 32) throw std::invalid_argument("make_image: n must be >= 32");
    SeededRng rng(seed);
    const double ph[4] = {2.0 * std::numbers::pi * rng.uniform(),
                          2.0 * std::numbers::pi * rng.uniform(),
                          2.0 * std::numbers::pi * rng.uniform(),
                          2.0 * std::numbers::pi * rng.uniform()};
    // texture wavelength is fixed in pixels, so the cycle count scales with n
    const double cycles_lo = 1.0;
    const double cycles_hi = std::max(4.0, std::round(7.0 * n / 64.0));
    const double dark_swing = 6.0;  // texture stays well above zero (min 2)

    const int half = n / 2;
    std::vector<double> v(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            double val;
            if (c < half) {
                val = kHighLevel + kHighSwing * wave(cycles_lo, ph[0], c, half) *
                                       wave(cycles_lo, ph[1], r, n);
            } else {
                val = kLowLevel + dark_swing * wave(cycles_hi, ph[2], c - half, n - half) *
                                      wave(cycles_hi, ph[3], r, n);
            }
            v[static_cast<std::size_t>(r) * n + c] = val;
        }
    }
    return Field::image(n, n, std::move(v));
}

}  // namespace qst

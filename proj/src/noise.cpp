#include "qst/noise.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qst/rng.hpp"

namespace qst {

namespace {

struct FieldSums {
    double sum = 0.0;
    double sum_sq = 0.0;
};

FieldSums nonneg_sums(const Field& x, const char* model) {
    x.require_valid();
    FieldSums s;
    for (double v : x.values) {
        if (v < 0.0)
            throw std::invalid_argument(std::string(model) +
                                        " noise requires nonnegative samples");
        s.sum += v;
        s.sum_sq += v * v;
    }
    if (s.sum_sq == 0.0)
        throw std::invalid_argument("corrupt: all-zero field, SNR undefined");
    return s;
}

// Expected Poisson SNR in dB at scale a; strictly increasing in a.
double expected_poisson_snr(double a, const FieldSums& s) {
    return 10.0 * std::log10(a * s.sum_sq / s.sum);
}

double solve_poisson_scale(double target_db, const FieldSums& s) {
    // bracket around the analytic root, then bisect
    const double center = std::pow(10.0, target_db / 10.0) * s.sum / s.sum_sq;
    double lo = center / 4.0, hi = center * 4.0;
    while (expected_poisson_snr(lo, s) > target_db) lo /= 2.0;
    while (expected_poisson_snr(hi, s) < target_db) hi *= 2.0;
    for (int it = 0; it < 200 && (hi - lo) > 1e-14 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (expected_poisson_snr(mid, s) < target_db ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double snr_db(const Field& clean, const Field& other) {
    clean.require_valid();
    other.require_valid();
    if (clean.width != other.width || clean.height != other.height ||
        clean.kind != other.kind)
        throw std::invalid_argument("snr_db: field shapes differ");
    double sig = 0.0, noise = 0.0;
    for (std::size_t i = 0; i < clean.values.size(); ++i) {
        sig += clean.values[i] * clean.values[i];
        const double d = other.values[i] - clean.values[i];
        noise += d * d;
    }
    if (noise == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(sig / noise);
}

CorruptResult corrupt(const Field& x, const NoiseSpec& spec) {
    if (!std::isfinite(spec.target_snr_db))
        throw std::invalid_argument("corrupt: target SNR must be finite");

    SeededRng rng(spec.seed);
    Field noisy = x;

    if (spec.model == NoiseModel::Poisson) {
        const FieldSums s = nonneg_sums(x, "poisson");
        const double a = solve_poisson_scale(spec.target_snr_db, s);
        for (std::size_t i = 0; i < x.values.size(); ++i)
            noisy.values[i] =
                static_cast<double>(rng.poisson(a * x.values[i])) / a;
    } else {
        const FieldSums s = nonneg_sums(x, "signal-dependent gaussian");
        const double beta = (s.sum_sq / s.sum) * std::pow(10.0, -spec.target_snr_db / 10.0);
        for (std::size_t i = 0; i < x.values.size(); ++i) {
            if (x.values[i] > 0.0)
                noisy.values[i] = x.values[i] + rng.normal() * std::sqrt(beta * x.values[i]);
        }
    }

    const double achieved = snr_db(x, noisy);
    return {std::move(noisy), achieved};
}

}  // namespace qst

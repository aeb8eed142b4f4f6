#pragma once

#include <cstdint>

#include "qst/field.hpp"

namespace qst {

enum class NoiseModel { Poisson, SignalDependentGaussian };

struct NoiseSpec {
    NoiseModel model = NoiseModel::Poisson;
    double target_snr_db = 15.0;
    std::uint64_t seed = 0;
};

struct CorruptResult {
    Field noisy;
    double achieved_snr_db;
};

/// Draws signal-dependent noise calibrated to the target SNR.
///
/// Poisson: y = Poisson(a x)/a with the scale a found by bisection on the
/// expected SNR 10 log10(a sum(x^2) / sum(x)) (per-sample noise variance is
/// x/a after rescaling). SignalDependentGaussian: y = x + n with
/// Var(n_k) = beta x_k and beta solved in closed form from
/// 10 log10(sum(x^2) / (beta sum(x))) = target.
///
/// Requires x >= 0 (both models) and at least one positive sample. Same
/// field + same seed reproduce the identical draw.
CorruptResult corrupt(const Field& x, const NoiseSpec& spec);

/// 10 log10(sum(clean^2) / sum((other-clean)^2)); +infinity when the fields
/// are identical.
double snr_db(const Field& clean, const Field& other);

}  // namespace qst

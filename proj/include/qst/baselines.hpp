#pragma once

#include <vector>

#include "qst/field.hpp"
#include "qst/transform.hpp"

namespace qst {

/// Fixed-basis counterpart of the adaptive transform: project onto the
/// orthonormal DCT-II basis (the eigenbasis of the zero-potential Neumann
/// Laplacian), order basis vectors by increasing spatial frequency, apply the
/// same index-ramp profile, reconstruct. For 2D the frequency of a separable
/// mode (kr, kc) is the Laplacian eigenvalue 4 sin^2(pi kr / 2 nr) +
/// 4 sin^2(pi kc / 2 nc); ties are broken by (kr + kc, kr).
Field fourier_denoise(const Field& x, const ThresholdProfile& profile);

/// Isotropic TV denoising: approximately minimizes
/// 0.5 ||u - x||^2 + lambda TV(u) with Chambolle's dual projection
/// iteration (fixed step 1/8 in 2D, 1/4 in 1D). Runs exactly `iterations`
/// steps. When `energy_trace` is given it receives the objective at p = 0
/// followed by the objective after every iteration.
Field tv_denoise(const Field& x, double lambda, int iterations,
                 std::vector<double>* energy_trace = nullptr);

/// Objective evaluated by tv_denoise (exposed for tests and tuning).
double tv_objective(const Field& u, const Field& x, double lambda);

/// Isotropic total variation with forward differences.
double total_variation(const Field& u);

}  // namespace qst

#pragma once

#include <iosfwd>
#include <vector>

#include "qst/eigensolver.hpp"
#include "qst/field.hpp"

namespace qst {

/// Projection of a field onto an eigenbasis: alpha[i] = psi_i . x.
struct Coefficients {
    std::vector<double> alpha;
};

/// Index-ramp coefficient weights: the first s coefficients pass unchanged,
/// the next ones fall off linearly over a ramp of length rho, the rest are
/// zeroed. Indices are 1-based.
struct ThresholdProfile {
    int s = 0;
    double rho = 1.0;

    ThresholdProfile(int s_, double rho_);

    /// tau_i = 1 for i <= s; 1 - (i-s)/rho while positive; 0 beyond.
    double tau(int i) const;

    /// Number of leading coefficients with tau > 0, capped at `available`.
    int keep_count(int available) const;
};

Coefficients project(const EigenBasis& basis, const Field& x);

/// x_hat = sum_i alpha_i tau_i psi_i, reshaped to `shape`. Indices with
/// tau = 0 are skipped, which does not change the result.
Field reconstruct(const EigenBasis& basis, const Coefficients& coeffs,
                  const ThresholdProfile& profile, const FieldShape& shape);

/// CSV: index,eigenvalue,alpha,tau (index order = basis order).
void dump_coefficients_csv(const EigenBasis& basis, const Coefficients& coeffs,
                           const ThresholdProfile& profile, std::ostream& out);

}  // namespace qst

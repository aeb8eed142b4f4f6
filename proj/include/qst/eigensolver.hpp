#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "qst/hamiltonian.hpp"

namespace qst {

/// Orthonormal eigenpairs of a Hamiltonian. Solvers return eigenvalues in
/// non-increasing order (index 0 = highest eigenvalue). Signs are fixed so
/// that the component of largest absolute value in each vector is positive,
/// ties broken by lowest index, making decompositions reproducible.
struct EigenBasis {
    int dim = 0;
    int count = 0;
    std::vector<double> eigenvalues;  ///< length count
    std::vector<double> vectors;      ///< count x dim, vector i contiguous

    std::span<const double> vector(int i) const;
    std::span<double> vector(int i);

    /// Copy with eigenpairs in reverse (ascending-eigenvalue) order. The
    /// denoising pipeline thresholds from the low end of the spectrum and
    /// feeds this ordering to project/reconstruct.
    EigenBasis reversed() const;
};

struct EigOptions {
    /// eig_full refuses matrices above this dimension.
    int dense_limit = 4096;
    /// Ritz-residual target for the iterative path, relative to max(1, |lambda|).
    double tol = 1e-10;
    /// Cap on the Krylov subspace dimension. 0 lets the space grow to the
    /// full dimension (where the iteration is exact) for dims up to 2048 and
    /// caps it at 8m + 40 beyond that.
    int max_krylov = 0;
};

enum class SpectrumEnd { Lowest, Highest };

/// Full decomposition via dense tridiagonalization + implicit QL/QR
/// (Eigen's selfadjoint solver). Deterministic for a given input.
EigenBasis eig_full(const HamiltonianMatrix& H, const EigOptions& opts = {});

/// m eigenpairs from one end of the spectrum: Lanczos iteration with full
/// reorthogonalization on a spectrally shifted operator, so the requested end
/// dominates. Throws after exhausting the Krylov budget, reporting the best
/// residuals reached.
EigenBasis eig_partial(const HamiltonianMatrix& H, int m, SpectrumEnd which,
                       const EigOptions& opts = {});

/// CSV dump: one row per eigenpair, "index,eigenvalue[,v1,v2,...]".
void dump_eigenbasis_csv(const EigenBasis& basis, std::ostream& out, bool include_vectors);

/// Orients v so its largest-magnitude component (lowest index on ties) is
/// positive. Shared by both solver paths.
void canonicalize_sign(std::span<double> v);

}  // namespace qst

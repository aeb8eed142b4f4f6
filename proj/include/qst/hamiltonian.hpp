#pragma once

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "qst/field.hpp"

namespace qst {

/// The quantity hbar^2/2m: the free scale weighting the discrete Laplacian
/// against the potential. Grid spacing is fixed at 1, so this is the only
/// scale knob.
struct PlanckMassRatio {
    double value;
    explicit PlanckMassRatio(double v);
};

/// Diagonal coefficient rule at the grid boundary.
///
/// GraphLaplacian sets the coefficient to the number of in-grid neighbors
/// (4 interior, 3 edge, 2 corner), which makes the zero-potential operator an
/// exact graph Laplacian with zero row sums.
///
/// TaperedRows is an anisotropic variant: every cell of the first and last
/// grid row takes the corner coefficient 2, the remaining cells of the first
/// and last column take 3, the interior keeps 4. Boundary rows are damped
/// hardest; at zero potential the row sums are -ratio on the non-corner
/// first/last-row cells instead of zero. The two modes coincide in 1D.
enum class BoundaryMode { TaperedRows, GraphLaplacian };

/// Sparse symmetric operator H = diag(potential) + ratio * (-Laplacian).
/// CSR storage with at most 5 nonzeros per row (3 in 1D); every off-diagonal
/// nonzero equals -ratio and couples grid neighbors only. Immutable after
/// assembly; apply() is safe to call concurrently.
class HamiltonianMatrix {
public:
    HamiltonianMatrix(int dim, std::vector<int> row_ptr, std::vector<int> cols,
                      std::vector<double> vals, PlanckMassRatio ratio, BoundaryMode boundary);

    int dim() const { return dim_; }
    PlanckMassRatio ratio() const { return ratio_; }
    BoundaryMode boundary() const { return boundary_; }

    /// 0-based dense-style access; scans the (short) row.
    double entry(int row, int col) const;

    /// out = H v. Throws on dimension mismatch.
    void apply(std::span<const double> v, std::span<double> out) const;
    std::vector<double> apply(const std::vector<double>& v) const;

    std::span<const int> row_offsets() const { return row_ptr_; }
    std::span<const int> columns() const { return cols_; }
    std::span<const double> values() const { return vals_; }
    int nonzeros() const { return static_cast<int>(vals_.size()); }

    /// Gershgorin interval containing the whole spectrum.
    std::pair<double, double> spectral_bounds() const;

    /// Coordinate-format text dump, "row col value" per line, 1-based.
    void dump_coo(std::ostream& out) const;

private:
    int dim_;
    std::vector<int> row_ptr_;
    std::vector<int> cols_;
    std::vector<double> vals_;
    PlanckMassRatio ratio_;
    BoundaryMode boundary_;
};

HamiltonianMatrix build_hamiltonian_1d(const Field& field, PlanckMassRatio ratio,
                                       BoundaryMode boundary);
HamiltonianMatrix build_hamiltonian_2d(const Field& field, PlanckMassRatio ratio,
                                       BoundaryMode boundary);

/// Dispatches on field.kind.
HamiltonianMatrix build_hamiltonian(const Field& field, PlanckMassRatio ratio,
                                    BoundaryMode boundary);

}  // namespace qst

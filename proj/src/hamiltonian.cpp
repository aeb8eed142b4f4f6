#include "qst/hamiltonian.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "qst/field_io.hpp"

namespace qst {

PlanckMassRatio::PlanckMassRatio(double v) : value(v) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument("ratio hbar^2/2m must be positive and finite");
}

HamiltonianMatrix::HamiltonianMatrix(int dim, std::vector<int> row_ptr, std::vector<int> cols,
                                     std::vector<double> vals, PlanckMassRatio ratio,
                                     BoundaryMode boundary)
    : dim_(dim),
      row_ptr_(std::move(row_ptr)),
      cols_(std::move(cols)),
      vals_(std::move(vals)),
      ratio_(ratio),
      boundary_(boundary) {
    if (dim_ <= 0 || row_ptr_.size() != static_cast<std::size_t>(dim_) + 1 ||
        cols_.size() != vals_.size())
        throw std::invalid_argument("hamiltonian: inconsistent CSR arrays");
}

double HamiltonianMatrix::entry(int row, int col) const {
    if (row < 0 || row >= dim_ || col < 0 || col >= dim_)
        throw std::out_of_range("hamiltonian entry index out of range");
    for (int p = row_ptr_[row]; p < row_ptr_[row + 1]; ++p)
        if (cols_[p] == col) return vals_[p];
    return 0.0;
}

void HamiltonianMatrix::apply(std::span<const double> v, std::span<double> out) const {
    if (v.size() != static_cast<std::size_t>(dim_) || out.size() != static_cast<std::size_t>(dim_))
        throw std::invalid_argument("hamiltonian apply: dimension mismatch, dim=" +
                                    std::to_string(dim_));
    for (int r = 0; r < dim_; ++r) {
        double acc = 0.0;
        for (int p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) acc += vals_[p] * v[cols_[p]];
        out[r] = acc;
    }
}

std::vector<double> HamiltonianMatrix::apply(const std::vector<double>& v) const {
    std::vector<double> out(static_cast<std::size_t>(dim_));
    apply(std::span<const double>(v), std::span<double>(out));
    return out;
}

std::pair<double, double> HamiltonianMatrix::spectral_bounds() const {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int r = 0; r < dim_; ++r) {
        double diag = 0.0, radius = 0.0;
        for (int p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) {
            if (cols_[p] == r)
                diag = vals_[p];
            else
                radius += std::abs(vals_[p]);
        }
        lo = std::min(lo, diag - radius);
        hi = std::max(hi, diag + radius);
    }
    return {lo, hi};
}

void HamiltonianMatrix::dump_coo(std::ostream& out) const {
    for (int r = 0; r < dim_; ++r)
        for (int p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p)
            out << (r + 1) << ' ' << (cols_[p] + 1) << ' ' << format_double(vals_[p]) << '\n';
}

namespace {

int diagonal_coefficient_2d(BoundaryMode mode, int r, int c, int n_rows, int n_cols) {
    const int neighbors = (r > 0) + (r + 1 < n_rows) + (c > 0) + (c + 1 < n_cols);
    if (mode == BoundaryMode::GraphLaplacian) return neighbors;
    // TaperedRows: whole first/last rows take 2; remaining first/last-column
    // cells take 3; interior keeps 4.
    if (r == 0 || r == n_rows - 1) return 2;
    if (c == 0 || c == n_cols - 1) return 3;
    return 4;
}

}  // namespace

HamiltonianMatrix build_hamiltonian_1d(const Field& field, PlanckMassRatio ratio,
                                       BoundaryMode boundary) {
    field.require_valid();
    if (field.kind != FieldKind::Signal1D)
        throw std::invalid_argument("build_hamiltonian_1d: field is not a 1D signal");

    const int n = field.width;
    std::vector<int> row_ptr(n + 1, 0);
    std::vector<int> cols;
    std::vector<double> vals;
    cols.reserve(3 * static_cast<std::size_t>(n));
    vals.reserve(3 * static_cast<std::size_t>(n));

    for (int k = 0; k < n; ++k) {
        // endpoint coefficient drops to the in-grid neighbor count in both modes
        const int c = (k > 0) + (k + 1 < n);
        if (k > 0) {
            cols.push_back(k - 1);
            vals.push_back(-ratio.value);
        }
        cols.push_back(k);
        vals.push_back(field.values[k] + c * ratio.value);
        if (k + 1 < n) {
            cols.push_back(k + 1);
            vals.push_back(-ratio.value);
        }
        row_ptr[k + 1] = static_cast<int>(cols.size());
    }
    return HamiltonianMatrix(n, std::move(row_ptr), std::move(cols), std::move(vals), ratio,
                             boundary);
}

HamiltonianMatrix build_hamiltonian_2d(const Field& field, PlanckMassRatio ratio,
                                       BoundaryMode boundary) {
    field.require_valid();
    if (field.kind != FieldKind::Image2D)
        throw std::invalid_argument("build_hamiltonian_2d: field is not a 2D image");

    const int n_rows = field.height;
    const int n_cols = field.width;
    const int dim = n_rows * n_cols;
    std::vector<int> row_ptr(static_cast<std::size_t>(dim) + 1, 0);
    std::vector<int> cols;
    std::vector<double> vals;
    cols.reserve(5 * static_cast<std::size_t>(dim));
    vals.reserve(5 * static_cast<std::size_t>(dim));

    for (int r = 0; r < n_rows; ++r) {
        for (int c = 0; c < n_cols; ++c) {
            const int k = r * n_cols + c;
            const int coeff = diagonal_coefficient_2d(boundary, r, c, n_rows, n_cols);
            // columns in ascending order: up, left, diag, right, down
            if (r > 0) {
                cols.push_back(k - n_cols);
                vals.push_back(-ratio.value);
            }
            if (c > 0) {
                cols.push_back(k - 1);
                vals.push_back(-ratio.value);
            }
            cols.push_back(k);
            vals.push_back(field.values[k] + coeff * ratio.value);
            if (c + 1 < n_cols) {
                cols.push_back(k + 1);
                vals.push_back(-ratio.value);
            }
            if (r + 1 < n_rows) {
                cols.push_back(k + n_cols);
                vals.push_back(-ratio.value);
            }
            row_ptr[k + 1] = static_cast<int>(cols.size());
        }
    }
    return HamiltonianMatrix(dim, std::move(row_ptr), std::move(cols), std::move(vals), ratio,
                             boundary);
}

HamiltonianMatrix build_hamiltonian(const Field& field, PlanckMassRatio ratio,
                                    BoundaryMode boundary) {
    return field.kind == FieldKind::Signal1D ? build_hamiltonian_1d(field, ratio, boundary)
                                             : build_hamiltonian_2d(field, ratio, boundary);
}

}  // namespace qst

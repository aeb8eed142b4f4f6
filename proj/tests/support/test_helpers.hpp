#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "qst/eigensolver.hpp"
#include "qst/field.hpp"
#include "qst/hamiltonian.hpp"

namespace qst::testing {

inline Field random_signal(int n, unsigned seed, double lo = 0.0, double hi = 10.0) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> v(static_cast<std::size_t>(n));
    for (double& x : v) x = u(rng);
    return Field::signal(std::move(v));
}

inline Field random_image(int rows, int cols, unsigned seed, double lo = 0.0,
                          double hi = 10.0) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> v(static_cast<std::size_t>(rows) * cols);
    for (double& x : v) x = u(rng);
    return Field::image(rows, cols, std::move(v));
}

// Brute-force dense assembly that walks every (row, col) pair and applies the
// stencil rules directly; deliberately independent of the CSR builder.
inline std::vector<double> dense_stencil_oracle(const Field& f, double ratio,
                                                BoundaryMode mode) {
    const bool is_1d = f.kind == FieldKind::Signal1D;
    const int n_rows = is_1d ? 1 : f.height;
    const int n_cols = f.width;
    const int dim = n_rows * n_cols;
    std::vector<double> dense(static_cast<std::size_t>(dim) * dim, 0.0);

    auto row_of = [&](int k) { return k / n_cols; };
    auto col_of = [&](int k) { return k % n_cols; };

    for (int a = 0; a < dim; ++a) {
        for (int b = 0; b < dim; ++b) {
            double value = 0.0;
            if (a == b) {
                int coeff;
                const int r = row_of(a), c = col_of(a);
                if (is_1d) {
                    coeff = (c > 0 ? 1 : 0) + (c + 1 < n_cols ? 1 : 0);
                } else if (mode == BoundaryMode::GraphLaplacian) {
                    coeff = (r > 0 ? 1 : 0) + (r + 1 < n_rows ? 1 : 0) + (c > 0 ? 1 : 0) +
                            (c + 1 < n_cols ? 1 : 0);
                } else {
                    coeff = (r == 0 || r == n_rows - 1) ? 2
                            : (c == 0 || c == n_cols - 1) ? 3
                                                          : 4;
                }
                value = f.values[a] + coeff * ratio;
            } else {
                const int dr = std::abs(row_of(a) - row_of(b));
                const int dc = std::abs(col_of(a) - col_of(b));
                if (dr + dc == 1) value = -ratio;
            }
            dense[static_cast<std::size_t>(a) * dim + b] = value;
        }
    }
    return dense;
}

inline double residual_norm(const HamiltonianMatrix& H, const EigenBasis& basis, int i) {
    std::vector<double> hv(static_cast<std::size_t>(basis.dim));
    H.apply(basis.vector(i), std::span<double>(hv));
    double acc = 0.0;
    for (int k = 0; k < basis.dim; ++k) {
        const double d = hv[k] - basis.eigenvalues[i] * basis.vector(i)[k];
        acc += d * d;
    }
    return std::sqrt(acc);
}

inline double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// Sign changes between consecutive samples, ignoring entries that are zero to
// within `tol` (evanescent tails produce meaningless flips at round-off level).
inline int zero_crossings(std::span<const double> v, double tol) {
    int count = 0;
    double prev = 0.0;
    bool have_prev = false;
    for (double x : v) {
        if (std::abs(x) <= tol) continue;
        if (have_prev && ((prev > 0) != (x > 0))) ++count;
        prev = x;
        have_prev = true;
    }
    return count;
}

inline Field transpose(const Field& f) {
    Field t;
    t.kind = FieldKind::Image2D;
    t.width = f.height;
    t.height = f.width;
    t.values.resize(f.values.size());
    for (int r = 0; r < f.height; ++r)
        for (int c = 0; c < f.width; ++c) t.values[static_cast<std::size_t>(c) * t.width + r] = f.at(r, c);
    return t;
}

}  // namespace qst::testing

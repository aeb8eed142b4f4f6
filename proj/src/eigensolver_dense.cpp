#include <Eigen/Dense>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "qst/eigensolver.hpp"
#include "qst/field_io.hpp"

namespace qst {

std::span<const double> EigenBasis::vector(int i) const {
    return {vectors.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
}

std::span<double> EigenBasis::vector(int i) {
    return {vectors.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
}

EigenBasis EigenBasis::reversed() const {
    EigenBasis out;
    out.dim = dim;
    out.count = count;
    out.eigenvalues.assign(eigenvalues.rbegin(), eigenvalues.rend());
    out.vectors.resize(vectors.size());
    for (int i = 0; i < count; ++i) {
        const auto src = vector(count - 1 - i);
        std::copy(src.begin(), src.end(),
                  out.vectors.begin() + static_cast<std::size_t>(i) * dim);
    }
    return out;
}

void canonicalize_sign(std::span<double> v) {
    std::size_t arg = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double a = std::abs(v[i]);
        if (a > best) {
            best = a;
            arg = i;
        }
    }
    if (v[arg] < 0.0)
        for (double& x : v) x = -x;
}

EigenBasis eig_full(const HamiltonianMatrix& H, const EigOptions& opts) {
    const int n = H.dim();
    if (n > opts.dense_limit)
        throw std::invalid_argument("eig_full: dim " + std::to_string(n) +
                                    " exceeds dense limit " + std::to_string(opts.dense_limit) +
                                    "; use eig_partial");

    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(n, n);
    const auto row_ptr = H.row_offsets();
    const auto cols = H.columns();
    const auto vals = H.values();
    for (int r = 0; r < n; ++r)
        for (int p = row_ptr[r]; p < row_ptr[r + 1]; ++p) dense(r, cols[p]) = vals[p];

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eig_full: dense eigensolver failed to converge");

    EigenBasis basis;
    basis.dim = n;
    basis.count = n;
    basis.eigenvalues.resize(n);
    basis.vectors.resize(static_cast<std::size_t>(n) * n);
    // Eigen returns ascending order; store descending.
    for (int i = 0; i < n; ++i) {
        const int src = n - 1 - i;
        basis.eigenvalues[i] = solver.eigenvalues()(src);
        auto dst = basis.vector(i);
        for (int r = 0; r < n; ++r) dst[r] = solver.eigenvectors()(r, src);
        canonicalize_sign(dst);
    }
    return basis;
}

void dump_eigenbasis_csv(const EigenBasis& basis, std::ostream& out, bool include_vectors) {
    out << "index,eigenvalue";
    if (include_vectors)
        for (int r = 0; r < basis.dim; ++r) out << ",v" << (r + 1);
    out << '\n';
    for (int i = 0; i < basis.count; ++i) {
        out << (i + 1) << ',' << format_double(basis.eigenvalues[i]);
        if (include_vectors)
            for (double x : basis.vector(i)) out << ',' << format_double(x);
        out << '\n';
    }
}

}  // namespace qst

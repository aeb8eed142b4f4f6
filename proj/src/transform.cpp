#include "qst/transform.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "qst/field_io.hpp"

namespace qst {

ThresholdProfile::ThresholdProfile(int s_, double rho_) : s(s_), rho(rho_) {
    if (s < 0) throw std::invalid_argument("threshold profile: s must be >= 0");
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw std::invalid_argument("threshold profile: rho must be positive and finite");
}

double ThresholdProfile::tau(int i) const {
    if (i < 1) throw std::invalid_argument("tau: index is 1-based");
    if (i <= s) return 1.0;
    const double ramp = 1.0 - (i - s) / rho;
    return ramp > 0.0 ? ramp : 0.0;
}

int ThresholdProfile::keep_count(int available) const {
    // tau > 0 iff i <= s or i - s < rho
    const int last = s + std::max(0, static_cast<int>(std::ceil(rho)) - 1);
    return std::min(available, last);
}

Coefficients project(const EigenBasis& basis, const Field& x) {
    x.require_valid();
    if (basis.dim != x.size())
        throw std::invalid_argument("project: basis dim " + std::to_string(basis.dim) +
                                    " does not match field size " + std::to_string(x.size()));
    Coefficients c;
    c.alpha.resize(static_cast<std::size_t>(basis.count));
    for (int i = 0; i < basis.count; ++i) {
        const auto psi = basis.vector(i);
        double acc = 0.0;
        for (int k = 0; k < basis.dim; ++k) acc += psi[k] * x.values[k];
        c.alpha[i] = acc;
    }
    return c;
}

Field reconstruct(const EigenBasis& basis, const Coefficients& coeffs,
                  const ThresholdProfile& profile, const FieldShape& shape) {
    if (static_cast<int>(coeffs.alpha.size()) != basis.count)
        throw std::invalid_argument("reconstruct: coefficient count mismatch");
    if (shape.size() != basis.dim)
        throw std::invalid_argument("reconstruct: shape does not match basis dim");

    std::vector<double> out(static_cast<std::size_t>(basis.dim), 0.0);
    const int kept = profile.keep_count(basis.count);
    for (int i = 0; i < kept; ++i) {
        const double w = coeffs.alpha[i] * profile.tau(i + 1);
        if (w == 0.0) continue;
        const auto psi = basis.vector(i);
        for (int k = 0; k < basis.dim; ++k) out[k] += w * psi[k];
    }

    Field f;
    f.kind = shape.kind;
    f.width = shape.width;
    f.height = shape.height;
    f.values = std::move(out);
    f.require_valid();
    return f;
}

void dump_coefficients_csv(const EigenBasis& basis, const Coefficients& coeffs,
                           const ThresholdProfile& profile, std::ostream& out) {
    out << "index,eigenvalue,alpha,tau\n";
    for (int i = 0; i < basis.count; ++i)
        out << (i + 1) << ',' << format_double(basis.eigenvalues[i]) << ','
            << format_double(coeffs.alpha[i]) << ',' << format_double(profile.tau(i + 1))
            << '\n';
}

}  // namespace qst

#include "qst/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qst {

namespace {

// Orthonormal DCT-II matrix row k evaluated at position j.
double dct_basis(int k, int j, int n) {
    const double scale = k == 0 ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
    return scale * std::cos(std::numbers::pi * (2 * j + 1) * k / (2.0 * n));
}

// Eigenvalue of the 1D Neumann graph Laplacian for mode k; doubles as the
// spatial-frequency key.
double mode_frequency(int k, int n) {
    const double s = std::sin(std::numbers::pi * k / (2.0 * n));
    return 4.0 * s * s;
}

std::vector<double> dct_1d(const std::vector<double>& x, int n, bool inverse) {
    std::vector<double> out(static_cast<std::size_t>(n), 0.0);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
            if (inverse)
                out[j] += x[k] * dct_basis(k, j, n);
            else
                out[k] += x[j] * dct_basis(k, j, n);
        }
    return out;
}

// Separable transform along rows then columns of a height x width grid.
std::vector<double> dct_2d(const std::vector<double>& x, int height, int width, bool inverse) {
    std::vector<double> tmp(x.size());
    std::vector<double> line;
    for (int r = 0; r < height; ++r) {
        line.assign(x.begin() + static_cast<std::size_t>(r) * width,
                    x.begin() + static_cast<std::size_t>(r + 1) * width);
        const auto t = dct_1d(line, width, inverse);
        std::copy(t.begin(), t.end(), tmp.begin() + static_cast<std::size_t>(r) * width);
    }
    std::vector<double> out(x.size());
    line.resize(static_cast<std::size_t>(height));
    for (int c = 0; c < width; ++c) {
        for (int r = 0; r < height; ++r) line[r] = tmp[static_cast<std::size_t>(r) * width + c];
        const auto t = dct_1d(line, height, inverse);
        for (int r = 0; r < height; ++r) out[static_cast<std::size_t>(r) * width + c] = t[r];
    }
    return out;
}

// Ranks of all modes in increasing-frequency order; rank[mode index] is
// 1-based so it can feed ThresholdProfile::tau directly.
std::vector<int> frequency_ranks(const Field& x) {
    const int n = x.size();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    if (x.kind == FieldKind::Signal1D) {
        // mode index == k; frequency already increasing in k
    } else {
        const int w = x.width, h = x.height;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const int akr = a / w, akc = a % w, bkr = b / w, bkc = b % w;
            const double fa = mode_frequency(akr, h) + mode_frequency(akc, w);
            const double fb = mode_frequency(bkr, h) + mode_frequency(bkc, w);
            if (fa != fb) return fa < fb;
            if (akr + akc != bkr + bkc) return akr + akc < bkr + bkc;
            return akr < bkr;
        });
    }
    std::vector<int> rank(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rank[order[i]] = i + 1;
    return rank;
}

}  // namespace

Field fourier_denoise(const Field& x, const ThresholdProfile& profile) {
    x.require_valid();
    const bool is_1d = x.kind == FieldKind::Signal1D;
    auto coeffs = is_1d ? dct_1d(x.values, x.width, false)
                        : dct_2d(x.values, x.height, x.width, false);
    const auto rank = frequency_ranks(x);
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] *= profile.tau(rank[i]);
    Field out = x;
    out.values = is_1d ? dct_1d(coeffs, x.width, true)
                       : dct_2d(coeffs, x.height, x.width, true);
    return out;
}

double total_variation(const Field& u) {
    u.require_valid();
    double tv = 0.0;
    if (u.kind == FieldKind::Signal1D) {
        for (int i = 0; i + 1 < u.width; ++i) tv += std::abs(u.values[i + 1] - u.values[i]);
        return tv;
    }
    for (int r = 0; r < u.height; ++r)
        for (int c = 0; c < u.width; ++c) {
            const double gx = c + 1 < u.width ? u.at(r, c + 1) - u.at(r, c) : 0.0;
            const double gy = r + 1 < u.height ? u.at(r + 1, c) - u.at(r, c) : 0.0;
            tv += std::sqrt(gx * gx + gy * gy);
        }
    return tv;
}

double tv_objective(const Field& u, const Field& x, double lambda) {
    double data = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const double d = u.values[i] - x.values[i];
        data += d * d;
    }
    return 0.5 * data + lambda * total_variation(u);
}

Field tv_denoise(const Field& x, double lambda, int iterations,
                 std::vector<double>* energy_trace) {
    x.require_valid();
    if (!(lambda > 0.0)) throw std::invalid_argument("tv_denoise: lambda must be positive");
    if (iterations < 1) throw std::invalid_argument("tv_denoise: iterations must be >= 1");

    const bool is_1d = x.kind == FieldKind::Signal1D;
    const int w = x.width, h = x.height;
    const std::size_t n = x.values.size();
    const double step = is_1d ? 0.25 : 0.125;

    std::vector<double> px(n, 0.0), py;
    if (!is_1d) py.assign(n, 0.0);
    std::vector<double> div_p(n, 0.0), work(n, 0.0);

    auto divergence = [&]() {
        // adjoint of the forward-difference gradient
        if (is_1d) {
            for (int i = 0; i < w; ++i) {
                double d = i < w - 1 ? px[i] : 0.0;
                if (i > 0) d -= px[i - 1];
                div_p[i] = d;
            }
            return;
        }
        for (int r = 0; r < h; ++r)
            for (int c = 0; c < w; ++c) {
                const std::size_t k = static_cast<std::size_t>(r) * w + c;
                double d = 0.0;
                if (c < w - 1) d += px[k];
                if (c > 0) d -= px[k - 1];
                if (r < h - 1) d += py[k];
                if (r > 0) d -= py[k - static_cast<std::size_t>(w)];
                div_p[k] = d;
            }
    };

    Field u = x;
    auto update_u = [&]() {
        divergence();
        for (std::size_t i = 0; i < n; ++i) u.values[i] = x.values[i] - lambda * div_p[i];
    };

    if (energy_trace) {
        energy_trace->clear();
        update_u();
        energy_trace->push_back(tv_objective(u, x, lambda));
    }

    for (int it = 0; it < iterations; ++it) {
        divergence();
        for (std::size_t i = 0; i < n; ++i) work[i] = div_p[i] - x.values[i] / lambda;

        if (is_1d) {
            for (int i = 0; i < w; ++i) {
                const double g = i < w - 1 ? work[i + 1] - work[i] : 0.0;
                const double np = px[i] + step * g;
                px[i] = np / (1.0 + step * std::abs(g));
            }
        } else {
            for (int r = 0; r < h; ++r)
                for (int c = 0; c < w; ++c) {
                    const std::size_t k = static_cast<std::size_t>(r) * w + c;
                    const double gx = c < w - 1 ? work[k + 1] - work[k] : 0.0;
                    const double gy = r < h - 1 ? work[k + static_cast<std::size_t>(w)] - work[k] : 0.0;
                    const double mag = std::sqrt(gx * gx + gy * gy);
                    px[k] = (px[k] + step * gx) / (1.0 + step * mag);
                    py[k] = (py[k] + step * gy) / (1.0 + step * mag);
                }
        }

        if (energy_trace) {
            update_u();
            energy_trace->push_back(tv_objective(u, x, lambda));
        }
    }

    update_u();
    return u;
}

}  // namespace qst

#include "qst/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace qst {

namespace {

std::vector<double> gaussian_kernel(double sigma) {
    const int radius = static_cast<int>(std::ceil(4.0 * sigma));
    std::vector<double> k(static_cast<std::size_t>(2 * radius + 1));
    double sum = 0.0;
    for (int t = -radius; t <= radius; ++t) {
        const double w = std::exp(-0.5 * (t * t) / (sigma * sigma));
        k[static_cast<std::size_t>(t + radius)] = w;
        sum += w;
    }
    for (double& w : k) w /= sum;
    return k;
}

// 1D pass over a strided line, clamping indices to the line (edge replication).
void convolve_line(const double* src, double* dst, int n, int stride,
                   const std::vector<double>& kernel) {
    const int radius = static_cast<int>(kernel.size() / 2);
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int t = -radius; t <= radius; ++t) {
            const int j = std::clamp(i + t, 0, n - 1);
            acc += kernel[static_cast<std::size_t>(t + radius)] * src[j * stride];
        }
        dst[i * stride] = acc;
    }
}

}  // namespace

Field gaussian_smooth(const Field& x, double sigma) {
    x.require_valid();
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("gaussian_smooth: sigma must be positive");

    const auto kernel = gaussian_kernel(sigma);
    Field out = x;

    if (x.kind == FieldKind::Signal1D) {
        convolve_line(x.values.data(), out.values.data(), x.width, 1, kernel);
        return out;
    }

    // rows, then columns
    Field tmp = x;
    for (int r = 0; r < x.height; ++r)
        convolve_line(x.values.data() + static_cast<std::size_t>(r) * x.width,
                      tmp.values.data() + static_cast<std::size_t>(r) * x.width, x.width, 1,
                      kernel);
    for (int c = 0; c < x.width; ++c)
        convolve_line(tmp.values.data() + c, out.values.data() + c, x.height, x.width, kernel);
    return out;
}

}  // namespace qst

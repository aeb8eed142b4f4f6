#include "qst/metrics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qst {

namespace {

void require_same_shape(const Field& a, const Field& b, const char* who) {
    a.require_valid();
    b.require_valid();
    if (a.width != b.width || a.height != b.height || a.kind != b.kind)
        throw std::invalid_argument(std::string(who) + ": field shapes differ");
}

double resolve_peak(const Field& clean, std::optional<double> peak, const char* who) {
    const double p = peak.value_or(clean.max_value());
    if (!(p > 0.0) || !std::isfinite(p))
        throw std::invalid_argument(std::string(who) + ": peak must be positive");
    return p;
}

constexpr int kSsimWindow = 11;

std::array<double, kSsimWindow * kSsimWindow> ssim_window() {
    constexpr double sigma = 1.5;
    std::array<double, kSsimWindow * kSsimWindow> w{};
    double sum = 0.0;
    for (int r = 0; r < kSsimWindow; ++r)
        for (int c = 0; c < kSsimWindow; ++c) {
            const double dr = r - (kSsimWindow - 1) / 2.0;
            const double dc = c - (kSsimWindow - 1) / 2.0;
            const double g = std::exp(-(dr * dr + dc * dc) / (2.0 * sigma * sigma));
            w[static_cast<std::size_t>(r) * kSsimWindow + c] = g;
            sum += g;
        }
    for (double& x : w) x /= sum;
    return w;
}

}  // namespace

double psnr_db(const Field& clean, const Field& test, std::optional<double> peak) {
    require_same_shape(clean, test, "psnr");
    const double p = resolve_peak(clean, peak, "psnr");
    double mse = 0.0;
    for (std::size_t i = 0; i < clean.values.size(); ++i) {
        const double d = test.values[i] - clean.values[i];
        mse += d * d;
    }
    mse /= static_cast<double>(clean.values.size());
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(p * p / mse);
}

double ssim(const Field& clean, const Field& test, std::optional<double> peak) {
    require_same_shape(clean, test, "ssim");
    if (clean.kind != FieldKind::Image2D)
        throw std::invalid_argument("ssim: defined for 2D images only");
    if (clean.width < kSsimWindow || clean.height < kSsimWindow)
        throw std::invalid_argument("ssim: image smaller than the 11x11 window");

    const double p = resolve_peak(clean, peak, "ssim");
    const double c1 = (0.01 * p) * (0.01 * p);
    const double c2 = (0.03 * p) * (0.03 * p);
    static const auto window = ssim_window();

    double total = 0.0;
    int count = 0;
    for (int r0 = 0; r0 + kSsimWindow <= clean.height; ++r0) {
        for (int c0 = 0; c0 + kSsimWindow <= clean.width; ++c0) {
            double mu_a = 0.0, mu_b = 0.0;
            for (int r = 0; r < kSsimWindow; ++r)
                for (int c = 0; c < kSsimWindow; ++c) {
                    const double w = window[static_cast<std::size_t>(r) * kSsimWindow + c];
                    mu_a += w * clean.at(r0 + r, c0 + c);
                    mu_b += w * test.at(r0 + r, c0 + c);
                }
            double var_a = 0.0, var_b = 0.0, cov = 0.0;
            for (int r = 0; r < kSsimWindow; ++r)
                for (int c = 0; c < kSsimWindow; ++c) {
                    const double w = window[static_cast<std::size_t>(r) * kSsimWindow + c];
                    const double da = clean.at(r0 + r, c0 + c) - mu_a;
                    const double db = test.at(r0 + r, c0 + c) - mu_b;
                    var_a += w * da * da;
                    var_b += w * db * db;
                    cov += w * da * db;
                }
            const double num = (2.0 * mu_a * mu_b + c1) * (2.0 * cov + c2);
            const double den = (mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2);
            total += num / den;
            ++count;
        }
    }
    return total / count;
}

}  // namespace qst

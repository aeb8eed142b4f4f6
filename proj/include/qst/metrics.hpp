#pragma once

#include <optional>

#include "qst/field.hpp"

namespace qst {

/// 10 log10(peak^2 / MSE). Peak defaults to max(clean) since the dynamic
/// range of the data is not fixed by the file formats. Identical fields
/// return +infinity.
double psnr_db(const Field& clean, const Field& test, std::optional<double> peak = {});

/// Mean local structural similarity over an 11x11 Gaussian window
/// (sigma 1.5), C1 = (0.01 peak)^2, C2 = (0.03 peak)^2, valid-region
/// windowing (no padding). Requires 2D fields with both dimensions >= 11;
/// 1D signals are rejected (reported as NA upstream).
double ssim(const Field& clean, const Field& test, std::optional<double> peak = {});

}  // namespace qst

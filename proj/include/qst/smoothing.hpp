#pragma once

#include "qst/field.hpp"

namespace qst {

/// Gaussian convolution, separable in 2D. The kernel is truncated at radius
/// ceil(4*sigma) and renormalized to sum 1; the boundary replicates edge
/// samples, so constant fields are fixed points. Callers wanting no smoothing
/// skip the call: sigma <= 0 is an error.
Field gaussian_smooth(const Field& x, double sigma);

}  // namespace qst

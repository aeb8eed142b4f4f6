#pragma once

#include <cstdint>

#include "qst/field.hpp"

namespace qst {

/// Synthetic 1D test signal: a high-amplitude plateau carrying a
/// low-frequency oscillation followed by a low-amplitude plateau carrying a
/// high-frequency one (amplitude ratio 5, frequency ratio 8). Nonnegative,
/// deterministic per seed. Requires n >= 64.
Field make_signal(int n, std::uint64_t seed);

/// Synthetic n x n image with the same contrast design column-split: bright
/// low-frequency left half, dark high-frequency right half. Requires n >= 32.
Field make_image(int n, std::uint64_t seed);

}  // namespace qst

#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "qst/pipeline.hpp"

namespace qst {

/// Writes the CSV files backing the usual diagnostic plots into `out_dir`
/// (created if missing):
///   spectrum.csv          index,eigenvalue -- descending
///   coefficients.csv      index,eigenvalue,alpha,tau -- threshold order
///   eigenvector_<i>.csv   position,smoothed_potential,psi -- one per index
///   noisy.csv, denoised.csv, clean.csv (when a reference is given)
/// Eigenvector indices are 1-based in threshold order; an empty selection
/// defaults to the first, middle and last kept index. Output is byte-stable
/// across re-runs with the same inputs.
void emit_plotdata(const PipelineArtifacts& artifacts, const Field& noisy,
                   const std::optional<Field>& clean, const std::filesystem::path& out_dir,
                   std::vector<int> eigenvector_indices = {});

}  // namespace qst

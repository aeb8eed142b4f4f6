#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "qst/eigensolver.hpp"
#include "qst/field.hpp"
#include "qst/hamiltonian.hpp"
#include "qst/transform.hpp"

namespace qst {

enum class EigenMode { Full, Partial };

/// Which end of the spectrum the first (fully kept) threshold indices map to.
///
/// LowFirst pairs tau_1 with the lowest eigenvalue. An eigenvector of
/// eigenvalue E oscillates where the smoothed potential lies below E and
/// decays where it lies above, so keeping the low end retains every region's
/// sub-band content up to the potential scale and discards the globally
/// oscillating modes that carry mostly noise -- this is the ordering that
/// actually denoises, and the zero-potential limit of it reproduces
/// increasing-frequency Fourier thresholding. HighFirst keeps the top of the
/// spectrum instead and is provided for comparison.
enum class SpectralOrder { LowFirst, HighFirst };

struct PipelineConfig {
    double ratio = 1.0;   ///< hbar^2/2m
    double sigma = 0.0;   ///< Gaussian pre-smoothing std; 0 skips smoothing
    int s = 0;
    double rho = 1.0;
    BoundaryMode boundary = BoundaryMode::GraphLaplacian;
    bool project_smoothed = false;  ///< project the smoothed field instead of the raw one
    EigenMode eigen_mode = EigenMode::Full;
    int partial_count = 0;  ///< eigenpairs for Partial mode; 0 derives it from s and rho
    SpectralOrder order = SpectralOrder::LowFirst;
    int dense_limit = 4096;
};

struct StageTimings {
    double smooth_s = 0.0;
    double assemble_s = 0.0;
    double eig_s = 0.0;
    double project_s = 0.0;
    double reconstruct_s = 0.0;
    double total() const {
        return smooth_s + assemble_s + eig_s + project_s + reconstruct_s;
    }
};

/// Error from one pipeline stage, tagged with the stage name.
class PipelineError : public std::runtime_error {
public:
    PipelineError(std::string stage, const std::string& what)
        : std::runtime_error("[" + stage + "] " + what), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

/// Everything the pipeline produced, kept for plot-data emission. The basis
/// is stored in threshold order (ascending eigenvalues under LowFirst).
struct PipelineArtifacts {
    PipelineConfig config;
    Field smoothed;
    EigenBasis basis;
    Coefficients coeffs;
    Field denoised;
    StageTimings timings;
};

/// smooth -> assemble H -> eigenvectors -> project -> threshold+reconstruct.
PipelineArtifacts run_pipeline(const Field& noisy, const PipelineConfig& config);
Field denoise_pipeline(const Field& noisy, const PipelineConfig& config);

/// Quality metrics of a denoised field against its clean reference plus the
/// config echo. ssim is NaN ("NA") for 1D signals; all metrics are NaN when
/// no clean reference was supplied.
struct DenoiseReport {
    double psnr_db = 0.0;
    double snr_db = 0.0;
    double ssim = 0.0;
    PipelineConfig config;
    StageTimings timings;
};

DenoiseReport make_report(const std::optional<Field>& clean, const Field& denoised,
                          const PipelineConfig& config, const StageTimings& timings);

/// One-row CSV with header. Timings are deliberately excluded so re-runs of
/// the same seed/config are byte-identical; they go to the log instead.
void write_report_csv(const DenoiseReport& report, std::ostream& out);

std::string boundary_name(BoundaryMode mode);
std::string order_name(SpectralOrder order);
BoundaryMode boundary_from_name(const std::string& name);
SpectralOrder order_from_name(const std::string& name);

}  // namespace qst

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "qst/noise.hpp"
#include "qst/pipeline.hpp"
#include "qst/synth.hpp"

namespace qst {

struct ExperimentDataSpec {
    enum class Source { SynthSignal, SynthImage, File };
    Source source = Source::SynthSignal;
    int n = 256;              ///< length (signal) or side (image)
    std::uint64_t seed = 1;   ///< synth generator seed
    std::filesystem::path path;  ///< clean reference file for Source::File
};

/// One evaluated search cell. NaN / -1 mark parameters that do not apply to
/// the method ("NA" in the CSV).
struct GridRow {
    std::string method;
    double ratio, sigma, rho, lambda;
    int s, iterations;
    double psnr_db, snr_db, ssim;
    GridRow();
};

struct ExperimentSpec {
    ExperimentDataSpec data;
    NoiseSpec noise;
    std::vector<std::string> methods{"proposed", "fourier", "tv"};

    // proposed-method search space; empty lists fall back to defaults
    // derived from the data (scales are multiples of the noisy field's range)
    std::vector<double> ratios;        ///< absolute values, wins over scales
    std::vector<double> ratio_scales{0.1, 0.5, 1.0, 5.0, 25.0, 125.0};
    std::vector<double> sigmas{0.0, 1.0, 2.0, 4.0};
    std::vector<int> s_values;         ///< absolute, wins over fractions
    std::vector<double> s_fractions{0.01, 0.05, 0.10, 0.25};
    std::vector<double> rho_factors{0.5, 1.0, 2.0};  ///< rho = factor * s
    BoundaryMode boundary = BoundaryMode::GraphLaplacian;
    SpectralOrder order = SpectralOrder::LowFirst;
    bool project_smoothed = false;

    // tv baseline search space
    std::vector<double> tv_lambdas;    ///< absolute, wins over scales
    std::vector<double> tv_lambda_scales{0.002, 0.005, 0.01, 0.02, 0.05, 0.1, 0.25};
    int tv_iterations = 200;
};

struct MethodBest {
    GridRow row;
    Field denoised;
    PipelineConfig config;  ///< meaningful for "proposed" only
};

struct ExperimentResult {
    Field clean;
    Field noisy;
    double achieved_snr_db = 0.0;
    std::vector<GridRow> grid;      ///< every evaluated cell, deterministic order
    std::vector<MethodBest> best;   ///< one entry per requested method
};

/// Loads/generates the clean field, corrupts it, and exhaustively searches
/// each method's grid for the best PSNR against the clean reference.
/// Decompositions are shared across (s, rho) cells of one (ratio, sigma).
ExperimentResult run_experiment(const ExperimentSpec& spec);

void write_grid_csv(const std::vector<GridRow>& rows, std::ostream& out);
void write_best_csv(const std::vector<MethodBest>& best, std::ostream& out);

/// JSON descriptor -> spec. Unknown keys are rejected.
ExperimentSpec parse_experiment_spec(const std::string& json_text);

}  // namespace qst

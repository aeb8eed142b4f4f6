#include "qst/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>

#include "qst/field_io.hpp"
#include "qst/metrics.hpp"
#include "qst/noise.hpp"
#include "qst/smoothing.hpp"

namespace qst {

namespace {

class StageClock {
public:
    StageClock() : start_(std::chrono::steady_clock::now()) {}
    double lap() {
        const auto now = std::chrono::steady_clock::now();
        const double s = std::chrono::duration<double>(now - start_).count();
        start_ = now;
        return s;
    }

private:
    std::chrono::steady_clock::time_point start_;
};

template <typename F>
auto stage(const char* name, F&& f) {
    try {
        return f();
    } catch (const PipelineError&) {
        throw;
    } catch (const std::exception& e) {
        throw PipelineError(name, e.what());
    }
}

}  // namespace

PipelineArtifacts run_pipeline(const Field& noisy, const PipelineConfig& config) {
    PipelineArtifacts art;
    art.config = config;
    StageClock clock;

    art.smoothed = stage("smooth", [&] {
        noisy.require_valid();
        return config.sigma > 0.0 ? gaussian_smooth(noisy, config.sigma) : noisy;
    });
    art.timings.smooth_s = clock.lap();

    const HamiltonianMatrix H = stage("assemble", [&] {
        return build_hamiltonian(art.smoothed, PlanckMassRatio(config.ratio), config.boundary);
    });
    art.timings.assemble_s = clock.lap();

    const ThresholdProfile profile(config.s, config.rho);
    art.basis = stage("eigen", [&] {
        EigOptions opts;
        opts.dense_limit = config.dense_limit;
        if (config.eigen_mode == EigenMode::Full) {
            EigenBasis basis = eig_full(H, opts);
            return config.order == SpectralOrder::LowFirst ? basis.reversed()
                                                           : std::move(basis);
        }
        const int m = config.partial_count > 0
                          ? config.partial_count
                          : std::max(1, profile.keep_count(H.dim()));
        const SpectrumEnd end = config.order == SpectralOrder::LowFirst
                                    ? SpectrumEnd::Lowest
                                    : SpectrumEnd::Highest;
        EigenBasis basis = eig_partial(H, m, end, opts);
        return config.order == SpectralOrder::LowFirst ? basis.reversed() : std::move(basis);
    });
    art.timings.eig_s = clock.lap();

    art.coeffs = stage("project", [&] {
        return project(art.basis, config.project_smoothed ? art.smoothed : noisy);
    });
    art.timings.project_s = clock.lap();

    art.denoised = stage("reconstruct", [&] {
        return reconstruct(art.basis, art.coeffs, profile, FieldShape::of(noisy));
    });
    art.timings.reconstruct_s = clock.lap();

    return art;
}

Field denoise_pipeline(const Field& noisy, const PipelineConfig& config) {
    return run_pipeline(noisy, config).denoised;
}

DenoiseReport make_report(const std::optional<Field>& clean, const Field& denoised,
                          const PipelineConfig& config, const StageTimings& timings) {
    DenoiseReport r;
    r.config = config;
    r.timings = timings;
    const double na = std::numeric_limits<double>::quiet_NaN();
    if (!clean) {
        r.psnr_db = r.snr_db = r.ssim = na;
        return r;
    }
    r.psnr_db = psnr_db(*clean, denoised);
    r.snr_db = snr_db(*clean, denoised);
    if (clean->kind == FieldKind::Image2D && clean->width >= 11 && clean->height >= 11)
        r.ssim = ssim(*clean, denoised);
    else
        r.ssim = na;
    return r;
}

namespace {

std::string metric_cell(double v) {
    return std::isnan(v) ? "NA" : format_double(v);
}

}  // namespace

void write_report_csv(const DenoiseReport& report, std::ostream& out) {
    const PipelineConfig& c = report.config;
    out << "psnr_db,snr_db,ssim,ratio,sigma,s,rho,boundary,order,project_smoothed,"
           "eigen_mode,partial_count\n";
    out << metric_cell(report.psnr_db) << ',' << metric_cell(report.snr_db) << ','
        << metric_cell(report.ssim) << ',' << format_double(c.ratio) << ','
        << format_double(c.sigma) << ',' << c.s << ',' << format_double(c.rho) << ','
        << boundary_name(c.boundary) << ',' << order_name(c.order) << ','
        << (c.project_smoothed ? "true" : "false") << ','
        << (c.eigen_mode == EigenMode::Full ? "full" : "partial") << ',' << c.partial_count
        << '\n';
}

std::string boundary_name(BoundaryMode mode) {
    return mode == BoundaryMode::GraphLaplacian ? "graph" : "tapered";
}

std::string order_name(SpectralOrder order) {
    return order == SpectralOrder::LowFirst ? "low" : "high";
}

BoundaryMode boundary_from_name(const std::string& name) {
    if (name == "graph") return BoundaryMode::GraphLaplacian;
    if (name == "tapered") return BoundaryMode::TaperedRows;
    throw std::invalid_argument("unknown boundary mode '" + name + "' (want graph|tapered)");
}

SpectralOrder order_from_name(const std::string& name) {
    if (name == "low") return SpectralOrder::LowFirst;
    if (name == "high") return SpectralOrder::HighFirst;
    throw std::invalid_argument("unknown spectral order '" + name + "' (want low|high)");
}

}  // namespace qst

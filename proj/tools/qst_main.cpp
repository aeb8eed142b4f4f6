#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "qst/experiment.hpp"
#include "qst/field_io.hpp"
#include "qst/metrics.hpp"
#include "qst/plotdata.hpp"
#include "qst/smoothing.hpp"

namespace fs = std::filesystem;
using namespace qst;

namespace {

std::string metric_text(double v) {
    return std::isnan(v) ? "NA" : format_double(v);
}

NoiseModel model_from_name(const std::string& name) {
    if (name == "poisson") return NoiseModel::Poisson;
    if (name == "gaussian") return NoiseModel::SignalDependentGaussian;
    throw std::invalid_argument("unknown noise model '" + name + "' (want poisson|gaussian)");
}

PipelineConfig config_from_json_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path.string());
    nlohmann::json j = nlohmann::json::parse(in);
    PipelineConfig cfg;
    cfg.ratio = j.value("ratio", cfg.ratio);
    cfg.sigma = j.value("sigma", cfg.sigma);
    cfg.s = j.value("s", cfg.s);
    cfg.rho = j.value("rho", cfg.rho);
    if (j.contains("boundary")) cfg.boundary = boundary_from_name(j.at("boundary"));
    if (j.contains("order")) cfg.order = order_from_name(j.at("order"));
    cfg.project_smoothed = j.value("project_smoothed", cfg.project_smoothed);
    if (j.contains("eigen_mode")) {
        const std::string mode = j.at("eigen_mode");
        if (mode == "full")
            cfg.eigen_mode = EigenMode::Full;
        else if (mode == "partial")
            cfg.eigen_mode = EigenMode::Partial;
        else
            throw std::invalid_argument("unknown eigen_mode '" + mode + "'");
    }
    cfg.partial_count = j.value("partial_count", cfg.partial_count);
    cfg.dense_limit = j.value("dense_limit", cfg.dense_limit);
    return cfg;
}

struct PipelineCliFlags {
    std::string config_path;
    std::string boundary = "graph";
    std::string order = "low";
    std::string eigen_mode = "full";
    PipelineConfig cfg;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config file; flags override it");
        cmd->add_option("--ratio", cfg.ratio, "scale hbar^2/2m of the discrete Laplacian");
        cmd->add_option("--sigma", cfg.sigma, "Gaussian pre-smoothing std (0 = off)");
        cmd->add_option("--s", cfg.s, "fully kept leading coefficients");
        cmd->add_option("--rho", cfg.rho, "threshold ramp length");
        cmd->add_option("--boundary", boundary, "boundary rule: graph|paper");
        cmd->add_option("--order", order,
                        "spectrum end kept first: low|high (low denoises)");
        cmd->add_flag("--project-smoothed", cfg.project_smoothed,
                      "project the smoothed field instead of the raw one");
        cmd->add_option("--eigen-mode", eigen_mode, "full|partial");
        cmd->add_option("--partial-count", cfg.partial_count,
                        "eigenpairs for partial mode (0 = from s and rho)");
        cmd->add_option("--dense-limit", cfg.dense_limit, "max dim for the dense solver");
    }

    PipelineConfig resolve(const CLI::App* cmd) const {
        PipelineConfig from_flags = cfg;
        from_flags.boundary = boundary_from_name(boundary);
        from_flags.order = order_from_name(order);
        if (eigen_mode == "partial")
            from_flags.eigen_mode = EigenMode::Partial;
        else if (eigen_mode != "full")
            throw std::invalid_argument("unknown eigen mode '" + eigen_mode + "'");
        if (config_path.empty()) return from_flags;

        // config file provides the base; explicit flags override it
        PipelineConfig out = config_from_json_file(config_path);
        auto given = [&](const char* name) { return cmd->count(name) > 0; };
        if (given("--ratio")) out.ratio = from_flags.ratio;
        if (given("--sigma")) out.sigma = from_flags.sigma;
        if (given("--s")) out.s = from_flags.s;
        if (given("--rho")) out.rho = from_flags.rho;
        if (given("--boundary")) out.boundary = from_flags.boundary;
        if (given("--order")) out.order = from_flags.order;
        if (given("--project-smoothed")) out.project_smoothed = from_flags.project_smoothed;
        if (given("--eigen-mode")) out.eigen_mode = from_flags.eigen_mode;
        if (given("--partial-count")) out.partial_count = from_flags.partial_count;
        if (given("--dense-limit")) out.dense_limit = from_flags.dense_limit;
        return out;
    }
};

void print_metrics_line(const std::string& label, const Field& clean, const Field& test) {
    std::ostringstream ss;
    ss << label << ": psnr_db=" << metric_text(psnr_db(clean, test))
       << " snr_db=" << metric_text(snr_db(clean, test));
    if (clean.kind == FieldKind::Image2D && clean.width >= 11 && clean.height >= 11)
        ss << " ssim=" << metric_text(ssim(clean, test));
    else
        ss << " ssim=NA";
    std::cout << ss.str() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"adaptive Schroedinger-eigenbasis transform toolkit"};
    app.require_subcommand(1);

    // ---- synth ----------------------------------------------------------
    auto* synth = app.add_subcommand("synth", "generate synthetic test data");
    std::string synth_kind = "signal";
    int synth_n = 0;
    std::uint64_t synth_seed = 1;
    std::string synth_out;
    synth->add_option("--kind", synth_kind, "signal|image")->capture_default_str();
    synth->add_option("--n", synth_n, "length (signal) or side (image); 0 = default");
    synth->add_option("--seed", synth_seed, "generator seed")->capture_default_str();
    synth->add_option("-o,--output", synth_out, "output file (.csv or .pgm)")->required();

    // ---- corrupt --------------------------------------------------------
    auto* corrupt_cmd = app.add_subcommand("corrupt", "add signal-dependent noise");
    std::string corrupt_in, corrupt_out, corrupt_model = "poisson";
    double corrupt_snr = 15.0;
    std::uint64_t corrupt_seed = 0;
    corrupt_cmd->add_option("-i,--input", corrupt_in, "clean field")->required();
    corrupt_cmd->add_option("-o,--output", corrupt_out, "noisy field")->required();
    corrupt_cmd->add_option("--model", corrupt_model, "poisson|gaussian")
        ->capture_default_str();
    corrupt_cmd->add_option("--snr", corrupt_snr, "target SNR in dB")->capture_default_str();
    corrupt_cmd->add_option("--seed", corrupt_seed, "noise seed")->capture_default_str();

    // ---- metrics --------------------------------------------------------
    auto* metrics_cmd = app.add_subcommand("metrics", "compare two fields");
    std::string metrics_clean, metrics_test;
    double metrics_peak = 0.0;
    metrics_cmd->add_option("--clean", metrics_clean, "reference field")->required();
    metrics_cmd->add_option("--test", metrics_test, "field under test")->required();
    metrics_cmd->add_option("--peak", metrics_peak, "PSNR/SSIM peak (0 = max of clean)");

    // ---- denoise --------------------------------------------------------
    auto* denoise_cmd = app.add_subcommand("denoise", "run the adaptive-transform pipeline");
    std::string den_in, den_out, den_clean, den_report, den_plotdir;
    PipelineCliFlags flags;
    denoise_cmd->add_option("-i,--input", den_in, "noisy field")->required();
    denoise_cmd->add_option("-o,--output", den_out, "denoised field")->required();
    denoise_cmd->add_option("--clean", den_clean, "clean reference for metrics");
    denoise_cmd->add_option("--report", den_report, "write a one-row report CSV here");
    denoise_cmd->add_option("--plotdata", den_plotdir, "emit plot CSVs into this directory");
    flags.attach(denoise_cmd);

    // ---- experiment -----------------------------------------------------
    auto* exp_cmd = app.add_subcommand("experiment", "grid-search experiment from a descriptor");
    std::string exp_spec, exp_outdir = ".";
    exp_cmd->add_option("--spec", exp_spec, "JSON experiment descriptor")->required();
    exp_cmd->add_option("-o,--outdir", exp_outdir, "output directory")
        ->capture_default_str();

    // ---- dump-eigs ------------------------------------------------------
    auto* dump_cmd = app.add_subcommand("dump-eigs", "export eigenpairs of a field's operator");
    std::string dump_in, dump_out, dump_which = "full", dump_boundary = "graph";
    double dump_ratio = 1.0, dump_sigma = 0.0;
    int dump_count = 0;
    bool dump_vectors = false;
    dump_cmd->add_option("-i,--input", dump_in, "potential field")->required();
    dump_cmd->add_option("-o,--output", dump_out, "eigenpair CSV")->required();
    dump_cmd->add_option("--ratio", dump_ratio, "hbar^2/2m")->capture_default_str();
    dump_cmd->add_option("--sigma", dump_sigma, "pre-smoothing std (0 = off)")
        ->capture_default_str();
    dump_cmd->add_option("--boundary", dump_boundary, "graph|paper")->capture_default_str();
    dump_cmd->add_option("--which", dump_which, "full|low|high")->capture_default_str();
    dump_cmd->add_option("--count", dump_count, "eigenpair count for low|high");
    dump_cmd->add_flag("--vectors", dump_vectors, "include eigenvector components");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*synth) {
            const Field f = synth_kind == "image"
                                ? make_image(synth_n > 0 ? synth_n : 64, synth_seed)
                                : make_signal(synth_n > 0 ? synth_n : 256, synth_seed);
            save_field(f, synth_out);
            std::cout << "wrote " << synth_out << " (" << f.height << "x" << f.width << ")\n";
        } else if (*corrupt_cmd) {
            const Field clean = load_field(corrupt_in);
            const auto result =
                corrupt(clean, {model_from_name(corrupt_model), corrupt_snr, corrupt_seed});
            save_field(result.noisy, corrupt_out);
            std::cout << "achieved_snr_db=" << format_double(result.achieved_snr_db) << '\n';
        } else if (*metrics_cmd) {
            const Field clean = load_field(metrics_clean);
            const Field test = load_field(metrics_test);
            std::optional<double> peak;
            if (metrics_peak > 0.0) peak = metrics_peak;
            std::cout << "psnr_db,snr_db,ssim\n";
            const bool can_ssim = clean.kind == FieldKind::Image2D && clean.width >= 11 &&
                                  clean.height >= 11;
            std::cout << metric_text(psnr_db(clean, test, peak)) << ','
                      << metric_text(snr_db(clean, test)) << ','
                      << (can_ssim ? metric_text(ssim(clean, test, peak)) : "NA") << '\n';
        } else if (*denoise_cmd) {
            const Field noisy = load_field(den_in);
            const PipelineConfig cfg = flags.resolve(denoise_cmd);
            const PipelineArtifacts art = run_pipeline(noisy, cfg);
            save_field(art.denoised, den_out);

            std::optional<Field> clean;
            if (!den_clean.empty()) clean = load_field(den_clean);
            const DenoiseReport report = make_report(clean, art.denoised, cfg, art.timings);
            if (clean) print_metrics_line("denoised", *clean, art.denoised);
            std::fprintf(stderr,
                         "timings_s smooth=%.3f assemble=%.3f eig=%.3f project=%.3f "
                         "reconstruct=%.3f total=%.3f\n",
                         art.timings.smooth_s, art.timings.assemble_s, art.timings.eig_s,
                         art.timings.project_s, art.timings.reconstruct_s,
                         art.timings.total());
            if (!den_report.empty()) {
                std::ofstream out(den_report, std::ios::binary);
                if (!out) throw std::runtime_error("cannot open " + den_report);
                write_report_csv(report, out);
            }
            if (!den_plotdir.empty()) emit_plotdata(art, noisy, clean, den_plotdir);
        } else if (*exp_cmd) {
            std::ifstream in(exp_spec);
            if (!in) throw std::runtime_error("cannot open spec " + exp_spec);
            std::ostringstream ss;
            ss << in.rdbuf();
            const ExperimentSpec spec = parse_experiment_spec(ss.str());
            const ExperimentResult result = run_experiment(spec);

            fs::create_directories(exp_outdir);
            const fs::path dir(exp_outdir);
            save_field(result.clean, dir / "clean.csv", FieldFormat::Csv);
            save_field(result.noisy, dir / "noisy.csv", FieldFormat::Csv);
            {
                std::ofstream out(dir / "grid.csv", std::ios::binary);
                write_grid_csv(result.grid, out);
            }
            {
                std::ofstream out(dir / "best.csv", std::ios::binary);
                write_best_csv(result.best, out);
            }
            for (const auto& b : result.best)
                save_field(b.denoised, dir / ("denoised_" + b.row.method + ".csv"),
                           FieldFormat::Csv);
            std::cout << "achieved_snr_db=" << format_double(result.achieved_snr_db) << '\n';
            for (const auto& b : result.best)
                std::cout << b.row.method << " best psnr_db=" << metric_text(b.row.psnr_db)
                          << " snr_db=" << metric_text(b.row.snr_db)
                          << " ssim=" << metric_text(b.row.ssim) << '\n';
        } else if (*dump_cmd) {
            Field f = load_field(dump_in);
            if (dump_sigma > 0.0) f = gaussian_smooth(f, dump_sigma);
            const auto H = build_hamiltonian(f, PlanckMassRatio(dump_ratio),
                                             boundary_from_name(dump_boundary));
            EigenBasis basis;
            if (dump_which == "full") {
                basis = eig_full(H);
            } else {
                if (dump_count < 1)
                    throw std::invalid_argument("--count is required for --which low|high");
                basis = eig_partial(H, dump_count,
                                    dump_which == "low" ? SpectrumEnd::Lowest
                                                        : SpectrumEnd::Highest);
            }
            std::ofstream out(dump_out, std::ios::binary);
            if (!out) throw std::runtime_error("cannot open " + dump_out);
            dump_eigenbasis_csv(basis, out, dump_vectors);
            std::cout << "wrote " << basis.count << " eigenpairs to " << dump_out << '\n';
        }
    } catch (const PipelineError& e) {
        std::cerr << "error " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

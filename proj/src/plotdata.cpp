#include "qst/plotdata.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

#include "qst/field_io.hpp"

namespace qst {

namespace {

std::ofstream open_out(const std::filesystem::path& p) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + p.string() + " for writing");
    return out;
}

}  // namespace

void emit_plotdata(const PipelineArtifacts& artifacts, const Field& noisy,
                   const std::optional<Field>& clean, const std::filesystem::path& out_dir,
                   std::vector<int> eigenvector_indices) {
    std::filesystem::create_directories(out_dir);
    const EigenBasis& basis = artifacts.basis;
    const ThresholdProfile profile(artifacts.config.s, artifacts.config.rho);

    {
        // spectrum is reported descending regardless of threshold order
        std::vector<double> evs = basis.eigenvalues;
        std::sort(evs.begin(), evs.end(), std::greater<>());
        auto out = open_out(out_dir / "spectrum.csv");
        out << "index,eigenvalue\n";
        for (std::size_t i = 0; i < evs.size(); ++i)
            out << (i + 1) << ',' << format_double(evs[i]) << '\n';
    }

    {
        auto out = open_out(out_dir / "coefficients.csv");
        dump_coefficients_csv(basis, artifacts.coeffs, profile, out);
    }

    if (eigenvector_indices.empty()) {
        const int kept = std::max(1, profile.keep_count(basis.count));
        const std::set<int> picks{1, (1 + kept) / 2, kept};
        eigenvector_indices.assign(picks.begin(), picks.end());
    }
    for (int idx : eigenvector_indices) {
        if (idx < 1 || idx > basis.count)
            throw std::invalid_argument("emit_plotdata: eigenvector index " +
                                        std::to_string(idx) + " out of range");
        auto out = open_out(out_dir / ("eigenvector_" + std::to_string(idx) + ".csv"));
        out << "position,smoothed_potential,psi\n";
        const auto psi = basis.vector(idx - 1);
        for (int k = 0; k < basis.dim; ++k)
            out << (k + 1) << ',' << format_double(artifacts.smoothed.values[k]) << ','
                << format_double(psi[k]) << '\n';
    }

    save_field(noisy, out_dir / "noisy.csv", FieldFormat::Csv);
    save_field(artifacts.denoised, out_dir / "denoised.csv", FieldFormat::Csv);
    if (clean) save_field(*clean, out_dir / "clean.csv", FieldFormat::Csv);
}

}  // namespace qst

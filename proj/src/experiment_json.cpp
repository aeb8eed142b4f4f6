#include <json.hpp>
#include <set>
#include <stdexcept>

#include "qst/experiment.hpp"

namespace qst {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& known,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!known.count(it.key()))
            throw std::invalid_argument("experiment spec: unknown key '" + it.key() +
                                        "' in " + where);
}

template <typename T>
void read_list(const json& obj, const char* key, std::vector<T>& into) {
    if (obj.contains(key)) into = obj.at(key).get<std::vector<T>>();
}

}  // namespace

ExperimentSpec parse_experiment_spec(const std::string& json_text) {
    const json root = json::parse(json_text);
    ExperimentSpec spec;

    reject_unknown(root, {"data", "noise", "methods", "proposed", "tv"}, "root");

    if (root.contains("data")) {
        const json& d = root.at("data");
        reject_unknown(d, {"source", "n", "seed", "path"}, "data");
        const std::string source = d.value("source", "synth-signal");
        if (source == "synth-signal")
            spec.data.source = ExperimentDataSpec::Source::SynthSignal;
        else if (source == "synth-image")
            spec.data.source = ExperimentDataSpec::Source::SynthImage;
        else if (source == "file")
            spec.data.source = ExperimentDataSpec::Source::File;
        else
            throw std::invalid_argument("experiment spec: unknown data source '" + source +
                                        "' (want synth-signal|synth-image|file)");
        spec.data.n = d.value("n", spec.data.source == ExperimentDataSpec::Source::SynthImage
                                       ? 64
                                       : 256);
        spec.data.seed = d.value("seed", std::uint64_t{1});
        if (d.contains("path")) spec.data.path = d.at("path").get<std::string>();
        if (spec.data.source == ExperimentDataSpec::Source::File && spec.data.path.empty())
            throw std::invalid_argument("experiment spec: data source 'file' needs a path");
    }

    if (root.contains("noise")) {
        const json& n = root.at("noise");
        reject_unknown(n, {"model", "target_snr_db", "seed"}, "noise");
        const std::string model = n.value("model", "poisson");
        if (model == "poisson")
            spec.noise.model = NoiseModel::Poisson;
        else if (model == "gaussian")
            spec.noise.model = NoiseModel::SignalDependentGaussian;
        else
            throw std::invalid_argument("experiment spec: unknown noise model '" + model +
                                        "' (want poisson|gaussian)");
        spec.noise.target_snr_db = n.value("target_snr_db", 15.0);
        spec.noise.seed = n.value("seed", std::uint64_t{0});
    }

    if (root.contains("methods"))
        spec.methods = root.at("methods").get<std::vector<std::string>>();

    if (root.contains("proposed")) {
        const json& p = root.at("proposed");
        reject_unknown(p,
                       {"ratios", "ratio_scales", "sigmas", "s_values", "s_fractions",
                        "rho_factors", "boundary", "order", "project_smoothed"},
                       "proposed");
        read_list(p, "ratios", spec.ratios);
        read_list(p, "ratio_scales", spec.ratio_scales);
        read_list(p, "sigmas", spec.sigmas);
        read_list(p, "s_values", spec.s_values);
        read_list(p, "s_fractions", spec.s_fractions);
        read_list(p, "rho_factors", spec.rho_factors);
        if (p.contains("boundary"))
            spec.boundary = boundary_from_name(p.at("boundary").get<std::string>());
        if (p.contains("order"))
            spec.order = order_from_name(p.at("order").get<std::string>());
        spec.project_smoothed = p.value("project_smoothed", false);
    }

    if (root.contains("tv")) {
        const json& t = root.at("tv");
        reject_unknown(t, {"lambdas", "lambda_scales", "iterations"}, "tv");
        read_list(t, "lambdas", spec.tv_lambdas);
        read_list(t, "lambda_scales", spec.tv_lambda_scales);
        spec.tv_iterations = t.value("iterations", 200);
    }

    return spec;
}

}  // namespace qst

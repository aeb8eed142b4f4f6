#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>

#include "qst/baselines.hpp"
#include "qst/experiment.hpp"
#include "qst/field_io.hpp"
#include "qst/metrics.hpp"
#include "qst/pipeline.hpp"
#include "qst/plotdata.hpp"
#include "qst/smoothing.hpp"
#include "qst/synth.hpp"

namespace py = pybind11;
using namespace qst;

namespace {

Field field_from_numpy(py::array_t<double, py::array::c_style | py::array::forcecast> arr) {
    const auto info = arr.request();
    if (info.ndim == 1) {
        const auto* p = static_cast<const double*>(info.ptr);
        return Field::signal(std::vector<double>(p, p + info.shape[0]));
    }
    if (info.ndim == 2) {
        const auto* p = static_cast<const double*>(info.ptr);
        return Field::image(static_cast<int>(info.shape[0]), static_cast<int>(info.shape[1]),
                            std::vector<double>(p, p + info.shape[0] * info.shape[1]));
    }
    throw std::invalid_argument("expected a 1D or 2D array");
}

py::array field_to_numpy(const Field& f) {
    if (f.kind == FieldKind::Signal1D) {
        py::array_t<double> out(f.width);
        std::copy(f.values.begin(), f.values.end(), out.mutable_data());
        return out;
    }
    py::array_t<double> out({f.height, f.width});
    std::copy(f.values.begin(), f.values.end(), out.mutable_data());
    return out;
}

py::array_t<double> vector_to_numpy(std::span<const double> v) {
    py::array_t<double> out(v.size());
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

Coefficients coeffs_from_numpy(
    py::array_t<double, py::array::c_style | py::array::forcecast> arr) {
    const auto info = arr.request();
    if (info.ndim != 1) throw std::invalid_argument("coefficients must be a 1D array");
    const auto* p = static_cast<const double*>(info.ptr);
    return Coefficients{std::vector<double>(p, p + info.shape[0])};
}

}  // namespace

PYBIND11_MODULE(_qst, m) {
    m.doc() = "adaptive transform built from the eigenbasis of a signal-derived "
              "Schroedinger operator, with signal-dependent-noise denoising tools";

    py::enum_<FieldKind>(m, "FieldKind")
        .value("Signal1D", FieldKind::Signal1D)
        .value("Image2D", FieldKind::Image2D);
    py::enum_<BoundaryMode>(m, "BoundaryMode")
        .value("TaperedRows", BoundaryMode::TaperedRows)
        .value("GraphLaplacian", BoundaryMode::GraphLaplacian);
    py::enum_<SpectrumEnd>(m, "SpectrumEnd")
        .value("Lowest", SpectrumEnd::Lowest)
        .value("Highest", SpectrumEnd::Highest);
    py::enum_<SpectralOrder>(m, "SpectralOrder")
        .value("LowFirst", SpectralOrder::LowFirst)
        .value("HighFirst", SpectralOrder::HighFirst);
    py::enum_<EigenMode>(m, "EigenMode")
        .value("Full", EigenMode::Full)
        .value("Partial", EigenMode::Partial);
    py::enum_<NoiseModel>(m, "NoiseModel")
        .value("Poisson", NoiseModel::Poisson)
        .value("SignalDependentGaussian", NoiseModel::SignalDependentGaussian);

    py::class_<Field>(m, "Field")
        .def_readonly("kind", &Field::kind)
        .def_readonly("width", &Field::width)
        .def_readonly("height", &Field::height)
        .def_property_readonly("size", &Field::size)
        .def("to_numpy", &field_to_numpy)
        .def_static("from_numpy", &field_from_numpy, py::arg("array"))
        .def("__repr__", [](const Field& f) {
            return "<qst.Field " + std::to_string(f.height) + "x" + std::to_string(f.width) +
                   (f.kind == FieldKind::Signal1D ? " signal>" : " image>");
        });

    py::class_<HamiltonianMatrix>(m, "HamiltonianMatrix")
        .def_property_readonly("dim", &HamiltonianMatrix::dim)
        .def("entry", &HamiltonianMatrix::entry, py::arg("row"), py::arg("col"))
        .def("apply",
             [](const HamiltonianMatrix& H,
                py::array_t<double, py::array::c_style | py::array::forcecast> v) {
                 const auto info = v.request();
                 if (info.ndim != 1) throw std::invalid_argument("expected a 1D array");
                 const auto* p = static_cast<const double*>(info.ptr);
                 return vector_to_numpy(
                     H.apply(std::vector<double>(p, p + info.shape[0])));
             },
             py::arg("v"))
        .def("spectral_bounds", &HamiltonianMatrix::spectral_bounds);

    py::class_<EigenBasis>(m, "EigenBasis")
        .def_readonly("dim", &EigenBasis::dim)
        .def_readonly("count", &EigenBasis::count)
        .def_property_readonly("eigenvalues",
                               [](const EigenBasis& b) {
                                   return vector_to_numpy(b.eigenvalues);
                               })
        .def("vector", [](const EigenBasis& b, int i) {
            if (i < 0 || i >= b.count) throw std::out_of_range("eigenvector index");
            return vector_to_numpy(b.vector(i));
        }, py::arg("i"))
        .def("reversed", &EigenBasis::reversed);

    py::class_<ThresholdProfile>(m, "ThresholdProfile")
        .def(py::init<int, double>(), py::arg("s"), py::arg("rho"))
        .def_readonly("s", &ThresholdProfile::s)
        .def_readonly("rho", &ThresholdProfile::rho)
        .def("tau", &ThresholdProfile::tau, py::arg("i"))
        .def("keep_count", &ThresholdProfile::keep_count, py::arg("available"));

    py::class_<PipelineConfig>(m, "PipelineConfig")
        .def(py::init([](double ratio, double sigma, int s, double rho, BoundaryMode boundary,
                         bool project_smoothed, EigenMode eigen_mode, int partial_count,
                         SpectralOrder order, int dense_limit) {
                 PipelineConfig c;
                 c.ratio = ratio;
                 c.sigma = sigma;
                 c.s = s;
                 c.rho = rho;
                 c.boundary = boundary;
                 c.project_smoothed = project_smoothed;
                 c.eigen_mode = eigen_mode;
                 c.partial_count = partial_count;
                 c.order = order;
                 c.dense_limit = dense_limit;
                 return c;
             }),
             py::arg("ratio") = 1.0, py::arg("sigma") = 0.0, py::arg("s") = 0,
             py::arg("rho") = 1.0, py::arg("boundary") = BoundaryMode::GraphLaplacian,
             py::arg("project_smoothed") = false, py::arg("eigen_mode") = EigenMode::Full,
             py::arg("partial_count") = 0, py::arg("order") = SpectralOrder::LowFirst,
             py::arg("dense_limit") = 4096)
        .def_readwrite("ratio", &PipelineConfig::ratio)
        .def_readwrite("sigma", &PipelineConfig::sigma)
        .def_readwrite("s", &PipelineConfig::s)
        .def_readwrite("rho", &PipelineConfig::rho)
        .def_readwrite("boundary", &PipelineConfig::boundary)
        .def_readwrite("project_smoothed", &PipelineConfig::project_smoothed)
        .def_readwrite("eigen_mode", &PipelineConfig::eigen_mode)
        .def_readwrite("partial_count", &PipelineConfig::partial_count)
        .def_readwrite("order", &PipelineConfig::order)
        .def_readwrite("dense_limit", &PipelineConfig::dense_limit);

    py::class_<PipelineArtifacts>(m, "PipelineArtifacts")
        .def_readonly("smoothed", &PipelineArtifacts::smoothed)
        .def_readonly("basis", &PipelineArtifacts::basis)
        .def_property_readonly("alpha",
                               [](const PipelineArtifacts& a) {
                                   return vector_to_numpy(a.coeffs.alpha);
                               })
        .def_readonly("denoised", &PipelineArtifacts::denoised);

    m.def("make_signal", &make_signal, py::arg("n"), py::arg("seed"));
    m.def("make_image", &make_image, py::arg("n"), py::arg("seed"));

    m.def("corrupt",
          [](const Field& x, NoiseModel model, double target_snr_db, std::uint64_t seed) {
              const auto r = corrupt(x, {model, target_snr_db, seed});
              return py::make_tuple(r.noisy, r.achieved_snr_db);
          },
          py::arg("x"), py::arg("model") = NoiseModel::Poisson,
          py::arg("target_snr_db") = 15.0, py::arg("seed") = 0);

    m.def("gaussian_smooth", &gaussian_smooth, py::arg("x"), py::arg("sigma"));
    m.def("snr_db", &snr_db, py::arg("clean"), py::arg("other"));
    m.def("psnr_db", &psnr_db, py::arg("clean"), py::arg("test"),
          py::arg("peak") = std::nullopt);
    m.def("ssim", &ssim, py::arg("clean"), py::arg("test"), py::arg("peak") = std::nullopt);

    m.def("build_hamiltonian",
          [](const Field& field, double ratio, BoundaryMode boundary) {
              return build_hamiltonian(field, PlanckMassRatio(ratio), boundary);
          },
          py::arg("field"), py::arg("ratio"),
          py::arg("boundary") = BoundaryMode::GraphLaplacian);
    m.def("eig_full",
          [](const HamiltonianMatrix& H, int dense_limit) {
              EigOptions opts;
              opts.dense_limit = dense_limit;
              return eig_full(H, opts);
          },
          py::arg("H"), py::arg("dense_limit") = 4096);
    m.def("eig_partial",
          [](const HamiltonianMatrix& H, int m_count, SpectrumEnd which) {
              return eig_partial(H, m_count, which);
          },
          py::arg("H"), py::arg("m"), py::arg("which") = SpectrumEnd::Lowest);

    m.def("project",
          [](const EigenBasis& basis, const Field& x) {
              return vector_to_numpy(project(basis, x).alpha);
          },
          py::arg("basis"), py::arg("x"));
    m.def("reconstruct",
          [](const EigenBasis& basis,
             py::array_t<double, py::array::c_style | py::array::forcecast> alpha,
             const ThresholdProfile& profile, const Field& like) {
              return reconstruct(basis, coeffs_from_numpy(alpha), profile,
                                 FieldShape::of(like));
          },
          py::arg("basis"), py::arg("alpha"), py::arg("profile"), py::arg("like"));

    m.def("fourier_denoise",
          [](const Field& x, int s, double rho) {
              return fourier_denoise(x, ThresholdProfile(s, rho));
          },
          py::arg("x"), py::arg("s"), py::arg("rho") = 1.0);
    m.def("tv_denoise",
          [](const Field& x, double lam, int iterations) {
              return tv_denoise(x, lam, iterations);
          },
          py::arg("x"), py::arg("lam"), py::arg("iterations") = 200);

    m.def("run_pipeline", &run_pipeline, py::arg("noisy"), py::arg("config"));
    m.def("denoise_pipeline", &denoise_pipeline, py::arg("noisy"), py::arg("config"));

    m.def("load_field", py::overload_cast<const std::filesystem::path&>(&load_field),
          py::arg("path"));
    m.def("save_field", py::overload_cast<const Field&, const std::filesystem::path&>(
                            &save_field),
          py::arg("field"), py::arg("path"));

    py::register_exception<PipelineError>(m, "PipelineError", PyExc_RuntimeError);
}

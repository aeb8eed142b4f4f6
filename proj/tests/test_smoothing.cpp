#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numeric>

#include "qst/baselines.hpp"
#include "qst/eigensolver.hpp"
#include "qst/noise.hpp"
#include "qst/smoothing.hpp"
#include "support/test_helpers.hpp"

using namespace qst;

TEST_SUITE("smoothing") {

TEST_CASE("sigma must be positive") {
    const Field f = Field::signal_filled(8, 1.0);
    CHECK_THROWS_AS(gaussian_smooth(f, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_smooth(f, -1.0), std::invalid_argument);
}

TEST_CASE("constant fields are fixed points") {
    for (double sigma : {0.5, 1.0, 3.0}) {
        const Field f = Field::signal_filled(40, 5.0);
        const Field out = gaussian_smooth(f, sigma);
        for (double v : out.values) CHECK(v == doctest::Approx(5.0).epsilon(1e-12));
        const Field img = Field::image_filled(12, 9, 5.0);
        const Field out2 = gaussian_smooth(img, sigma);
        for (double v : out2.values) CHECK(v == doctest::Approx(5.0).epsilon(1e-12));
    }
}

TEST_CASE("unit impulse reproduces the truncated normalized kernel") {
    const int n = 101, center = 50;
    std::vector<double> v(n, 0.0);
    v[center] = 1.0;
    const double sigma = 1.0;
    const Field out = gaussian_smooth(Field::signal(std::move(v)), sigma);

    const int radius = static_cast<int>(std::ceil(4.0 * sigma));
    double norm = 0.0;
    for (int t = -radius; t <= radius; ++t) norm += std::exp(-0.5 * t * t / (sigma * sigma));
    for (int t = -radius; t <= radius; ++t) {
        const double want = std::exp(-0.5 * t * t / (sigma * sigma)) / norm;
        CHECK(std::abs(out.values[center + t] - want) <= 1e-6);
    }
    CHECK(out.values[center + radius + 1] == 0.0);
}

TEST_CASE("mass is preserved for interior-supported inputs") {
    const double sigma = 2.0;
    const int n = 64;
    std::vector<double> v(n, 0.0);
    for (int i = 16; i < 48; ++i) v[i] = 1.0 + 0.5 * std::sin(0.7 * i);
    const Field f = Field::signal(v);
    const Field out = gaussian_smooth(f, sigma);
    const double sum_in = std::accumulate(v.begin(), v.end(), 0.0);
    const double sum_out = std::accumulate(out.values.begin(), out.values.end(), 0.0);
    CHECK(sum_out == doctest::Approx(sum_in).epsilon(1e-9));
}

TEST_CASE("total variation never increases in 1D") {
    for (unsigned seed : {1u, 2u, 3u}) {
        const Field f = testing::random_signal(80, seed, 0.0, 10.0);
        const Field out = gaussian_smooth(f, 1.5);
        CHECK(total_variation(out) <= total_variation(f) * (1.0 + 1e-12));
    }
}

TEST_CASE("2D smoothing commutes with transposition") {
    const Field f = testing::random_image(9, 14, 7, 0.0, 4.0);
    const Field a = testing::transpose(gaussian_smooth(f, 1.2));
    const Field b = gaussian_smooth(testing::transpose(f), 1.2);
    for (std::size_t i = 0; i < a.values.size(); ++i)
        CHECK(a.values[i] == doctest::Approx(b.values[i]).epsilon(1e-12));
}

TEST_CASE("smoothing delocalizes the ground state of a noisy potential") {
    // inverse participation ratio of the lowest eigenvector, raw vs smoothed
    const int n = 256;
    int improved = 0;
    const int trials = 20;
    for (int seed = 1; seed <= trials; ++seed) {
        const Field clean = Field::signal_filled(n, 100.0);
        const auto noisy =
            corrupt(clean, {NoiseModel::Poisson, 15.0, static_cast<std::uint64_t>(seed)});

        auto ipr_of = [&](const Field& potential) {
            const auto H = build_hamiltonian_1d(potential, PlanckMassRatio(1.0),
                                                BoundaryMode::GraphLaplacian);
            const auto basis = eig_partial(H, 1, SpectrumEnd::Lowest);
            double ipr = 0.0;
            for (double x : basis.vector(0)) ipr += x * x * x * x;
            return ipr;
        };

        const double raw = ipr_of(noisy.noisy);
        const double smoothed = ipr_of(gaussian_smooth(noisy.noisy, 2.0));
        if (smoothed < raw) ++improved;
    }
    CHECK(improved >= 18);  // 90% of 20 seeds
}

}  // TEST_SUITE

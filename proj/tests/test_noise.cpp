#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <limits>

#include "qst/noise.hpp"
#include "qst/rng.hpp"
#include "support/test_helpers.hpp"

using namespace qst;

TEST_SUITE("noise") {

TEST_CASE("snr_db: direct formula") {
    const Field clean = Field::signal({10.0, 0.0});
    const Field other = Field::signal({10.0, 1.0});
    CHECK(snr_db(clean, other) == doctest::Approx(20.0));
}

TEST_CASE("snr_db: identical fields give the +infinity sentinel") {
    const Field f = testing::random_signal(16, 1, 0.0, 5.0);
    CHECK(std::isinf(snr_db(f, f)));
    CHECK(snr_db(f, f) > 0);
}

TEST_CASE("snr_db: scaling both fields leaves the value unchanged") {
    const Field clean = testing::random_signal(64, 2, 1.0, 9.0);
    const Field other = testing::random_signal(64, 3, 1.0, 9.0);
    Field clean2 = clean, other2 = other;
    for (double& v : clean2.values) v *= 7.5;
    for (double& v : other2.values) v *= 7.5;
    CHECK(snr_db(clean2, other2) == doctest::Approx(snr_db(clean, other)).epsilon(1e-12));
}

TEST_CASE("snr_db: shape mismatch") {
    CHECK_THROWS_AS(snr_db(Field::signal_filled(4, 1.0), Field::signal_filled(5, 1.0)),
                    std::invalid_argument);
}

TEST_CASE("corrupt: determinism under a fixed seed, fresh draws otherwise") {
    const Field x = testing::random_signal(128, 4, 1.0, 50.0);
    for (NoiseModel model : {NoiseModel::Poisson, NoiseModel::SignalDependentGaussian}) {
        const auto a = corrupt(x, {model, 15.0, 42});
        const auto b = corrupt(x, {model, 15.0, 42});
        CHECK(a.noisy.values == b.noisy.values);
        CHECK(a.achieved_snr_db == b.achieved_snr_db);
        const auto c = corrupt(x, {model, 15.0, 43});
        CHECK(a.noisy.values != c.noisy.values);
    }
}

TEST_CASE("corrupt: preconditions") {
    const Field neg = Field::signal({1.0, -0.5, 2.0});
    CHECK_THROWS_AS(corrupt(neg, {NoiseModel::Poisson, 15.0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(corrupt(neg, {NoiseModel::SignalDependentGaussian, 15.0, 1}),
                    std::invalid_argument);
    const Field zero = Field::signal_filled(16, 0.0);
    CHECK_THROWS_AS(corrupt(zero, {NoiseModel::Poisson, 15.0, 1}), std::invalid_argument);
    const Field ok = Field::signal_filled(16, 4.0);
    CHECK_THROWS_AS(corrupt(ok, {NoiseModel::Poisson,
                                 std::numeric_limits<double>::infinity(), 1}),
                    std::invalid_argument);
}

TEST_CASE("poisson snr lands within 0.2 dB on a large constant field") {
    const Field x = Field::signal_filled(1'000'000, 100.0);
    const auto out = corrupt(x, {NoiseModel::Poisson, 15.0, 7});
    CHECK(std::abs(out.achieved_snr_db - 15.0) <= 0.2);
}

TEST_CASE("snr targeting within 0.5 dB for both models at 1e4 samples") {
    const Field x = testing::random_signal(10'000, 11, 5.0, 80.0);
    for (NoiseModel model : {NoiseModel::Poisson, NoiseModel::SignalDependentGaussian}) {
        for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
            const auto out = corrupt(x, {model, 15.0, seed});
            CHECK(std::abs(out.achieved_snr_db - 15.0) <= 0.5);
        }
    }
}

TEST_CASE("poisson model: per-sample variance matches x/a over repeated draws") {
    // constant field: across-sample statistics of one draw stand in for
    // repeated scalar draws
    const int n = 10'000;
    const double level = 50.0;
    const Field x = Field::signal_filled(n, level);
    const auto out = corrupt(x, {NoiseModel::Poisson, 15.0, 13});

    // scale used internally follows from the expected-SNR equation
    const double a = std::pow(10.0, 1.5) / level;
    double mean = 0.0;
    for (double v : out.noisy.values) mean += v;
    mean /= n;
    double var = 0.0;
    for (double v : out.noisy.values) var += (v - mean) * (v - mean);
    var /= n - 1;

    CHECK(mean == doctest::Approx(level).epsilon(0.05));
    CHECK(var == doctest::Approx(level / a).epsilon(0.05));
}

TEST_CASE("gaussian model: noise variance is proportional to the sample value") {
    const int n = 60'000;
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = i < n / 2 ? 20.0 : 80.0;
    const Field x = Field::signal(std::move(v));
    const auto out = corrupt(x, {NoiseModel::SignalDependentGaussian, 15.0, 29});

    auto var_of = [&](int begin, int end, double level) {
        double acc = 0.0;
        for (int i = begin; i < end; ++i) {
            const double d = out.noisy.values[i] - level;
            acc += d * d;
        }
        return acc / (end - begin);
    };
    const double var_low = var_of(0, n / 2, 20.0);
    const double var_high = var_of(n / 2, n, 80.0);
    CHECK(var_high / var_low == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("poisson sampler: statistics across the knuth/ptrs switch") {
    for (double mean : {0.5, 4.0, 9.5, 10.5, 40.0, 400.0}) {
        SeededRng rng(1234);
        const int draws = 40'000;
        double acc = 0.0, acc2 = 0.0;
        for (int i = 0; i < draws; ++i) {
            const double k = static_cast<double>(rng.poisson(mean));
            acc += k;
            acc2 += k * k;
        }
        const double m = acc / draws;
        const double var = acc2 / draws - m * m;
        CHECK(m == doctest::Approx(mean).epsilon(0.03));
        CHECK(var == doctest::Approx(mean).epsilon(0.05));
    }
}

TEST_CASE("poisson sampler: zero mean is a fixed zero draw") {
    SeededRng rng(5);
    CHECK(rng.poisson(0.0) == 0);
    CHECK_THROWS_AS(rng.poisson(-1.0), std::invalid_argument);
}

}  // TEST_SUITE

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "circsym/sampling.hpp"
#include "circsym/special.hpp"
#include "test_util.hpp"

using namespace circsym;

namespace {

double mean_cos(const AngleSample& sample) {
    double acc = 0.0;
    for (const double t : sample) acc += std::cos(t);
    return acc / static_cast<double>(sample.size());
}

double mean_sin_k(const AngleSample& sample, int k, double mu) {
    double acc = 0.0;
    for (const double t : sample) acc += std::sin(k * (t - mu));
    return acc / static_cast<double>(sample.size());
}

}  // namespace

TEST_CASE("samples are normalized and reproducible") {
    const BaseFamily families[] = {
        BaseFamily::von_mises(2.0), BaseFamily::cardioid(0.3),
        BaseFamily::wrapped_cauchy(0.6), BaseFamily::wrapped_normal(0.8)};
    for (const BaseFamily& family : families) {
        const AngleSample a = sample_base(family, 500, 77);
        const AngleSample b = sample_base(family, 500, 77);
        CHECK(a == b);  // byte-identical
        CHECK(a != sample_base(family, 500, 78));
        for (const double t : a) {
            CHECK(t >= -kPi);
            CHECK(t < kPi);
        }
    }
    CHECK_THROWS_AS(sample_base(BaseFamily::von_mises(1.0), 0, 1), std::invalid_argument);
}

TEST_CASE("first cosine moments match the population values") {
    const int n = 200000;
    // E cos = rho for wrapped Cauchy, A_1(kappa) for von Mises,
    // rho for cardioid and wrapped normal
    CHECK(testutil::close_abs(mean_cos(sample_base(BaseFamily::wrapped_cauchy(0.5), n, 11)),
                              0.5, 0.005));
    CHECK(testutil::close_abs(mean_cos(sample_base(BaseFamily::von_mises(1.0), n, 12)),
                              0.44638996589653451, 0.005));
    CHECK(testutil::close_abs(mean_cos(sample_base(BaseFamily::cardioid(0.45), n, 13)),
                              0.45, 0.005));
    CHECK(testutil::close_abs(mean_cos(sample_base(BaseFamily::wrapped_normal(0.9), n, 14)),
                              0.9, 0.005));
    // symmetry about zero
    CHECK(testutil::close_abs(mean_sin_k(sample_base(BaseFamily::wrapped_cauchy(0.5), n, 15),
                                         1, 0.0), 0.0, 0.005));
    CHECK(testutil::close_abs(mean_sin_k(sample_base(BaseFamily::von_mises(10.0), n, 16),
                                         1, 0.0), 0.0, 0.005));
}

TEST_CASE("sine-skewed sampler moments") {
    const int n = 200000;
    // null case: lambda = 0 at mu
    const SineSkewedModel null_model{BaseFamily::cardioid(0.3), 1.0, 0.0, 2};
    CHECK(testutil::close_abs(mean_sin_k(sample_sine_skewed(null_model, n, 21), 2, 1.0),
                              0.0, 0.005));

    // E sin(k(T - mu)) = lambda * Gamma22; for VM(1), k=2 and lambda=0.6
    // this is 0.6 (1 - A_4(1))/2 = 0.29935142706177972 (frozen oracle)
    const SineSkewedModel skewed{BaseFamily::von_mises(1.0), 0.0, 0.6, 2};
    CHECK(testutil::close_abs(mean_sin_k(sample_sine_skewed(skewed, n, 22), 2, 0.0),
                              0.29935142706177972, 0.005));

    // centered first moments against quadrature for a mixed grid
    const SineSkewedModel models[] = {
        {BaseFamily::wrapped_cauchy(0.5), -0.7, -0.5, 1},
        {BaseFamily::wrapped_normal(0.5), 0.4, 0.4, 3},
    };
    for (const SineSkewedModel& model : models) {
        const AngleSample sample = sample_sine_skewed(model, n, 23);
        for (int moment_k = 1; moment_k <= 2; ++moment_k) {
            const double expect_sin = integrate_periodic([&](double t) {
                return std::sin(moment_k * t) * base_pdf(model.base, t) *
                       (1.0 + model.lambda * std::sin(model.k * t));
            });
            const double expect_cos = integrate_periodic([&](double t) {
                return std::cos(moment_k * t) * base_pdf(model.base, t) *
                       (1.0 + model.lambda * std::sin(model.k * t));
            });
            // 4 Monte Carlo standard errors, se <= 1/sqrt(2n) per moment
            const double band = 4.0 / std::sqrt(2.0 * n);
            double mean_s = 0.0;
            double mean_c = 0.0;
            for (const double t : sample) {
                mean_s += std::sin(moment_k * (t - model.mu));
                mean_c += std::cos(moment_k * (t - model.mu));
            }
            mean_s /= n;
            mean_c /= n;
            CHECK(testutil::close_abs(mean_s, expect_sin, band));
            CHECK(testutil::close_abs(mean_c, expect_cos, band));
        }
    }
}

TEST_CASE("sine-skewed acceptance rate is one half") {
    // ~10^6 proposals; acceptance probability is exactly 1/2 in expectation
    const SineSkewedModel model{BaseFamily::wrapped_cauchy(0.5), 0.3, 0.8, 1};
    const int accepted = 500000;
    std::uint64_t proposals = 0;
    sample_sine_skewed_counted(model, accepted, 31, &proposals);
    const double rate = static_cast<double>(accepted) / static_cast<double>(proposals);
    CHECK(proposals > 900000);
    CHECK(testutil::close_abs(rate, 0.5, 0.002));
}

TEST_CASE("chi-square goodness of fit, 36 bins") {
    // one seeded draw per model must stay below the 0.999 quantile of
    // chi-square(35); the full 12-point grid runs in the acceptance suite
    const SineSkewedModel models[] = {
        {BaseFamily::von_mises(10.0), 0.0, 0.0, 1},
        {BaseFamily::wrapped_normal(0.9), 0.0, 0.0, 1},
        {BaseFamily::wrapped_cauchy(0.5), 0.0, 0.6, 2},
        {BaseFamily::cardioid(0.45), 0.0, -0.4, 1},
    };
    int idx = 0;
    for (const SineSkewedModel& model : models) {
        const AngleSample sample = sample_sine_skewed(model, 50000, 40 + idx++);
        const double stat = testutil::chi_square_gof(
            sample, [&](double t) { return sine_skewed_pdf(model, t); }, 36);
        CHECK(stat < testutil::kChi2_35_999);
    }
}

TEST_CASE("chi-square pass rate across seeds") {
    // the 0.999 level should fail for at most ~1 seed in 1000; demand all
    // 40 seeded repetitions pass for a fixed model (well within the 99%
    // requirement)
    const SineSkewedModel model{BaseFamily::von_mises(1.0), 0.0, 0.0, 1};
    const auto pdf = [&](double t) { return sine_skewed_pdf(model, t); };
    int pass = 0;
    for (int seed = 0; seed < 40; ++seed) {
        const AngleSample sample = sample_sine_skewed(model, 50000, 1000 + seed);
        if (testutil::chi_square_gof(sample, pdf, 36) < testutil::kChi2_35_999) {
            ++pass;
        }
    }
    CHECK(pass >= 40);
}

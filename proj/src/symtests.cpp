#include "circsym/symtests.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "circsym/estimators.hpp"
#include "circsym/special.hpp"

namespace circsym {
namespace {

constexpr double kVarianceFloor = 1e-14;

double two_sided_p(double statistic) {
    return 2.0 * (1.0 - normal_cdf(std::abs(statistic)));
}

TestReport flagged(TestId id, int k, int n, double mu, unsigned flags) {
    TestReport r;
    r.test = id;
    r.k = k;
    r.n = n;
    r.mu_used = mu;
    r.statistic = std::numeric_limits<double>::quiet_NaN();
    r.p_value = std::numeric_limits<double>::quiet_NaN();
    r.flags = flags;
    return r;
}

TestReport finish(TestId id, int k, int n, double mu, double statistic) {
    TestReport r;
    r.test = id;
    r.k = k;
    r.n = n;
    r.mu_used = mu;
    r.statistic = statistic;
    r.p_value = two_sided_p(statistic);
    return r;
}

void require_size(std::span<const double> sample, int k) {
    if (sample.size() < 5) {
        throw std::invalid_argument("symmetry tests require n >= 5");
    }
    if (k < 1) {
        throw std::invalid_argument("symmetry tests require k >= 1");
    }
}

bool von_mises_trivial(const BaseFamily& family, int k) {
    return family.kind == Family::VonMises && k == 1;
}

}  // namespace

TestReport parametric_test_unknown_mu(std::span<const double> sample,
                                      const BaseFamily& family, int k) {
    require_size(sample, k);
    family.validate();
    const int n = static_cast<int>(sample.size());
    const double mu_hat = mean_direction(sample);
    if (von_mises_trivial(family, k)) {
        return flagged(TestId::ParamUnknownMu, k, n, mu_hat, kFlagTrivialTest);
    }

    const FisherBlock g = fisher_block(family, k);
    const double eta = g.gamma12 / g.gamma11;
    double score = 0.0;
    for (const double theta : sample) {
        const double r = theta - mu_hat;
        score += std::sin(k * r) - eta * score_location(family, r);
    }
    const double statistic = score / std::sqrt(static_cast<double>(n)) / std::sqrt(g.gamma22_1);
    return finish(TestId::ParamUnknownMu, k, n, mu_hat, statistic);
}

TestReport parametric_test_known_mu(std::span<const double> sample,
                                    const BaseFamily& family, int k, double mu) {
    require_size(sample, k);
    family.validate();
    const int n = static_cast<int>(sample.size());
    const FisherBlock g = fisher_block(family, k);
    double score = 0.0;
    for (const double theta : sample) {
        score += std::sin(k * (theta - mu));
    }
    const double statistic = score / std::sqrt(static_cast<double>(n)) / std::sqrt(g.gamma22);
    return finish(TestId::ParamKnownMu, k, n, mu, statistic);
}

TestReport semiparametric_test_unknown_mu(std::span<const double> sample,
                                          const BaseFamily& posited, int k) {
    require_size(sample, k);
    posited.validate();
    const int n = static_cast<int>(sample.size());
    const double mu_hat = mean_direction(sample);
    if (von_mises_trivial(posited, k)) {
        return flagged(TestId::SemiparUnknownMu, k, n, mu_hat, kFlagTrivialTest);
    }

    // Gamma12-hat = mean k cos(k r), Gamma11-hat = mean phi'_f0(r)
    double g12_hat = 0.0;
    double g11_hat = 0.0;
    for (const double theta : sample) {
        const double r = theta - mu_hat;
        g12_hat += k * std::cos(k * r);
        g11_hat += score_derivative(posited, r);
    }
    g12_hat /= n;
    g11_hat /= n;
    if (std::abs(g11_hat) < 1e-10) {
        return flagged(TestId::SemiparUnknownMu, k, n, mu_hat, kFlagDegenerateVariance);
    }
    const double eta_hat = g12_hat / g11_hat;

    double score = 0.0;
    double sumsq = 0.0;
    for (const double theta : sample) {
        const double r = theta - mu_hat;
        const double resid = std::sin(k * r) - eta_hat * score_location(posited, r);
        score += resid;
        sumsq += resid * resid;
    }
    const double variance = sumsq / n;
    if (variance < kVarianceFloor) {
        return flagged(TestId::SemiparUnknownMu, k, n, mu_hat, kFlagDegenerateVariance);
    }
    const double statistic = score / std::sqrt(static_cast<double>(n)) / std::sqrt(variance);
    return finish(TestId::SemiparUnknownMu, k, n, mu_hat, statistic);
}

TestReport semiparametric_test_known_mu(std::span<const double> sample, int k, double mu) {
    require_size(sample, k);
    const int n = static_cast<int>(sample.size());
    double score = 0.0;
    double sumsq = 0.0;
    for (const double theta : sample) {
        const double s = std::sin(k * (theta - mu));
        score += s;
        sumsq += s * s;
    }
    const double variance = sumsq / n;
    if (variance < kVarianceFloor) {
        return flagged(TestId::SemiparKnownMu, k, n, mu, kFlagDegenerateVariance);
    }
    const double statistic = score / std::sqrt(static_cast<double>(n)) / std::sqrt(variance);
    return finish(TestId::SemiparKnownMu, k, n, mu, statistic);
}

TestReport b2bar_test(std::span<const double> sample) {
    require_size(sample, 2);
    const int n = static_cast<int>(sample.size());
    const double mu_hat = mean_direction(sample);
    double score = 0.0;
    double sumsq = 0.0;
    for (const double theta : sample) {
        const double s = std::sin(2.0 * (theta - mu_hat));
        score += s;
        sumsq += s * s;
    }
    const double variance = sumsq / n;  // M_n
    if (variance < kVarianceFloor) {
        return flagged(TestId::B2Bar, 2, n, mu_hat, kFlagDegenerateVariance);
    }
    const double statistic = score / std::sqrt(static_cast<double>(n)) / std::sqrt(variance);
    return finish(TestId::B2Bar, 2, n, mu_hat, statistic);
}

double asymptotic_local_power(const BaseFamily& posited, const BaseFamily& truth, int k,
                              int k_prime, double tau2, double alpha) {
    posited.validate();
    truth.validate();
    if (k < 1 || k_prime < 1) {
        throw std::invalid_argument("asymptotic_local_power: k, k' must be >= 1");
    }
    if (!std::isfinite(tau2)) {
        throw std::invalid_argument("asymptotic_local_power: tau2 must be finite");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("asymptotic_local_power: alpha must lie in (0, 1)");
    }

    const double gamma12 = fisher_block(truth, k).gamma12;
    const double cross11 = integrate_periodic(
        [&](double t) { return score_derivative(posited, t) * base_pdf(truth, t); });
    const double eta = gamma12 / cross11;

    const auto residual = [&](double t) {
        return std::sin(k * t) - eta * score_location(posited, t);
    };
    const double v = integrate_periodic(
        [&](double t) { const double r = residual(t); return r * r * base_pdf(truth, t); });
    const double c = integrate_periodic(
        [&](double t) { return residual(t) * std::sin(k_prime * t) * base_pdf(truth, t); });

    if (v <= kVarianceFloor) {
        throw trivial_test_error(
            "asymptotic_local_power: degenerate pairing (von Mises posited with k = 1)");
    }
    const double shift = c * tau2 / std::sqrt(v);
    const double z = normal_quantile(1.0 - alpha / 2.0);
    return 1.0 - normal_cdf(z - shift) + normal_cdf(-z - shift);
}

TestReport run_selected_test(std::span<const double> sample, TestId id,
                             const std::optional<BaseFamily>& family, int k, double known_mu) {
    const auto require_family = [&]() -> const BaseFamily& {
        if (!family.has_value()) {
            throw std::invalid_argument("test '" + test_id_to_string(id) +
                                        "' requires an assumed or posited family");
        }
        return *family;
    };
    switch (id) {
        case TestId::ParamKnownMu:
            return parametric_test_known_mu(sample, require_family(), k, known_mu);
        case TestId::ParamUnknownMu:
            return parametric_test_unknown_mu(sample, require_family(), k);
        case TestId::SemiparKnownMu:
            return semiparametric_test_known_mu(sample, k, known_mu);
        case TestId::SemiparUnknownMu:
            return semiparametric_test_unknown_mu(sample, require_family(), k);
        case TestId::B2Bar:
            return b2bar_test(sample);
    }
    throw std::invalid_argument("unknown test id");
}

TestId test_id_from_string(const std::string& name) {
    if (name == "param_known_mu") return TestId::ParamKnownMu;
    if (name == "param_unknown_mu") return TestId::ParamUnknownMu;
    if (name == "semipar_known_mu") return TestId::SemiparKnownMu;
    if (name == "semipar_unknown_mu") return TestId::SemiparUnknownMu;
    if (name == "b2bar") return TestId::B2Bar;
    throw std::invalid_argument(
        "unknown test '" + name +
        "' (expected param_known_mu, param_unknown_mu, semipar_known_mu, "
        "semipar_unknown_mu, b2bar)");
}

std::string test_id_to_string(TestId id) {
    switch (id) {
        case TestId::ParamKnownMu: return "param_known_mu";
        case TestId::ParamUnknownMu: return "param_unknown_mu";
        case TestId::SemiparKnownMu: return "semipar_known_mu";
        case TestId::SemiparUnknownMu: return "semipar_unknown_mu";
        case TestId::B2Bar: return "b2bar";
    }
    return "?";
}

}  // namespace circsym

#include "circsym/bootstrap.hpp"

#include <cmath>
#include <stdexcept>

#include "circsym/estimators.hpp"
#include "circsym/rng.hpp"
#include "circsym/sampling.hpp"
#include "circsym/special.hpp"

namespace circsym {
namespace {

bool needs_known_mu(TestId id) {
    return id == TestId::ParamKnownMu || id == TestId::SemiparKnownMu;
}

bool pairing_is_trivial(const BootstrapConfig& config) {
    return config.family == Family::VonMises && config.k == 1 &&
           (config.test == TestId::ParamUnknownMu || config.test == TestId::SemiparUnknownMu);
}

}  // namespace

double fit_concentration(Family family, double rbar) {
    switch (family) {
        case Family::VonMises:
            if (rbar >= 0.999) {
                throw fit_error("von Mises fit failed: Rbar >= 0.999");
            }
            return invert_a1(rbar);
        case Family::Cardioid:
            return std::min(rbar, 0.4999);
        case Family::WrappedCauchy:
        case Family::WrappedNormal:
            return rbar;
    }
    throw std::invalid_argument("unknown family kind");
}

BootstrapResult bootstrap_test(std::span<const double> sample, const BootstrapConfig& config) {
    if (config.replications < 99) {
        throw std::invalid_argument("bootstrap requires B >= 99");
    }
    if (sample.size() < 10) {
        throw std::invalid_argument("bootstrap requires n >= 10");
    }
    if (pairing_is_trivial(config)) {
        throw trivial_test_error("bootstrap: von Mises with k = 1 admits only the trivial test");
    }
    if (needs_known_mu(config.test) && !config.mu.has_value()) {
        throw std::invalid_argument("bootstrap: the selected test requires a known mu");
    }

    const CircularSummary summary = circular_summary(sample);
    const double fitted_conc = fit_concentration(config.family, summary.mean_resultant_length);
    const BaseFamily fitted{config.family, fitted_conc};
    const double known_mu = config.mu.value_or(0.0);
    const double center = needs_known_mu(config.test) ? known_mu : summary.mean_direction;

    const TestReport observed =
        run_selected_test(sample, config.test, fitted, config.k, known_mu);
    const int n = static_cast<int>(sample.size());
    const double q_obs = std::abs(observed.statistic);

    int at_least = 0;
    for (int b = 1; b <= config.replications; ++b) {
        AngleSample resample = sample_base(fitted, n, derive_seed(config.seed, b));
        for (double& theta : resample) {
            theta = normalize_angle(center + theta);
        }
        BaseFamily plug_in = fitted;
        if (config.refit_concentration) {
            const double rbar_b = circular_summary(resample).mean_resultant_length;
            plug_in.concentration = fit_concentration(config.family, rbar_b);
        }
        const TestReport rep =
            run_selected_test(resample, config.test, plug_in, config.k, known_mu);
        if (std::abs(rep.statistic) >= q_obs) {
            ++at_least;
        }
    }

    BootstrapResult out;
    out.report = observed;
    out.report.p_value = (1.0 + at_least) / (config.replications + 1.0);
    out.fitted_mu = summary.mean_direction;
    out.fitted_concentration = fitted_conc;
    out.replications = config.replications;
    return out;
}

}  // namespace circsym

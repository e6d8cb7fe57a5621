#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "circsym/symtests.hpp"

namespace circsym {

/// Concentration cannot be fitted from this sample (e.g. Rbar >= 0.999
/// for the von Mises inversion).
struct fit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BootstrapConfig {
    Family family = Family::VonMises;  // concentration fitted, not supplied
    TestId test = TestId::SemiparUnknownMu;
    int k = 1;
    int replications = 1000;  // B
    std::uint64_t seed = 0;
    /// Refit the concentration from each bootstrap sample (default, matching
    /// the procedure applied to the data); false freezes the original fit.
    bool refit_concentration = true;
    /// Center for the known-mu tests; ignored by the unknown-mu tests.
    std::optional<double> mu;
};

struct BootstrapResult {
    TestReport report;  // statistic = observed value, p_value = bootstrap p
    double fitted_mu = 0.0;
    double fitted_concentration = 0.0;
    int replications = 0;
};

/// Fits mu by the sample mean direction and the concentration from Rbar
/// (von Mises by A_1 inversion, cardioid truncated at 0.4999, wrapped
/// Cauchy / wrapped normal by Rbar itself), then computes the plus-one
/// parametric-bootstrap p-value (1 + #{|Q_b| >= |Q_obs|}) / (B + 1) from B
/// symmetric resamples of the fitted base. Deterministic given (sample,
/// config). Throws trivial_test_error for the von Mises k = 1 pairings.
BootstrapResult bootstrap_test(std::span<const double> sample, const BootstrapConfig& config);

/// The concentration fit used by the bootstrap, exposed for reuse.
double fit_concentration(Family family, double rbar);

}  // namespace circsym

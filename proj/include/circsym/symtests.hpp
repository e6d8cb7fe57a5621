#pragma once

#include <optional>
#include <span>
#include <string>

#include "circsym/distributions.hpp"

namespace circsym {

enum class TestId { ParamKnownMu, ParamUnknownMu, SemiparKnownMu, SemiparUnknownMu, B2Bar };

enum TestFlags : unsigned {
    kFlagTrivialTest = 1u << 0,        // Gamma22.1 = 0 pairing (von Mises, k = 1)
    kFlagDegenerateVariance = 1u << 1  // empirical variance below 1e-14
};

/// Outcome of one symmetry test. Flagged reports carry NaN statistic and
/// p-value; reject_at is then always false.
struct TestReport {
    TestId test = TestId::B2Bar;
    int k = 0;
    int n = 0;
    double mu_used = 0.0;  // supplied or estimated center
    double statistic = 0.0;
    double p_value = 0.0;
    unsigned flags = 0;

    bool trivial() const { return (flags & kFlagTrivialTest) != 0; }
    bool degenerate_variance() const { return (flags & kFlagDegenerateVariance) != 0; }
    bool reject_at(double alpha) const { return flags == 0 && p_value < alpha; }
};

/// Optimal parametric test of symmetry about an unknown center, density
/// assumed to be `family`, against k-sine-skewed alternatives. Centers at
/// the sample mean direction and standardizes the efficient skewness score
/// by Gamma22.1. Von Mises with k = 1 yields the trivial-test flag.
TestReport parametric_test_unknown_mu(std::span<const double> sample,
                                      const BaseFamily& family, int k);

/// Known-center counterpart: sin(k(theta - mu)) score standardized by
/// its null variance Gamma22. Never trivial.
TestReport parametric_test_known_mu(std::span<const double> sample,
                                    const BaseFamily& family, int k, double mu);

/// Semi-parametric test with posited density f0: the skewness score minus
/// the estimated projection eta-hat * phi_f0, studentized by the empirical
/// residual norm. Valid under any symmetric density; posited von Mises with
/// k = 1 is trivial, and for k >= 2 the statistic is kappa-free.
TestReport semiparametric_test_unknown_mu(std::span<const double> sample,
                                          const BaseFamily& posited, int k);

/// Known-center semi-parametric test; for k = 2 this is Pewsey's b2* test.
TestReport semiparametric_test_known_mu(std::span<const double> sample, int k, double mu);

/// Omnibus second-sine-moment test about the estimated mean direction.
TestReport b2bar_test(std::span<const double> sample);

/// Gamma22.1 = 0: the requested pairing admits only the trivial test.
struct trivial_test_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Asymptotic power of the semi-parametric test posited at (f0, k) against
/// local k'-sine-skewed alternatives tau2/sqrt(n) under true base g0:
///   V = int (sin(k t) - eta phi_f0(t))^2 g0(t) dt,
///   C = int (sin(k t) - eta phi_f0(t)) sin(k' t) g0(t) dt,
/// with eta = Gamma_{g0,k;12} / int phi'_f0 g0; power from the shifted
/// normal at level alpha. Throws trivial_test_error when V degenerates
/// (von Mises pairing with k = 1).
double asymptotic_local_power(const BaseFamily& posited, const BaseFamily& truth, int k,
                              int k_prime, double tau2, double alpha);

/// Dispatch by test id; `family` is required by the parametric tests and the
/// unknown-mu semi-parametric test, `known_mu` only by the known-mu tests.
TestReport run_selected_test(std::span<const double> sample, TestId id,
                             const std::optional<BaseFamily>& family, int k, double known_mu);

TestId test_id_from_string(const std::string& name);
std::string test_id_to_string(TestId id);

}  // namespace circsym

#pragma once

#include <string>

namespace circsym {

enum class Family { VonMises, Cardioid, WrappedCauchy, WrappedNormal };

/// Reflectively symmetric unimodal base density, mode at 0. Concentration is
/// kappa > 0 for von Mises, rho in (0, 1/2) for cardioid and rho in (0, 1)
/// for wrapped Cauchy / wrapped normal (rho = 0 excluded: circular uniform).
struct BaseFamily {
    Family kind = Family::VonMises;
    double concentration = 1.0;

    static BaseFamily von_mises(double kappa) { return {Family::VonMises, kappa}; }
    static BaseFamily cardioid(double rho) { return {Family::Cardioid, rho}; }
    static BaseFamily wrapped_cauchy(double rho) { return {Family::WrappedCauchy, rho}; }
    static BaseFamily wrapped_normal(double rho) { return {Family::WrappedNormal, rho}; }

    void validate() const;  // throws std::invalid_argument
};

/// f0(theta - mu) * [1 + lambda * sin(k (theta - mu))]
struct SineSkewedModel {
    BaseFamily base;
    double mu = 0.0;
    double lambda = 0.0;
    int k = 1;

    void validate() const;
};

/// Information for (location, skewness) at the symmetric model:
/// gamma11 = int phi^2 f0, gamma12 = -int sin(k t) f0'(t) dt,
/// gamma22 = int sin^2(k t) f0, gamma22_1 = gamma22 - gamma12^2 / gamma11.
struct FisherBlock {
    double gamma11 = 0.0;
    double gamma12 = 0.0;
    double gamma22 = 0.0;
    double gamma22_1 = 0.0;
};

double base_pdf(const BaseFamily& family, double theta);
double sine_skewed_pdf(const SineSkewedModel& model, double theta);

/// Location score phi = -f0'/f0.
double score_location(const BaseFamily& family, double theta);

/// Derivative of the location score, d phi / d theta.
double score_derivative(const BaseFamily& family, double theta);

FisherBlock fisher_block(const BaseFamily& family, int k);

/// Accepts "vm", "cardioid", "wc", "wn".
Family family_from_string(const std::string& name);
std::string family_to_string(Family kind);

}  // namespace circsym

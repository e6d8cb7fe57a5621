#include "circsym/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "circsym/rng.hpp"
#include "circsym/special.hpp"

namespace circsym {
namespace {

double draw_von_mises(double kappa, SplitMix64& rng) {
    // Best & Fisher (1979) rejection sampler with wrapped Cauchy envelope
    const double a = 1.0 + std::sqrt(1.0 + 4.0 * kappa * kappa);
    const double b = (a - std::sqrt(2.0 * a)) / (2.0 * kappa);
    const double r = (1.0 + b * b) / (2.0 * b);
    for (;;) {
        const double z = std::cos(kPi * rng.next_open());
        const double f = (1.0 + r * z) / (r + z);
        const double c = kappa * (r - f);
        const double u2 = rng.next_open();
        if (c * (2.0 - c) - u2 > 0.0 || std::log(c / u2) + 1.0 - c >= 0.0) {
            const double u3 = rng.next_open();
            return (u3 < 0.5 ? -1.0 : 1.0) * std::acos(f);
        }
    }
}

double draw_cardioid(double rho, SplitMix64& rng) {
    // rejection against the circular uniform; envelope constant 1 + 2 rho
    for (;;) {
        const double t = (2.0 * rng.next_open() - 1.0) * kPi;
        const double u = rng.next_open();
        if (u * (1.0 + 2.0 * rho) <= 1.0 + 2.0 * rho * std::cos(t)) {
            return t;
        }
    }
}

double draw_wrapped_cauchy(double rho, SplitMix64& rng) {
    const double u = rng.next_open() - 0.5;  // open (-1/2, 1/2): no tan pole
    return 2.0 * std::atan(((1.0 - rho) / (1.0 + rho)) * std::tan(kPi * u));
}

double draw_wrapped_normal(double rho, SplitMix64& rng) {
    const double sigma = std::sqrt(-2.0 * std::log(rho));
    return normalize_angle(sigma * rng.next_normal());
}

double draw_base(const BaseFamily& family, SplitMix64& rng) {
    switch (family.kind) {
        case Family::VonMises: return draw_von_mises(family.concentration, rng);
        case Family::Cardioid: return draw_cardioid(family.concentration, rng);
        case Family::WrappedCauchy: return draw_wrapped_cauchy(family.concentration, rng);
        case Family::WrappedNormal: return draw_wrapped_normal(family.concentration, rng);
    }
    throw std::invalid_argument("unknown family kind");
}

}  // namespace

AngleSample sample_base(const BaseFamily& family, int n, std::uint64_t seed) {
    family.validate();
    if (n < 1) {
        throw std::invalid_argument("sample_base: n must be >= 1");
    }
    SplitMix64 rng(seed);
    AngleSample out(static_cast<std::size_t>(n));
    for (double& theta : out) {
        theta = normalize_angle(draw_base(family, rng));
    }
    return out;
}

AngleSample sample_sine_skewed_counted(const SineSkewedModel& model, int n,
                                       std::uint64_t seed, std::uint64_t* proposals) {
    model.validate();
    if (n < 1) {
        throw std::invalid_argument("sample_sine_skewed: n must be >= 1");
    }
    SplitMix64 rng(seed);
    AngleSample out(static_cast<std::size_t>(n));
    std::uint64_t used = 0;
    for (double& theta : out) {
        for (;;) {
            const double x = draw_base(model.base, rng);
            ++used;
            const double accept = 0.5 * (1.0 + model.lambda * std::sin(model.k * x));
            if (rng.next_unit() < accept) {
                theta = normalize_angle(model.mu + x);
                break;
            }
        }
    }
    if (proposals != nullptr) {
        *proposals = used;
    }
    return out;
}

AngleSample sample_sine_skewed(const SineSkewedModel& model, int n, std::uint64_t seed) {
    return sample_sine_skewed_counted(model, n, seed, nullptr);
}

}  // namespace circsym

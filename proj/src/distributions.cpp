#include "circsym/distributions.hpp"

#include <cmath>
#include <stdexcept>

#include "circsym/special.hpp"

namespace circsym {
namespace {

// Wrapped normal, rho = exp(-sigma^2/2). Two equivalent evaluations:
// the Fourier series (1 + 2 sum_p rho^{p^2} cos(p t))/(2 pi), truncated once
// rho^{p^2} < 1e-16, and the Gaussian branch sum over t + 2 pi j. The series
// loses all relative precision near the antimode once rho is large (the
// partial sums cancel down to ~1e-10 from O(1) terms at rho = 0.9), which is
// fatal for the score there, so evaluation switches to branches above 0.7.
constexpr double kWnBranchSwitch = 0.7;

struct WnEval {
    double pdf;
    double score;
};

WnEval wn_eval(double rho, double theta) {
    if (rho <= kWnBranchSwitch) {
        double c = 1.0;  // 2 pi f0
        double s = 0.0;  // -2 pi f0'
        for (int p = 1; p <= 128; ++p) {
            const double w = std::pow(rho, static_cast<double>(p) * p);
            if (w < 1e-16) {
                break;
            }
            c += 2.0 * w * std::cos(p * theta);
            s += 2.0 * p * w * std::sin(p * theta);
        }
        return {c / kTwoPi, s / c};
    }
    const double sigma2 = -2.0 * std::log(rho);
    double wsum = 0.0;
    double tsum = 0.0;
    for (int j = -3; j <= 3; ++j) {
        const double t = theta + kTwoPi * j;
        const double w = std::exp(-t * t / (2.0 * sigma2));
        wsum += w;
        tsum += w * t;
    }
    return {wsum / std::sqrt(kTwoPi * sigma2), tsum / (sigma2 * wsum)};
}

double wn_score_derivative(double rho, double theta) {
    // Richardson-extrapolated central difference of the score
    const double h = 1e-4;
    const auto diff = [&](double hh) {
        return (wn_eval(rho, theta + hh).score - wn_eval(rho, theta - hh).score) / (2.0 * hh);
    };
    return (4.0 * diff(0.5 * h) - diff(h)) / 3.0;
}

[[noreturn]] void bad_concentration(const BaseFamily& family) {
    throw std::invalid_argument("invalid concentration " +
                                std::to_string(family.concentration) + " for family " +
                                family_to_string(family.kind));
}

}  // namespace

void BaseFamily::validate() const {
    switch (kind) {
        case Family::VonMises:
            if (!(concentration > 0.0) || !(concentration <= 700.0)) bad_concentration(*this);
            return;
        case Family::Cardioid:
            if (!(concentration > 0.0) || !(concentration < 0.5)) bad_concentration(*this);
            return;
        case Family::WrappedCauchy:
        case Family::WrappedNormal:
            if (!(concentration > 0.0) || !(concentration < 1.0)) bad_concentration(*this);
            return;
    }
    throw std::invalid_argument("unknown family kind");
}

void SineSkewedModel::validate() const {
    base.validate();
    if (!(lambda >= -1.0 && lambda <= 1.0)) {
        throw std::invalid_argument("sine-skewed model requires |lambda| <= 1");
    }
    if (k < 1) {
        throw std::invalid_argument("sine-skewed model requires k >= 1");
    }
    if (!std::isfinite(mu)) {
        throw std::invalid_argument("sine-skewed model requires finite mu");
    }
}

double base_pdf(const BaseFamily& family, double theta) {
    family.validate();
    const double c = family.concentration;
    switch (family.kind) {
        case Family::VonMises:
            return std::exp(c * std::cos(theta)) / (kTwoPi * bessel_i(0, c));
        case Family::Cardioid:
            return (1.0 + 2.0 * c * std::cos(theta)) / kTwoPi;
        case Family::WrappedCauchy:
            return (1.0 - c * c) / (kTwoPi * (1.0 + c * c - 2.0 * c * std::cos(theta)));
        case Family::WrappedNormal:
            return wn_eval(c, theta).pdf;
    }
    throw std::invalid_argument("unknown family kind");
}

double sine_skewed_pdf(const SineSkewedModel& model, double theta) {
    model.validate();
    const double r = normalize_angle(theta - model.mu);
    return base_pdf(model.base, r) * (1.0 + model.lambda * std::sin(model.k * r));
}

double score_location(const BaseFamily& family, double theta) {
    family.validate();
    const double c = family.concentration;
    switch (family.kind) {
        case Family::VonMises:
            return c * std::sin(theta);
        case Family::Cardioid:
            return 2.0 * c * std::sin(theta) / (1.0 + 2.0 * c * std::cos(theta));
        case Family::WrappedCauchy:
            return 2.0 * c * std::sin(theta) / (1.0 + c * c - 2.0 * c * std::cos(theta));
        case Family::WrappedNormal:
            return wn_eval(c, theta).score;
    }
    throw std::invalid_argument("unknown family kind");
}

double score_derivative(const BaseFamily& family, double theta) {
    family.validate();
    const double c = family.concentration;
    switch (family.kind) {
        case Family::VonMises:
            return c * std::cos(theta);
        case Family::Cardioid: {
            const double den = 1.0 + 2.0 * c * std::cos(theta);
            return 2.0 * c * (2.0 * c + std::cos(theta)) / (den * den);
        }
        case Family::WrappedCauchy: {
            const double den = 1.0 + c * c - 2.0 * c * std::cos(theta);
            return 2.0 * c * (-2.0 * c + (1.0 + c * c) * std::cos(theta)) / (den * den);
        }
        case Family::WrappedNormal:
            return wn_score_derivative(c, theta);
    }
    throw std::invalid_argument("unknown family kind");
}

FisherBlock fisher_block(const BaseFamily& family, int k) {
    family.validate();
    if (k < 1) {
        throw std::invalid_argument("fisher_block: k must be a positive integer");
    }
    const double c = family.concentration;
    FisherBlock out;
    switch (family.kind) {
        case Family::VonMises:
            out.gamma11 = c * bessel_ratio(1, c);
            out.gamma12 = k * bessel_ratio(k, c);
            out.gamma22 = 0.5 * (1.0 - bessel_ratio(2 * k, c));
            break;
        case Family::Cardioid:
            out.gamma11 = 1.0 - std::sqrt(1.0 - 4.0 * c * c);
            out.gamma12 = (k == 1) ? c : 0.0;
            out.gamma22 = 0.5;
            break;
        case Family::WrappedCauchy: {
            out.gamma11 = 2.0 * c * c / ((1.0 - c * c) * (1.0 - c * c));
            out.gamma12 = k * std::pow(c, k);
            double geom = 0.0;
            for (int l = 1; l <= k; ++l) {
                geom += std::pow(c, 2 * (l - 1));
            }
            out.gamma22 = 0.5 * (1.0 - c * c) * geom;
            break;
        }
        case Family::WrappedNormal:
            // no closed forms; defining integrals on 4096 nodes
            out.gamma11 = integrate_periodic([&](double t) {
                const WnEval e = wn_eval(c, t);
                return e.score * e.score * e.pdf;
            });
            out.gamma12 = integrate_periodic([&](double t) {
                const WnEval e = wn_eval(c, t);
                return std::sin(k * t) * e.score * e.pdf;
            });
            out.gamma22 = integrate_periodic([&](double t) {
                const double s = std::sin(k * t);
                return s * s * wn_eval(c, t).pdf;
            });
            break;
    }
    out.gamma22_1 = out.gamma22 - out.gamma12 * out.gamma12 / out.gamma11;
    if (out.gamma22_1 < 0.0 && out.gamma22_1 > -1e-12) {
        out.gamma22_1 = 0.0;  // Cauchy-Schwarz roundoff (von Mises k=1)
    }
    return out;
}

Family family_from_string(const std::string& name) {
    if (name == "vm") return Family::VonMises;
    if (name == "cardioid") return Family::Cardioid;
    if (name == "wc") return Family::WrappedCauchy;
    if (name == "wn") return Family::WrappedNormal;
    throw std::invalid_argument("unknown family '" + name + "' (expected vm, cardioid, wc, wn)");
}

std::string family_to_string(Family kind) {
    switch (kind) {
        case Family::VonMises: return "vm";
        case Family::Cardioid: return "cardioid";
        case Family::WrappedCauchy: return "wc";
        case Family::WrappedNormal: return "wn";
    }
    return "?";
}

}  // namespace circsym

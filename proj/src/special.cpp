#include "circsym/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace circsym {

double bessel_i(int order, double x) {
    if (order < 0) {
        throw std::domain_error("bessel_i: order must be a nonnegative integer");
    }
    if (!std::isfinite(x) || x < 0.0) {
        throw std::domain_error("bessel_i: argument must be finite and nonnegative");
    }
    if (x > 700.0) {
        throw std::overflow_error("bessel_i: argument exceeds overflow guard x <= 700");
    }
    if (x == 0.0) {
        return order == 0 ? 1.0 : 0.0;
    }

    const double half = 0.5 * x;
    // leading term (x/2)^order / order!, in log space to survive large orders
    double term = (order == 0)
                      ? 1.0
                      : std::exp(order * std::log(half) - std::lgamma(order + 1.0));
    double sum = term;
    const double q = half * half;
    for (int m = 1; m < 4000; ++m) {
        term *= q / (static_cast<double>(m) * (m + order));
        sum += term;
        if (term < sum * 1e-17) {
            break;
        }
    }
    return sum;
}

double bessel_ratio(int order, double kappa) {
    if (order < 1) {
        throw std::domain_error("bessel_ratio: order must be a positive integer");
    }
    if (!(kappa > 0.0)) {
        throw std::domain_error("bessel_ratio: kappa must be positive");
    }
    return bessel_i(order, kappa) / bessel_i(0, kappa);
}

double normalize_angle(double theta) {
    if (!std::isfinite(theta)) {
        throw std::domain_error("normalize_angle: angle must be finite");
    }
    double r = std::remainder(theta, kTwoPi);  // lands in [-pi, pi]
    if (r >= kPi) {
        r -= kTwoPi;  // half-open convention: pi maps to -pi
    } else if (r < -kPi) {
        r += kTwoPi;
    }
    return r;
}

double integrate_periodic(const std::function<double(double)>& f, int nodes) {
    if (nodes < 16) {
        throw std::invalid_argument("integrate_periodic: need at least 16 nodes");
    }
    const double h = kTwoPi / nodes;
    double sum = 0.0;
    for (int j = 0; j < nodes; ++j) {
        sum += f(-kPi + j * h);
    }
    return sum * h;
}

double invert_a1(double rbar) {
    if (!(rbar > 0.0) || !(rbar < 0.999)) {
        throw std::domain_error("invert_a1: rbar must lie in (0, 0.999)");
    }

    double lo = 1e-8;
    double hi = 700.0;
    if (rbar <= bessel_ratio(1, lo)) {
        return 2.0 * rbar;  // small-kappa linearization A_1(kappa) ~ kappa/2
    }

    // starting point: the standard piecewise approximation of A_1^{-1}
    double kappa;
    if (rbar < 0.53) {
        kappa = 2.0 * rbar + rbar * rbar * rbar + 5.0 * std::pow(rbar, 5) / 6.0;
    } else if (rbar < 0.85) {
        kappa = -0.4 + 1.39 * rbar + 0.43 / (1.0 - rbar);
    } else {
        kappa = 1.0 / (rbar * rbar * rbar - 4.0 * rbar * rbar + 3.0 * rbar);
    }
    kappa = std::min(std::max(kappa, lo), hi);

    for (int it = 0; it < 200; ++it) {
        const double a1 = bessel_ratio(1, kappa);
        const double resid = a1 - rbar;
        if (std::abs(resid) <= 1e-10) {
            return kappa;
        }
        if (resid > 0.0) {
            hi = kappa;
        } else {
            lo = kappa;
        }
        const double deriv = 1.0 - a1 * a1 - a1 / kappa;  // dA_1/dkappa
        double next = kappa - resid / deriv;
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);  // bisection fallback
        }
        kappa = next;
    }
    throw std::runtime_error("invert_a1: no convergence for rbar=" + std::to_string(rbar));
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double normal_quantile(double p) {
    if (!(p > 0.0) || !(p < 1.0)) {
        throw std::domain_error("normal_quantile: p must lie in (0, 1)");
    }
    // Acklam's rational approximation ...
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    // ... polished by one Halley step against erfc
    const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    const double u = e * std::sqrt(2.0 * kPi) * std::exp(0.5 * x * x);
    x -= u / (1.0 + 0.5 * x * u);
    return x;
}

}  // namespace circsym

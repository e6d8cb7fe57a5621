#pragma once

#include <functional>

namespace circsym {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Modified Bessel function of the first kind, integer order, by the
/// ascending power series. Valid for 0 <= x <= 700 (overflow guard);
/// relative error below 1e-12 on [0, 100].
double bessel_i(int order, double x);

/// A_k(kappa) = I_k(kappa) / I_0(kappa), in (0, 1) for kappa > 0.
double bessel_ratio(int order, double kappa);

/// Maps any finite angle to its representative in [-pi, pi).
double normalize_angle(double theta);

/// Integral of f over one period [-pi, pi) by the composite trapezoid rule
/// on equispaced nodes (spectrally accurate for smooth periodic f).
double integrate_periodic(const std::function<double(double)>& f, int nodes = 4096);

/// Solves A_1(kappa) = rbar for kappa, safeguarded Newton on [1e-8, 700].
/// Requires 0 < rbar < 0.999; |A_1(kappa) - rbar| <= 1e-10 on return.
double invert_a1(double rbar);

/// Standard normal CDF.
double normal_cdf(double x);

/// Standard normal quantile (inverse CDF), full double precision.
double normal_quantile(double p);

}  // namespace circsym

#!/usr/bin/env python3
"""Independent oracles used to freeze expected values in the C++ test suites.

Run from the repo root:  python3 tests/oracles/freeze_constants.py

Everything here is computed without the C++ library: modified Bessel
functions come from a 60-term exact-rational ascending series, reference
quantiles from scipy, and the wrapped-Cauchy test statistic from a
straight-line transcription of its closed-form display.
"""

from fractions import Fraction
import math

import mpmath as mp
from scipy import stats

mp.mp.dps = 40


def bessel_i_rational(order: int, x: Fraction, terms: int = 60) -> Fraction:
    """Ascending series sum_m (x/2)^(order+2m) / (m! (order+m)!), exact rationals."""
    half = x / 2
    total = Fraction(0)
    for m in range(terms):
        num = half ** (order + 2 * m)
        den = math.factorial(m) * math.factorial(order + m)
        total += Fraction(num, den)
    return total


def report(name, value, fmt="%.17g"):
    print(f"{name} = {fmt % value}")


# --- special ---------------------------------------------------------------
i0_1 = bessel_i_rational(0, Fraction(1))
i1_1 = bessel_i_rational(1, Fraction(1))
report("I_0(1)", float(i0_1))
report("I_1(1)", float(i1_1))
report("A_1(1) = I_1(1)/I_0(1)", float(i1_1 / i0_1))

i0_10 = bessel_i_rational(0, Fraction(10))
i1_10 = bessel_i_rational(1, Fraction(10))
report("A_1(10)", float(i1_10 / i0_10))
i4_1 = bessel_i_rational(4, Fraction(1))
report("A_4(1)", float(i4_1 / i0_1))
report("E sin2T coeff (1-A_4(1))/2", float((i0_1 - i4_1) / (2 * i0_1)))

# cross-check against mpmath's independent implementation
assert abs(float(i0_1) - float(mp.besseli(0, 1))) < 1e-16
assert abs(float(i1_10 / i0_10) - float(mp.besseli(1, 10) / mp.besseli(0, 10))) < 1e-15

# --- distributions ----------------------------------------------------------
report("VM kappa=1 pdf at 0: e/(2 pi I_0(1))", float(mp.e / (2 * mp.pi * mp.besseli(0, 1))))
report("WC rho=0.5 pdf at 0: 3/(2 pi)", float(3 / (2 * mp.pi)))
report("Cardioid rho=0.45 phidot(0): 9/19", 9.0 / 19.0)

# --- estimators --------------------------------------------------------------
report("atan2(2,1)", math.atan2(2.0, 1.0))

# --- quantiles ---------------------------------------------------------------
report("z_{0.975}", stats.norm.ppf(0.975))
report("z_{0.995}", stats.norm.ppf(0.995))
report("chi2(35) 0.999 quantile", stats.chi2.ppf(0.999, 35))
report("Kolmogorov 0.999 quantile", stats.kstwobign.ppf(0.999))

# --- wrapped Cauchy parametric statistic, straight-line oracle ---------------
# Test of symmetry about an unknown direction, assumed WC(rho), frequency k:
#   Q = n^{-1/2} sum_i [ sin(k(t_i - mhat))
#         - k rho^{k-1} (1-rho^2)^2 sin(t_i-mhat) / (1 + rho^2 - 2 rho cos(t_i-mhat)) ]
#       / sqrt( (1-rho^2)/2 * ( sum_{l=1..k} rho^{2(l-1)} - k^2 rho^{2(k-1)} (1-rho^2) ) )
# with mhat the sample mean direction.
sample = [0.3, 1.1, -0.4, 2.0, -1.2]
rho = 0.5
k = 1
n = len(sample)
mhat = math.atan2(sum(math.sin(t) for t in sample), sum(math.cos(t) for t in sample))
num = 0.0
for t in sample:
    r = t - mhat
    num += math.sin(k * r) - (k * rho ** (k - 1) * (1 - rho**2) ** 2) * math.sin(r) / (
        1 + rho**2 - 2 * rho * math.cos(r)
    )
num /= math.sqrt(n)
var = (1 - rho**2) / 2 * (
    sum(rho ** (2 * (l - 1)) for l in range(1, k + 1)) - k**2 * rho ** (2 * (k - 1)) * (1 - rho**2)
)
stat = num / math.sqrt(var)
report("WC(0.5) k=1 parametric statistic, sample {0.3,1.1,-0.4,2.0,-1.2}", stat)
report("  mean direction of that sample", mhat)
report("  two-sided normal p", 2 * stats.norm.sf(abs(stat)))

# sanity: variance term equals Gamma22.1 = 3/32 at rho=0.5, k=1
assert abs(var - 3 / 32) < 1e-15

# --- wrapped normal Fisher block by high-precision quadrature ----------------
def wn_block(rho, k):
    s2 = -2 * mp.log(rho)

    def f0(t):
        return mp.jtheta(3, t / 2, mp.exp(-s2 / 2)) / (2 * mp.pi)

    def phi(t):
        eps = mp.mpf("1e-20")
        return -(mp.log(f0(t + eps)) - mp.log(f0(t - eps))) / (2 * eps)

    g11 = mp.quad(lambda t: phi(t) ** 2 * f0(t), [-mp.pi, 0, mp.pi])
    g12 = k * mp.quad(lambda t: mp.cos(k * t) * f0(t), [-mp.pi, 0, mp.pi])
    g22 = mp.quad(lambda t: mp.sin(k * t) ** 2 * f0(t), [-mp.pi, 0, mp.pi])
    return g11, g12, g22


for rho in (0.5, 0.9):
    for k in (1, 2):
        g11, g12, g22 = wn_block(rho, k)
        print(f"WN rho={rho} k={k}: G11={mp.nstr(g11, 17)} G12={mp.nstr(g12, 17)} "
              f"G22={mp.nstr(g22, 17)} G22.1={mp.nstr(g22 - g12 ** 2 / g11, 17)}")

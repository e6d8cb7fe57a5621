#pragma once

#include <cstdint>
#include <vector>

#include "circsym/distributions.hpp"

namespace circsym {

/// Angles in radians, each normalized to [-pi, pi).
using AngleSample = std::vector<double>;

/// n i.i.d. draws from the symmetric base density centered at 0.
/// Von Mises uses the Best-Fisher wrapped-Cauchy-envelope rejection sampler,
/// cardioid rejection against the circular uniform, wrapped Cauchy the
/// arctangent inversion and wrapped normal a wrapped Box-Muller draw.
/// Byte-identical output for identical (family, n, seed).
AngleSample sample_base(const BaseFamily& family, int n, std::uint64_t seed);

/// n i.i.d. draws from the k-sine-skewed model: proposals from the base,
/// accepted with probability (1 + lambda sin(k X))/2 (envelope 2 f0), then
/// shifted by mu and normalized.
AngleSample sample_sine_skewed(const SineSkewedModel& model, int n, std::uint64_t seed);

/// Same draw stream as sample_sine_skewed; additionally reports the number
/// of base proposals consumed (for acceptance-rate diagnostics).
AngleSample sample_sine_skewed_counted(const SineSkewedModel& model, int n,
                                       std::uint64_t seed, std::uint64_t* proposals);

}  // namespace circsym

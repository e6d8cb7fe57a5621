#pragma once

#include <span>
#include <stdexcept>

namespace circsym {

/// Resultant length numerically zero: the mean direction is undefined.
struct zero_resultant_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CircularSummary {
    int n = 0;
    double mean_direction = 0.0;         // mu-hat
    double mean_resultant_length = 0.0;  // Rbar
    double b2bar = 0.0;                  // mean sin(2(theta - mu-hat))
    double a2bar = 0.0;                  // mean cos(2(theta - mu-hat))
    double skewness = 0.0;               // b2bar / (1 - Rbar)^{3/2}; NaN when degenerate
    bool degenerate = false;             // Rbar numerically 1
};

/// Method-of-moments mean direction atan2(sum sin, sum cos), in [-pi, pi).
double mean_direction(std::span<const double> angles);

CircularSummary circular_summary(std::span<const double> angles);

}  // namespace circsym

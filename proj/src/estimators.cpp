#include "circsym/estimators.hpp"

#include <cmath>
#include <limits>

#include "circsym/special.hpp"

namespace circsym {
namespace {

struct Resultant {
    double sum_cos = 0.0;
    double sum_sin = 0.0;
    double length() const { return std::hypot(sum_cos, sum_sin); }
};

Resultant resultant_of(std::span<const double> angles) {
    if (angles.empty()) {
        throw std::invalid_argument("need at least one angle");
    }
    Resultant r;
    for (const double theta : angles) {
        r.sum_cos += std::cos(theta);
        r.sum_sin += std::sin(theta);
    }
    return r;
}

}  // namespace

double mean_direction(std::span<const double> angles) {
    const Resultant r = resultant_of(angles);
    if (r.length() < 1e-12 * static_cast<double>(angles.size())) {
        throw zero_resultant_error("mean direction undefined: resultant length is zero");
    }
    return normalize_angle(std::atan2(r.sum_sin, r.sum_cos));
}

CircularSummary circular_summary(std::span<const double> angles) {
    const Resultant r = resultant_of(angles);
    const auto n = static_cast<double>(angles.size());
    if (r.length() < 1e-12 * n) {
        throw zero_resultant_error("mean direction undefined: resultant length is zero");
    }

    CircularSummary s;
    s.n = static_cast<int>(angles.size());
    s.mean_direction = normalize_angle(std::atan2(r.sum_sin, r.sum_cos));
    s.mean_resultant_length = r.length() / n;
    for (const double theta : angles) {
        s.b2bar += std::sin(2.0 * (theta - s.mean_direction));
        s.a2bar += std::cos(2.0 * (theta - s.mean_direction));
    }
    s.b2bar /= n;
    s.a2bar /= n;

    s.degenerate = s.mean_resultant_length >= 1.0 - 1e-12;
    s.skewness = s.degenerate
                     ? std::numeric_limits<double>::quiet_NaN()
                     : s.b2bar / std::pow(1.0 - s.mean_resultant_length, 1.5);
    return s;
}

}  // namespace circsym

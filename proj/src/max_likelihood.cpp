#include "bornrule/max_likelihood.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bornrule/error.hpp"

namespace bornrule {

double DeviationProfile::max_abs() const noexcept {
    double m = 0.0;
    for (double d : deltas) m = std::max(m, std::abs(d));
    return m;
}

double DeviationProfile::normalization_residual() const noexcept {
    double lin = 0.0;
    double quad = 0.0;
    for (double d : deltas) {
        lin += d;
        quad += d * d;
    }
    return lin + 0.5 * quad;
}

RadialProfile ml_profile(std::size_t n) {
    if (n == 0) throw InvalidDimension("ml_profile: dimension must be at least 1");
    return RadialProfile(std::vector<double>(n, std::sqrt(1.0 / static_cast<double>(n))));
}

DeviationProfile deviations(const RadialProfile& profile) {
    const double root_n = std::sqrt(static_cast<double>(profile.dim()));
    DeviationProfile dev;
    dev.deltas.reserve(profile.dim());
    double sq = 0.0;
    for (double r : profile.radii()) {
        const double d = root_n * r - 1.0;
        dev.deltas.push_back(d);
        sq += d * d;
    }
    dev.rms = std::sqrt(sq / static_cast<double>(profile.dim()));
    return dev;
}

double log_likelihood_ratio(const RadialProfile& profile) {
    const double root_n = std::sqrt(static_cast<double>(profile.dim()));
    double s = 0.0;
    for (double r : profile.radii()) {
        if (r == 0.0) return -std::numeric_limits<double>::infinity();
        // log1p keeps the small-deviation regime accurate.
        s += std::log1p(root_n * r - 1.0);
    }
    return s;
}

double log_likelihood_second_order(const DeviationProfile& dev) {
    return -static_cast<double>(dev.deltas.size()) * dev.rms * dev.rms;
}

double gaussian_width(std::size_t n) {
    if (n == 0) throw InvalidDimension("gaussian_width: dimension must be at least 1");
    return 1.0 / std::sqrt(3.0 * static_cast<double>(n));
}

}  // namespace bornrule

#include "bornrule/state_sampling.hpp"

#include <cmath>
#include <string>

#include "bornrule/error.hpp"

namespace bornrule {

namespace {

double sum_squares(std::span<const Amplitude> amps) {
    double s = 0.0;
    for (const auto& c : amps) s += std::norm(c);
    return s;
}

double sum_squares(std::span<const double> radii) {
    double s = 0.0;
    for (double r : radii) s += r * r;
    return s;
}

void require_unit(double norm2, const char* what) {
    if (!(std::abs(norm2 - 1.0) <= kNormTolerance)) {
        throw InvalidArgument(std::string(what) + ": squared norm " + std::to_string(norm2) + " is not 1");
    }
}

}  // namespace

StateVector::StateVector(std::vector<Amplitude> amps) : amps_(std::move(amps)) {
    if (amps_.empty()) throw InvalidDimension("StateVector: dimension must be at least 1");
    require_unit(sum_squares(amps_), "StateVector");
}

StateVector StateVector::normalized(std::vector<Amplitude> amps) {
    const double norm = std::sqrt(sum_squares(amps));
    if (!(norm > 0.0) || !std::isfinite(norm)) throw InvalidArgument("StateVector: cannot normalize zero vector");
    for (auto& c : amps) c /= norm;
    return StateVector(std::move(amps));
}

RadialProfile::RadialProfile(std::vector<double> radii) : radii_(std::move(radii)) {
    if (radii_.empty()) throw InvalidDimension("RadialProfile: dimension must be at least 1");
    for (double r : radii_) {
        if (!(r >= 0.0)) throw InvalidArgument("RadialProfile: radii must be nonnegative");
    }
    require_unit(sum_squares(radii_), "RadialProfile");
}

RadialProfile RadialProfile::normalized(std::vector<double> radii) {
    for (double r : radii) {
        if (!(r >= 0.0)) throw InvalidArgument("RadialProfile: radii must be nonnegative");
    }
    const double norm = std::sqrt(sum_squares(radii));
    if (!(norm > 0.0) || !std::isfinite(norm)) throw InvalidArgument("RadialProfile: cannot normalize zero vector");
    for (auto& r : radii) r /= norm;
    return RadialProfile(std::move(radii));
}

RadialProfile RadialProfile::from_squares(std::span<const double> squares) {
    std::vector<double> radii;
    radii.reserve(squares.size());
    for (double w : squares) {
        if (!(w >= 0.0)) throw InvalidArgument("RadialProfile: squared radii must be nonnegative");
        radii.push_back(std::sqrt(w));
    }
    return normalized(std::move(radii));
}

StateVector sample_state(std::size_t n, Stream& rng) {
    if (n == 0) throw InvalidDimension("sample_state: dimension must be at least 1");
    std::normal_distribution<double> gauss;
    std::vector<Amplitude> amps(n);
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (auto& c : amps) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            c = {re, im};
            norm2 += re * re + im * im;
        }
    } while (norm2 == 0.0);
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& c : amps) c *= inv;
    // One more pass absorbs the rounding of the first scaling.
    const double fix = 1.0 / std::sqrt(sum_squares(amps));
    for (auto& c : amps) c *= fix;
    return StateVector(std::move(amps));
}

void sample_radii(std::size_t n, Stream& rng, std::vector<double>& radii) {
    if (n == 0) throw InvalidDimension("sample_radii: dimension must be at least 1");
    std::normal_distribution<double> gauss;
    radii.resize(n);
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (auto& r : radii) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            r = re * re + im * im;
            norm2 += r;
        }
    } while (norm2 == 0.0);
    for (auto& r : radii) r = std::sqrt(r / norm2);
}

RadialProfile radial_profile(const StateVector& psi) {
    std::vector<double> radii;
    radii.reserve(psi.dim());
    for (const auto& c : psi.amps()) radii.push_back(std::abs(c));
    return RadialProfile::normalized(std::move(radii));
}

double radial_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw DimensionMismatch("radial_distance: dimensions differ");
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return std::sqrt(s);
}

double phase_distance(const StateVector& psi, const StateVector& phi) {
    if (psi.dim() != phi.dim()) throw DimensionMismatch("phase_distance: dimensions differ");
    double s = 0.0;
    for (std::size_t k = 0; k < psi.dim(); ++k) {
        const double d = std::abs(phi[k]) - std::abs(psi[k]);
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace bornrule

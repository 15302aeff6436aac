#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "bornrule/random.hpp"

namespace bornrule {

using Amplitude = std::complex<double>;

/// Tolerance on |sum |c_k|^2 - 1| accepted by the normalized types.
inline constexpr double kNormTolerance = 1e-12;

/// Pure state of dimension n with unit norm.
class StateVector {
public:
    /// Validates the norm; throws InvalidDimension or InvalidArgument.
    explicit StateVector(std::vector<Amplitude> amps);

    /// Rescales `amps` to unit norm first.
    static StateVector normalized(std::vector<Amplitude> amps);

    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Amplitude> amps() const noexcept { return amps_; }
    [[nodiscard]] const Amplitude& operator[](std::size_t k) const { return amps_[k]; }

private:
    std::vector<Amplitude> amps_;
};

/// Moduli r_k = |c_k| of a pure state; nonnegative with unit quadratic norm.
class RadialProfile {
public:
    explicit RadialProfile(std::vector<double> radii);

    static RadialProfile normalized(std::vector<double> radii);

    /// Profile with r_k = sqrt(w_k) for weights summing to one.
    static RadialProfile from_squares(std::span<const double> squares);

    [[nodiscard]] std::size_t dim() const noexcept { return radii_.size(); }
    [[nodiscard]] std::span<const double> radii() const noexcept { return radii_; }
    [[nodiscard]] double operator[](std::size_t k) const { return radii_[k]; }

private:
    std::vector<double> radii_;
};

/// Haar-random pure state: 2n standard normals, then normalization.
StateVector sample_state(std::size_t n, Stream& rng);

/// Same draw as sample_state but yields only the moduli, without allocating
/// a StateVector. Writes into `radii` (resized to n).
void sample_radii(std::size_t n, Stream& rng, std::vector<double>& radii);

RadialProfile radial_profile(const StateVector& psi);

/// Distance between psi and phi minimized over independent phase rotations
/// of each coefficient of phi: sqrt(sum_k (|phi_k| - |psi_k|)^2).
double phase_distance(const StateVector& psi, const StateVector& phi);

/// Euclidean distance between two radial profiles of equal dimension.
double radial_distance(std::span<const double> a, std::span<const double> b);

}  // namespace bornrule

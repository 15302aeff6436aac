#include "bornrule/grid_counting.hpp"

#include <cmath>
#include <numbers>

#include "bornrule/error.hpp"

namespace bornrule {

void GridSpec::validate() const {
    if (!(d > 0.0 && d <= 0.1)) throw InvalidArgument("GridSpec: d must lie in (0, 0.1]");
}

namespace {

void check_radius(double r, const GridSpec& grid) {
    grid.validate();
    if (!(r > 0.0)) throw InvalidArgument("grid: radius must be positive");
    if (!(r > grid.d)) throw InvalidArgument("grid: radius must exceed the cell size");
    if (!std::isfinite(r)) throw InvalidArgument("grid: radius must be finite");
}

// Smallest j >= 0 with pred(j), for pred monotone false -> true, starting
// from an estimate.
template <class Pred>
long long first_true(long long guess, Pred pred) {
    long long j = std::max(0LL, guess);
    while (j > 0 && pred(j - 1)) --j;
    while (!pred(j)) ++j;
    return j;
}

// Largest j >= 0 with pred(j), for pred monotone true -> false; -1 if none.
template <class Pred>
long long last_true(long long guess, Pred pred) {
    long long j = std::max(0LL, guess);
    while (j >= 0 && !pred(j)) --j;
    if (j < 0) return -1;
    while (pred(j + 1)) ++j;
    return j;
}

}  // namespace

std::uint64_t count_circle_cells(double r, const GridSpec& grid) {
    check_radius(r, grid);
    // Cell units: cell (i, j) has center (i + 1/2, j + 1/2). Center
    // coordinates are quarter-integers, so squared norms are exact.
    const double rho = r / grid.d;
    const double lo2 = (rho - 0.5) * (rho - 0.5);
    const double hi2 = (rho + 0.5) * (rho + 0.5);

    std::uint64_t quadrant = 0;
    for (long long i = 0;; ++i) {
        const double x = static_cast<double>(i) + 0.5;
        const double x2 = x * x;
        if (x2 >= hi2) break;
        auto inside_hi = [&](long long j) {
            const double y = static_cast<double>(j) + 0.5;
            return x2 + y * y < hi2;
        };
        auto outside_lo = [&](long long j) {
            const double y = static_cast<double>(j) + 0.5;
            return x2 + y * y >= lo2;
        };
        const double span_lo = lo2 - x2;
        const double span_hi = hi2 - x2;
        const auto j_lo = first_true(
            span_lo > 0.0 ? static_cast<long long>(std::ceil(std::sqrt(span_lo) - 0.5)) : 0LL, outside_lo);
        const auto j_hi = last_true(static_cast<long long>(std::floor(std::sqrt(span_hi) - 0.5)), inside_hi);
        if (j_hi >= j_lo) quadrant += static_cast<std::uint64_t>(j_hi - j_lo + 1);
    }
    // Reflections x -> -x, y -> -y map cell centers onto cell centers.
    return 4 * quadrant;
}

std::uint64_t count_intersected_cells(double r, const GridSpec& grid) {
    check_radius(r, grid);
    // Quadrant cell [i, i+1] x [j, j+1]: nearest corner (i, j), farthest
    // corner (i+1, j+1).
    const double rho = r / grid.d;
    const double rho2 = rho * rho;

    std::uint64_t quadrant = 0;
    for (long long i = 0;; ++i) {
        const double xn = static_cast<double>(i);
        const double xf = xn + 1.0;
        if (xn * xn > rho2) break;
        auto near_inside = [&](long long j) {
            const double y = static_cast<double>(j);
            return xn * xn + y * y <= rho2;
        };
        auto far_outside = [&](long long j) {
            const double y = static_cast<double>(j) + 1.0;
            return xf * xf + y * y >= rho2;
        };
        const double span = rho2 - xf * xf;
        const auto j_lo = first_true(span > 0.0 ? static_cast<long long>(std::ceil(std::sqrt(span) - 1.0)) : 0LL,
                                     far_outside);
        const auto j_hi = last_true(static_cast<long long>(std::floor(std::sqrt(rho2 - xn * xn))), near_inside);
        if (j_hi >= j_lo) quadrant += static_cast<std::uint64_t>(j_hi - j_lo + 1);
    }
    return 4 * quadrant;
}

double mean_circle_cells(double r_lo, double r_hi, std::size_t samples, const GridSpec& grid) {
    grid.validate();
    if (!(r_lo > grid.d && r_hi > r_lo)) throw InvalidArgument("mean_circle_cells: need d < r_lo < r_hi");
    if (samples == 0) throw InvalidArgument("mean_circle_cells: samples must be positive");
    const double step = (r_hi - r_lo) / static_cast<double>(samples);
    double total = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        total += static_cast<double>(count_circle_cells(r_lo + (static_cast<double>(i) + 0.5) * step, grid));
    }
    return total / static_cast<double>(samples);
}

namespace {

double closed_form_cells(const RadialProfile& profile, const GridSpec& grid) {
    double v = 1.0;
    for (double r : profile.radii()) v *= 2.0 * std::numbers::pi * r / grid.d;
    return v;
}

}  // namespace

EquivCellCount count_equiv_cells(const RadialProfile& profile, const GridSpec& grid) {
    grid.validate();
    EquivCellCount out;
    out.cells = 1.0;
    for (double r : profile.radii()) {
        if (!(r > grid.d)) throw InvalidArgument("count_equiv_cells: every radius must exceed d");
        out.cells *= static_cast<double>(count_circle_cells(r, grid));
    }
    out.closed_form = closed_form_cells(profile, grid);
    return out;
}

EquivCellCount mean_equiv_cells(const RadialProfile& profile, const GridSpec& grid, double window,
                                std::size_t samples) {
    grid.validate();
    if (!(window > 0.0 && window < 1.0)) throw InvalidArgument("mean_equiv_cells: window must lie in (0, 1)");
    EquivCellCount out;
    out.cells = 1.0;
    for (double r : profile.radii()) {
        if (!(r * (1.0 - window) > grid.d)) throw InvalidArgument("mean_equiv_cells: radius window must exceed d");
        out.cells *= mean_circle_cells(r * (1.0 - window), r * (1.0 + window), samples, grid);
    }
    out.closed_form = closed_form_cells(profile, grid);
    return out;
}

}  // namespace bornrule

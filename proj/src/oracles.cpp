#include "bornrule/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace bornrule::oracle {

std::uint64_t scan_circle_cells(double r, double d) {
    const double rho = r / d;
    const double lo2 = (rho - 0.5) * (rho - 0.5);
    const double hi2 = (rho + 0.5) * (rho + 0.5);
    const auto extent = static_cast<long long>(std::ceil(rho)) + 2;
    std::uint64_t count = 0;
    for (long long i = -extent; i < extent; ++i) {
        for (long long j = -extent; j < extent; ++j) {
            const double cx = static_cast<double>(i) + 0.5;
            const double cy = static_cast<double>(j) + 0.5;
            const double c2 = cx * cx + cy * cy;
            if (c2 >= lo2 && c2 < hi2) ++count;
        }
    }
    return count;
}

std::uint64_t scan_intersected_cells(double r, double d) {
    const double rho = r / d;
    const double rho2 = rho * rho;
    const auto extent = static_cast<long long>(std::ceil(rho)) + 2;
    std::uint64_t count = 0;
    for (long long i = -extent; i < extent; ++i) {
        for (long long j = -extent; j < extent; ++j) {
            const double x0 = static_cast<double>(i);
            const double y0 = static_cast<double>(j);
            const double nx = std::clamp(0.0, x0, x0 + 1.0);
            const double ny = std::clamp(0.0, y0, y0 + 1.0);
            double far2 = 0.0;
            for (double cx : {x0, x0 + 1.0}) {
                for (double cy : {y0, y0 + 1.0}) far2 = std::max(far2, cx * cx + cy * cy);
            }
            if (nx * nx + ny * ny <= rho2 && rho2 <= far2) ++count;
        }
    }
    return count;
}

std::vector<double> partition_log_weights(std::size_t n, double amp_l, double amp_r) {
    std::vector<double> w(n + 1, -std::numeric_limits<double>::infinity());
    for (std::size_t m = 1; m < n; ++m) {
        const double dm = static_cast<double>(m);
        const double dr = static_cast<double>(n - m);
        w[m] = dm * std::log(amp_l) - 0.5 * dm * std::log(dm) + dr * std::log(amp_r) - 0.5 * dr * std::log(dr);
    }
    return w;
}

std::size_t scan_optimal_partition(std::size_t n, double amp_l, double amp_r) {
    const auto w = partition_log_weights(n, amp_l, amp_r);
    return static_cast<std::size_t>(std::max_element(w.begin(), w.end()) - w.begin());
}

namespace {

double rotated_distance2(const StateVector& psi, const StateVector& phi, const std::vector<double>& theta) {
    double s = 0.0;
    for (std::size_t k = 0; k < psi.dim(); ++k) s += std::norm(std::polar(1.0, theta[k]) * phi[k] - psi[k]);
    return s;
}

// Exhaustive search over the grid of 2 * half_width + 1 points per axis,
// spaced `step` and centered at `center`; moves center to the best point.
void grid_search(const StateVector& psi, const StateVector& phi, std::vector<double>& center, double step,
                 long long half_width, double& best) {
    const std::size_t n = center.size();
    const std::vector<double> origin = center;
    std::vector<long long> idx(n, -half_width);
    std::vector<double> theta(n);
    while (true) {
        for (std::size_t k = 0; k < n; ++k) theta[k] = origin[k] + static_cast<double>(idx[k]) * step;
        const double v = rotated_distance2(psi, phi, theta);
        if (v < best) {
            best = v;
            center = theta;
        }
        std::size_t k = 0;
        while (k < n && ++idx[k] > half_width) idx[k++] = -half_width;
        if (k == n) break;
    }
}

}  // namespace

double search_phase_distance(const StateVector& psi, const StateVector& phi, double coarse_step,
                             double fine_step) {
    const std::size_t n = psi.dim();
    const auto coarse_half = static_cast<long long>(std::ceil(std::numbers::pi / coarse_step));
    std::vector<double> center(n, 0.0);
    double best = std::numeric_limits<double>::infinity();
    grid_search(psi, phi, center, coarse_step, coarse_half, best);
    // Each refinement pass spans one step of the previous grid on either side.
    double previous = coarse_step;
    for (double step = fine_step; step >= 1e-8; step *= 0.1) {
        const auto half = static_cast<long long>(std::ceil(previous / step)) + 1;
        grid_search(psi, phi, center, step, half, best);
        previous = step;
    }
    return std::sqrt(best);
}

double ks_critical(double alpha, std::size_t m) {
    return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(static_cast<double>(m));
}

}  // namespace bornrule::oracle

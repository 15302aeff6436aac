#pragma once

#include <cstddef>
#include <cstdint>

#include "bornrule/state_sampling.hpp"

namespace bornrule {

/// Square grid of side d on the complex amplitude plane, with lattice lines
/// at integer multiples of d.
struct GridSpec {
    double d = 0.01;

    void validate() const;  ///< 0 < d <= 0.1
};

/// Cells traced by the circle |z| = r: those whose centers lie within d/2 of
/// the circle, i.e. r - d/2 <= |center| < r + d/2. Exact lattice count.
/// Throws InvalidArgument unless r > d.
std::uint64_t count_circle_cells(double r, const GridSpec& grid);

/// Cells whose closed square meets the circle. Grows like 8r/d rather than
/// 2 pi r/d; kept for comparison with the traced count.
std::uint64_t count_intersected_cells(double r, const GridSpec& grid);

/// Mean of count_circle_cells over `samples` stratified radii
/// r_lo + (i + 1/2)(r_hi - r_lo)/samples.
double mean_circle_cells(double r_lo, double r_hi, std::size_t samples, const GridSpec& grid);

struct EquivCellCount {
    double cells = 0.0;        ///< product over k of the per-circle cell counts
    double closed_form = 0.0;  ///< (2 pi / d)^n prod r_k
};

/// Cells of the 2n-dimensional grid covering the phase-equivalence class of
/// `profile`. Every radius must exceed d.
EquivCellCount count_equiv_cells(const RadialProfile& profile, const GridSpec& grid);

/// As count_equiv_cells, but each per-circle count is averaged over radii in
/// [r_k (1 - window), r_k (1 + window)].
EquivCellCount mean_equiv_cells(const RadialProfile& profile, const GridSpec& grid, double window,
                                std::size_t samples);

}  // namespace bornrule

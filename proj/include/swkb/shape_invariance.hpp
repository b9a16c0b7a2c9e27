#pragma once

#include <span>
#include <utility>
#include <vector>

#include "swkb/spectrum.hpp"
#include "swkb/superpotential.hpp"

namespace swkb {

/// Aggregate of pointwise residuals over an (x, a) grid.
struct ResidualReport {
    double max_abs_residual = 0;
    double rms_residual = 0;
    long sample_count = 0;
    double worst_x = 0;
    double worst_a = 0;
};

using GridPoint = std::pair<double, double>;  // (x, a)

/// The standard 20 x 10 (x, a) grid spanning the entry's documented validity
/// region.
std::vector<GridPoint> standard_grid(const SuperpotentialSpec& spec, int nx = 20, int na = 10);

/// Residual of the shape-invariance condition
///   W^2(x,a) + hbar W'(x,a) + g(a) - [W^2(x,a+hbar) - hbar W'(x,a+hbar) + g(a+hbar)]
/// evaluated pointwise on the grid.
ResidualReport residual_sic(const SuperpotentialSpec& spec, std::span<const GridPoint> grid);

/// Residual of W dW/da - dW/dx + (1/2) dg/da, with dW/da analytic per class.
ResidualReport residual_pde1(const SuperpotentialSpec& spec, std::span<const GridPoint> grid);

/// Residual of d^3 W / (da^2 dx): the analytic d^2W/da^2 is finite-differenced
/// in x (it is x-independent for every conventional class, so catalog entries
/// give exactly zero).
ResidualReport residual_pde2(const SuperpotentialSpec& spec, std::span<const GridPoint> grid);

/// Re-derives the shape-invariance class from the f1/f2/u decomposition by
/// testing the class-defining combinations for constancy on sample points
/// ((max - min) <= 1e-8 * (1 + |mean|)). Returns the tag and the fitted
/// constants; NonConventional is a valid answer, not an error.
std::pair<SIClass, ConstantMap> classify(const SuperpotentialSpec& spec, int samples = 64);
std::pair<SIClass, ConstantMap> classify(const SuperpotentialSpec& spec, double x_lo, double x_hi,
                                         int samples);

}  // namespace swkb

#pragma once

#include <vector>

#include "swkb/superpotential.hpp"

namespace swkb {

struct OracleConfig {
    int grid_points = 2000;       // initial interior grid size (>= 500)
    DomainInterval box;           // finite Dirichlet box inside spec.domain
    int eigen_count = 4;
    double convergence_rel_tol = 1e-6;
    int max_refinements = 7;      // grid doublings
    bool check_box = true;        // re-solve on an enlarged box and compare
    bool use_default_box = true;  // take box from validity_info(spec.name)
};

struct OracleReport {
    std::vector<double> eigenvalues;  // Richardson extrapolation of two finest grids
    std::vector<double> algebraic;
    double max_rel_deviation = 0;     // relative to max(|E_n|, hbar)
    int grid_points_used = 0;
    double box_lo = 0, box_hi = 0;
    int refinements_used = 0;
    std::vector<double> edge_amplitude;  // |u(first)|, |u(last)| / max|u|, per state
};

/// Lowest eigenvalues of H_sign = -hbar^2 d^2/dx^2 + V_sign on a uniform grid
/// with Dirichlet edges (symmetric second difference), refined by doubling
/// until successive eigenvalue sets agree to convergence_rel_tol; the
/// reported values are the Richardson extrapolation of the two finest grids.
/// Compares against the algebraic spectrum (for sign = plus, against
/// E+_n = E-_{n+1}).
///
/// Throws NotConverged when the refinement budget is exhausted and
/// BoxTooSmall when enlarging the box moves any target eigenvalue by more
/// than the convergence tolerance.
OracleReport solve_spectrum(const SuperpotentialSpec& spec, Sign sign, OracleConfig config);

/// max over n of |E-_{n+1} - E+_n| / max(E-_{n+1}, hbar) from two
/// independent eigensolves.
double isospectrality_check(const SuperpotentialSpec& spec, OracleConfig config);

/// Lowest eigen_count eigenvalues of the symmetric tridiagonal matrix with
/// diagonal d and off-diagonal e, by Sturm-sequence bisection.
std::vector<double> tridiagonal_lowest_eigenvalues(const std::vector<double>& d,
                                                   const std::vector<double>& e, int count);

}  // namespace swkb

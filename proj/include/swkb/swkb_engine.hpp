#pragma once

#include "swkb/spectrum.hpp"
#include "swkb/superpotential.hpp"

namespace swkb {

/// The pair (x1, x2) solving W(x1) = -sqrt(E), W(x2) = +sqrt(E), with the
/// residuals of W -+ sqrt(E) at the returned points. x1 == x2 only for E = 0.
struct TurningPoints {
    double x1 = 0, x2 = 0;
    double f_at_x1 = 0, f_at_x2 = 0;
};

enum class QuadMethod { sine_substitution_gauss, tanh_sinh };

struct QuadratureConfig {
    QuadMethod method = QuadMethod::sine_substitution_gauss;
    int base_nodes = 64;
    int max_refinements = 8;
    double rel_tol = 1e-10;
    double root_tol = 1e-12;  // on the W -+ sqrt(E) residual
};

struct SwkbResult {
    int n = 0;
    double energy = 0;
    TurningPoints turning;
    double integral = 0;
    double residual = 0;  // integral - n*pi*hbar
    bool converged = false;
    int refinements_used = 0;
    double est_error = 0;
};

/// Brackets the roots of W + sqrt(E) left of W's zero and W - sqrt(E) right
/// of it (expanding geometrically toward the domain endpoints), then refines
/// with Brent to config.root_tol. E = 0 returns the coincident pair at W's
/// zero. Throws BracketError when E exceeds the well depth.
TurningPoints find_turning_points(const SuperpotentialSpec& spec, double E,
                                  const QuadratureConfig& config = {});

/// I(a, n, hbar) = int_{x1}^{x2} sqrt(E_n - W^2) dx with E_n from the
/// spectrum module, never solved for. The default method substitutes
/// x = m + r sin(theta), which absorbs the inverse-square-root turning-point
/// behavior and leaves a smooth integrand for Gauss-Legendre; tanh_sinh
/// integrates directly in x. n = 0 short-circuits to exactly zero.
SwkbResult swkb_integral(const SuperpotentialSpec& spec, int n,
                         const QuadratureConfig& config = {});

enum class DIMode { finite_difference, eq14 };

/// dI/dhbar: either a central difference of swkb_integral in hbar (step
/// 1e-4*hbar, constants fixed, E_n recomputed at each hbar), or the reduced
/// boundary-term-free identity (1/2) dE_n/dhbar * int dx / sqrt(E_n - W^2)
/// evaluated with tanh-sinh quadrature. Both approach n*pi for conventional
/// entries.
double dI_dhbar(const SuperpotentialSpec& spec, int n, const QuadratureConfig& config, DIMode mode);

/// Baseline lowest-order WKB action int sqrt(E_n - V_minus) dx over the
/// classically allowed region of V_minus (to contrast with SWKB exactness;
/// equals (n + 1/2) pi hbar only in special cases).
double conventional_wkb_integral(const SuperpotentialSpec& spec, int n,
                                 const QuadratureConfig& config = {});

/// Same baseline at an explicit energy; the allowed region may end at a
/// domain endpoint when V_minus stays below E all the way (integrable edge).
double wkb_action_at_energy(const SuperpotentialSpec& spec, double E,
                            const QuadratureConfig& config = {});

}  // namespace swkb

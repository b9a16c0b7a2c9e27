#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swkb/domain.hpp"
#include "swkb/errors.hpp"

namespace swkb {

using ConstantMap = std::map<std::string, double>;
using RealFn = std::function<double(double)>;

/// A concrete superpotential W(x, a) = a*f1(x) + f2(x) + u(a), with
/// u(a) = u_alpha*a + u_B/a. Catalog entries provide closed-form component
/// functions and derivatives; an immutable value after construction.
///
/// Specs outside the three-class decomposition (test fixtures, controls with
/// exotic structure) may instead supply the general_* closures, which take
/// precedence over the component form.
struct SuperpotentialSpec {
    std::string name;
    SIClass si_class = SIClass::NonConventional;
    double a = 0;      // shape parameter a0
    double hbar = 1;   // mass convention 2m = 1 throughout
    ConstantMap constants;
    DomainInterval domain;
    double perturbation_amplitude = 0;

    // component decomposition
    RealFn f1, f1_prime;   // empty function means f1 == 0
    RealFn f2, f2_prime;   // empty function means f2 == 0
    double u_alpha = 0;
    double u_B = 0;

    // general-form escape hatch (x, a_eff) -> value
    std::function<double(double, double)> general_W;
    std::function<double(double, double)> general_dW_dx;
    std::function<double(double, double)> general_dW_da;
    std::function<double(double, double)> general_d2W_da2;

    // rebuilds the spec at a different hbar (the closures of hbar-dependent
    // entries capture hbar, so a plain copy is not enough for those)
    std::function<SuperpotentialSpec(double)> rebuild_with_hbar;

    bool has_f1() const { return static_cast<bool>(f1); }
    bool has_f2() const { return static_cast<bool>(f2); }

    double u(double a_eff) const;
    double du_da(double a_eff) const;
    double d2u_da2(double a_eff) const;

    /// Returns the named constant, or throws UnknownParameter.
    double constant(const std::string& key) const;

    /// Copy of this spec evaluated at a different hbar.
    SuperpotentialSpec with_hbar(double new_hbar) const;
};

enum class Sign { minus, plus };

double eval_W(const SuperpotentialSpec& spec, double x);
double eval_W(const SuperpotentialSpec& spec, double x, double a_eff);
double eval_W_prime(const SuperpotentialSpec& spec, double x);
double eval_W_prime(const SuperpotentialSpec& spec, double x, double a_eff);
double eval_V(const SuperpotentialSpec& spec, double x, Sign sign);
double eval_V(const SuperpotentialSpec& spec, double x, Sign sign, double a_eff);

/// Analytic dW/da and d^3 W/(da^2 dx) building blocks for the PDE residuals.
double eval_dW_da(const SuperpotentialSpec& spec, double x, double a_eff);
double eval_d2W_da2(const SuperpotentialSpec& spec, double x, double a_eff);

/// The zero of W in the domain (unbroken SUSY). Throws NoZeroCrossing when W
/// never changes sign before the domain endpoints.
double superpotential_zero(const SuperpotentialSpec& spec);
double superpotential_zero(const SuperpotentialSpec& spec, double a_eff);

/// Unnormalized ground-state log-amplitude -(1/hbar) * int_{x_ref}^{x} W dy,
/// with x_ref the zero of W.
double ground_state_log_density(const SuperpotentialSpec& spec, double x);

/// The mirrored superpotential Wt(x) = -W(-x) on the mirrored domain; leaves
/// V_minus and the SWKB integral invariant.
SuperpotentialSpec mirrored(const SuperpotentialSpec& spec);

/// Documented parameter region for grids, finite-difference property tests
/// and the oracle's default box.
struct ValidityInfo {
    double grid_x_lo = 0, grid_x_hi = 0;   // standard (x, a) grid, x range
    double grid_a_lo = 0, grid_a_hi = 0;   // standard (x, a) grid, a range
    double box_lo = 0, box_hi = 0;         // oracle Dirichlet box
    int oracle_grid_points = 2000;         // initial oracle grid
    int default_n_max = 12;
    std::vector<std::string> constraints;  // human-readable constraint expressions
};

/// All catalog entries with default parameters.
std::vector<SuperpotentialSpec> catalog();

/// Names of the catalog entries, in catalog order.
std::vector<std::string> catalog_names();

/// Builds one catalog entry, applying `overrides` (keys: "a", "hbar",
/// entry-specific constants, "perturbation_amplitude"). Throws
/// UnknownParameter for keys the entry does not accept and ValidityError for
/// values violating the class constraints.
SuperpotentialSpec catalog_entry(const std::string& name, const ConstantMap& overrides = {});

const ValidityInfo& validity_info(const std::string& name);

}  // namespace swkb

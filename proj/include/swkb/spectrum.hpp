#pragma once

#include <utility>
#include <vector>

#include "swkb/superpotential.hpp"

namespace swkb {

/// The function g(a) induced by a shape-invariance class, with the bound
/// state energies E_n = g(a + n*hbar) - g(a) and their hbar-derivatives.
/// E_0 = 0 exactly and E_{n+1} > E_n across the validity range.
///
/// g is fixed only up to an additive constant; the implementation pins
/// per-class conventions (IA: g = omega*a; IIIa: g = -2*epsilon*a;
/// II: g = -B^2/a^2 - lambda*a^2; IB: g = -alpha^2*a^2; IIIb: g = -lambda*a^2).
/// Energies are differences, so the convention is unobservable.
///
/// The NonConventional control uses the unperturbed harmonic reference
/// g = omega*a, so its SWKB residuals vanish in the amplitude -> 0 limit.
struct SpectrumModel {
    SIClass si_class = SIClass::NonConventional;
    ConstantMap constants;
    double a = 0;
    double hbar = 1;
    int n_max = 0;
};

SpectrumModel make_spectrum_model(const SuperpotentialSpec& spec);
SpectrumModel make_spectrum_model(const SuperpotentialSpec& spec, int n_max);

/// Largest valid n implied by the class constraints (capped at 12 for
/// infinite ladders).
int default_n_max(SIClass si_class, const ConstantMap& constants, double a, double hbar);

double g_of_a(const SpectrumModel& model, double a_eff);
double energy(const SpectrumModel& model, int n);
double dE_dhbar(const SpectrumModel& model, int n);

/// Pairs (E-_{n+1}, E+_n), n = 0 .. n_max-1, that must agree by partner
/// isospectrality. E+ is obtained from the shifted-parameter model
/// a -> a + hbar plus the g-shift, not by copying E-.
std::vector<std::pair<double, double>> partner_check_pairs(const SpectrumModel& model);

}  // namespace swkb

#include "swkb/spectrum.hpp"

#include <cmath>
#include <string>

namespace swkb {

namespace {

double get(const ConstantMap& constants, const std::string& key) {
    const auto it = constants.find(key);
    if (it == constants.end())
        throw UnknownParameter("spectrum model: constant '" + key + "' is missing");
    return it->second;
}

// dg/da must stay positive along [a, a_eff] (no level crossing); each class
// has a closed-form criterion for that.
void check_validity(const SpectrumModel& m, double a_eff, const char* what) {
    const std::string where = std::string("spectrum (") + what + ")";
    switch (m.si_class) {
        case SIClass::IA:
        case SIClass::NonConventional:
            return;
        case SIClass::IB:
            if (a_eff >= 0)
                throw ValidityError(where + ": Class IB requires a + n*hbar < 0, got " +
                                    std::to_string(a_eff));
            return;
        case SIClass::IIA:
        case SIClass::IIB: {
            if (a_eff == 0) throw ValidityError(where + ": Class II requires a != 0");
            if (m.a > 0 && a_eff < 0)
                throw ValidityError(where + ": Class II parameter ladder crossed a = 0");
            const double lambda = get(m.constants, "lambda");
            if (lambda > 0) {
                const double B = get(m.constants, "B");
                if (B * B <= lambda * std::pow(a_eff, 4))
                    throw ValidityError(where +
                                        ": Class IIB branch requires B^2 > lambda*(a + n*hbar)^4");
            }
            return;
        }
        case SIClass::IIIa:
            return;
        case SIClass::IIIb: {
            const double lambda = get(m.constants, "lambda");
            if (lambda * a_eff >= 0)
                throw ValidityError(where + ": Class IIIb requires lambda*(a + n*hbar) < 0");
            return;
        }
    }
}

}  // namespace

int default_n_max(SIClass si_class, const ConstantMap& constants, double a, double hbar) {
    constexpr int kInfiniteLadderDefault = 12;
    switch (si_class) {
        case SIClass::IA:
        case SIClass::IIIa:
        case SIClass::NonConventional:
            return kInfiniteLadderDefault;
        case SIClass::IB:
            return std::max(0, static_cast<int>(std::floor(-a / hbar)) - 1);
        case SIClass::IIA:
            return kInfiniteLadderDefault;
        case SIClass::IIB: {
            const double lambda = get(constants, "lambda");
            if (lambda <= 0) return kInfiniteLadderDefault;
            const double B = get(constants, "B");
            int n = 0;
            while (n < 1000) {
                const double an = a + (n + 1) * hbar;
                if (B <= std::sqrt(lambda) * an * an) break;
                ++n;
            }
            return n;
        }
        case SIClass::IIIb: {
            const double lambda = get(constants, "lambda");
            int n = 0;
            while (n < kInfiniteLadderDefault) {
                if (lambda * (a + (n + 1) * hbar) >= 0) break;
                ++n;
            }
            return n;
        }
    }
    return 0;
}

SpectrumModel make_spectrum_model(const SuperpotentialSpec& spec) {
    SpectrumModel m;
    m.si_class = spec.si_class;
    m.constants = spec.constants;
    m.a = spec.a;
    m.hbar = spec.hbar;
    m.n_max = default_n_max(m.si_class, m.constants, m.a, m.hbar);
    return m;
}

SpectrumModel make_spectrum_model(const SuperpotentialSpec& spec, int n_max) {
    SpectrumModel m = make_spectrum_model(spec);
    if (n_max < 0) throw ValidityError("spectrum model: n_max must be non-negative");
    m.n_max = n_max;
    return m;
}

double g_of_a(const SpectrumModel& model, double a_eff) {
    check_validity(model, a_eff, "g_of_a");
    switch (model.si_class) {
        case SIClass::IA:
        case SIClass::NonConventional:
            return get(model.constants, "omega") * a_eff;
        case SIClass::IB: {
            const double alpha = get(model.constants, "alpha");
            return -alpha * alpha * a_eff * a_eff;
        }
        case SIClass::IIA:
        case SIClass::IIB: {
            const double B = get(model.constants, "B");
            const double lambda = get(model.constants, "lambda");
            return -B * B / (a_eff * a_eff) - lambda * a_eff * a_eff;
        }
        case SIClass::IIIa:
            return -2.0 * get(model.constants, "epsilon") * a_eff;
        case SIClass::IIIb:
            return -get(model.constants, "lambda") * a_eff * a_eff;
    }
    throw Error("unreachable");
}

double energy(const SpectrumModel& model, int n) {
    if (n < 0) throw ValidityError("energy: n must be non-negative");
    if (n > model.n_max)
        throw ValidityError("energy: n = " + std::to_string(n) + " exceeds n_max = " +
                            std::to_string(model.n_max));
    if (n == 0) return 0.0;
    const double a_n = model.a + n * model.hbar;
    return g_of_a(model, a_n) - g_of_a(model, model.a);
}

double dE_dhbar(const SpectrumModel& model, int n) {
    if (n < 0) throw ValidityError("dE_dhbar: n must be non-negative");
    if (n > model.n_max)
        throw ValidityError("dE_dhbar: n = " + std::to_string(n) + " exceeds n_max = " +
                            std::to_string(model.n_max));
    if (n == 0) return 0.0;
    const double a_n = model.a + n * model.hbar;
    check_validity(model, a_n, "dE_dhbar");
    switch (model.si_class) {
        case SIClass::IA:
        case SIClass::NonConventional:
            return n * get(model.constants, "omega");
        case SIClass::IB: {
            const double alpha = get(model.constants, "alpha");
            return -2.0 * alpha * alpha * a_n * n;
        }
        case SIClass::IIA:
        case SIClass::IIB: {
            const double B = get(model.constants, "B");
            const double lambda = get(model.constants, "lambda");
            return 2.0 * B * B * n / (a_n * a_n * a_n) - 2.0 * n * lambda * a_n;
        }
        case SIClass::IIIa:
            return -2.0 * get(model.constants, "epsilon") * n;
        case SIClass::IIIb:
            return -2.0 * n * get(model.constants, "lambda") * a_n;
    }
    throw Error("unreachable");
}

std::vector<std::pair<double, double>> partner_check_pairs(const SpectrumModel& model) {
    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(model.n_max);
    SpectrumModel shifted = model;
    shifted.a = model.a + model.hbar;
    const double g_shift = g_of_a(model, shifted.a) - g_of_a(model, model.a);
    for (int n = 0; n + 1 <= model.n_max; ++n) {
        const double e_minus = energy(model, n + 1);
        // H+(a) = H-(a + hbar) + g(a + hbar) - g(a)
        const double e_plus = (g_of_a(shifted, shifted.a + n * shifted.hbar) -
                               g_of_a(shifted, shifted.a)) +
                              g_shift;
        pairs.emplace_back(e_minus, e_plus);
    }
    return pairs;
}

}  // namespace swkb

#include <cmath>
#include <numbers>
#include <set>

#include "swkb/superpotential.hpp"

namespace swkb {

namespace {

double merged(const ConstantMap& overrides, const std::string& key, double fallback) {
    const auto it = overrides.find(key);
    return it == overrides.end() ? fallback : it->second;
}

void check_keys(const std::string& name, const ConstantMap& overrides,
                const std::set<std::string>& allowed) {
    for (const auto& [key, value] : overrides) {
        (void)value;
        if (!allowed.count(key))
            throw UnknownParameter(name + ": '" + key + "' is not an adjustable parameter");
    }
}

void require(bool ok, const std::string& message) {
    if (!ok) throw ValidityError(message);
}

// Class IA:  W = (omega/2) x,  f2' = -epsilon with epsilon = -omega/2
SuperpotentialSpec make_harmonic(const ConstantMap& ov) {
    check_keys("harmonic", ov, {"omega", "a", "hbar"});
    const double omega = merged(ov, "omega", 2.0);
    require(omega > 0, "harmonic: omega must be positive");
    SuperpotentialSpec s;
    s.name = "harmonic";
    s.si_class = SIClass::IA;
    s.a = merged(ov, "a", 1.0);
    s.hbar = merged(ov, "hbar", 1.0);
    require(s.hbar > 0, "harmonic: hbar must be positive");
    s.constants = {{"omega", omega}, {"epsilon", -0.5 * omega}};
    s.domain = DomainInterval::real_line();
    s.f2 = [omega](double x) { return 0.5 * omega * x; };
    s.f2_prime = [omega](double) { return 0.5 * omega; };
    return s;
}

// Class IB:  W = -exp(alpha x) + alpha a,  alpha f2 - f2' = 0
SuperpotentialSpec make_morse(const ConstantMap& ov) {
    check_keys("morse", ov, {"alpha", "a", "hbar"});
    const double alpha = merged(ov, "alpha", -1.0);
    const double a = merged(ov, "a", -3.0);
    require(alpha < 0, "morse: alpha must be negative");
    require(a < 0, "morse: a must be negative (bound states need a + n*hbar < 0)");
    SuperpotentialSpec s;
    s.name = "morse";
    s.si_class = SIClass::IB;
    s.a = a;
    s.hbar = merged(ov, "hbar", 1.0);
    require(s.hbar > 0, "morse: hbar must be positive");
    s.constants = {{"alpha", alpha}, {"epsilon", 0.0}};
    s.domain = DomainInterval::real_line();
    s.f2 = [alpha](double x) { return -std::exp(alpha * x); };
    s.f2_prime = [alpha](double x) { return -alpha * std::exp(alpha * x); };
    s.u_alpha = alpha;
    return s;
}

// Class IIA: W = -a/x + B/a,  f1^2 - f1' = 0
SuperpotentialSpec make_coulomb(const ConstantMap& ov) {
    check_keys("coulomb", ov, {"B", "a", "hbar"});
    const double B = merged(ov, "B", 1.0);
    const double a = merged(ov, "a", 1.0);
    require(a > 0, "coulomb: a must be positive");
    require(B > 0, "coulomb: B must be positive");
    SuperpotentialSpec s;
    s.name = "coulomb";
    s.si_class = SIClass::IIA;
    s.a = a;
    s.hbar = merged(ov, "hbar", 1.0);
    require(s.hbar > 0, "coulomb: hbar must be positive");
    s.constants = {{"B", B}, {"lambda", 0.0}};
    s.domain = DomainInterval::open(0.0, std::numeric_limits<double>::infinity());
    s.f1 = [](double x) { return -1.0 / x; };
    s.f1_prime = [](double x) { return 1.0 / (x * x); };
    s.u_B = B;
    return s;
}

// Class IIB: W = -a coth(x) + B/a,  f1^2 - f1' = 1
SuperpotentialSpec make_eckart_like(const ConstantMap& ov) {
    check_keys("eckart_like", ov, {"B", "a", "hbar"});
    const double B = merged(ov, "B", 20.0);
    const double a = merged(ov, "a", 1.0);
    const double lambda = 1.0;
    require(a > 0, "eckart_like: a must be positive (branch a>0, B^2 > lambda a^4)");
    require(B > 0, "eckart_like: B must be positive");
    require(B * B > lambda * a * a * a * a,
            "eckart_like: validity requires B^2 > lambda * a^4");
    SuperpotentialSpec s;
    s.name = "eckart_like";
    s.si_class = SIClass::IIB;
    s.a = a;
    s.hbar = merged(ov, "hbar", 1.0);
    require(s.hbar > 0, "eckart_like: hbar must be positive");
    s.constants = {{"B", B}, {"lambda", lambda}};
    s.domain = DomainInterval::open(0.0, std::numeric_limits<double>::infinity());
    s.f1 = [](double x) { return -1.0 / std::tanh(x); };
    s.f1_prime = [](double x) {
        const double sh = std::sinh(x);
        return 1.0 / (sh * sh);
    };
    s.u_B = B;
    return s;
}

// Class IIIa: W = -a/x + (omega/2) x,  f2 = (epsilon/2)/f1 with epsilon = -omega
SuperpotentialSpec make_radial_oscillator(const ConstantMap& ov) {
    check_keys("radial_oscillator", ov, {"omega", "a", "hbar"});
    const double omega = merged(ov, "omega", 1.0);
    const double a = merged(ov, "a", 1.0);
    require(omega > 0, "radial_oscillator: omega must be positive");
    require(a > 0, "radial_oscillator: a must be positive");
    SuperpotentialSpec s;
    s.name = "radial_oscillator";
    s.si_class = SIClass::IIIa;
    s.a = a;
    s.hbar = merged(ov, "hbar", 1.0);
    require(s.hbar > 0, "radial_oscillator: hbar must be positive");
    s.constants = {{"omega", omega}, {"epsilon", -omega}, {"lambda", 0.0}};
    s.domain = DomainInterval::open(0.0, std::numeric_limits<double>::infinity());
    s.f1 = [](double x) { return -1.0 / x; };
    s.f1_prime = [](double x) { return 1.0 / (x * x); };
    s.f2 = [omega](double x) { return 0.5 * omega * x; };
    s.f2_prime = [omega](double) { return 0.5 * omega; };
    return s;
}

// Class IIIb: W = a tan(x) + beta sec(x),  f1^2 - f1' = -1
SuperpotentialSpec make_scarf_I(const ConstantMap& ov) {
    check_keys("scarf_I", ov, {"beta", "a", "hbar"});
    const double beta = merged(ov, "beta", 0.5);
    const double a = merged(ov, "a", 1.0);
    require(a > 0, "scarf_I: a must be positive (lambda*(a + n*hbar) < 0)");
    require(std::abs(beta) < a, "scarf_I: |beta| < a required for a zero of W");
    SuperpotentialSpec s;
    s.name = "scarf_I";
    s.si_class = SIClass::IIIb;
    s.a = a;
    s.hbar = merged(ov, "hbar", 1.0);
    require(s.hbar > 0, "scarf_I: hbar must be positive");
    s.constants = {{"beta", beta}, {"lambda", -1.0}, {"epsilon", 0.0}};
    s.domain = DomainInterval::open(-0.5 * std::numbers::pi, 0.5 * std::numbers::pi);
    s.f1 = [](double x) { return std::tan(x); };
    s.f1_prime = [](double x) {
        const double c = std::cos(x);
        return 1.0 / (c * c);
    };
    s.f2 = [beta](double x) { return beta / std::cos(x); };
    s.f2_prime = [beta](double x) { return beta * std::tan(x) / std::cos(x); };
    return s;
}

// Negative control: W = x + A*hbar*x/(1+x^2). The explicit hbar-dependence
// breaks the premises of the exactness theorem; A = 0 recovers "harmonic".
SuperpotentialSpec make_perturbed_harmonic(const ConstantMap& ov) {
    check_keys("perturbed_harmonic", ov, {"perturbation_amplitude", "a", "hbar"});
    const double amp = merged(ov, "perturbation_amplitude", 0.1);
    SuperpotentialSpec s;
    s.name = "perturbed_harmonic";
    s.si_class = SIClass::NonConventional;
    s.a = merged(ov, "a", 1.0);
    s.hbar = merged(ov, "hbar", 1.0);
    require(s.hbar > 0, "perturbed_harmonic: hbar must be positive");
    s.constants = {{"omega", 2.0}, {"epsilon", -1.0}};
    s.domain = DomainInterval::real_line();
    s.perturbation_amplitude = amp;
    const double ah = amp * s.hbar;
    s.f2 = [ah](double x) { return x + ah * x / (1.0 + x * x); };
    s.f2_prime = [ah](double x) {
        const double d = 1.0 + x * x;
        return 1.0 + ah * (1.0 - x * x) / (d * d);
    };
    ConstantMap frozen = ov;
    s.rebuild_with_hbar = [frozen](double hb) {
        ConstantMap next = frozen;
        next["hbar"] = hb;
        return make_perturbed_harmonic(next);
    };
    return s;
}

const std::vector<std::string> kNames = {
    "harmonic",       "morse",   "coulomb",           "eckart_like",
    "radial_oscillator", "scarf_I", "perturbed_harmonic"};

}  // namespace

std::vector<std::string> catalog_names() { return kNames; }

SuperpotentialSpec catalog_entry(const std::string& name, const ConstantMap& overrides) {
    if (name == "harmonic") return make_harmonic(overrides);
    if (name == "morse") return make_morse(overrides);
    if (name == "coulomb") return make_coulomb(overrides);
    if (name == "eckart_like") return make_eckart_like(overrides);
    if (name == "radial_oscillator") return make_radial_oscillator(overrides);
    if (name == "scarf_I") return make_scarf_I(overrides);
    if (name == "perturbed_harmonic") return make_perturbed_harmonic(overrides);
    throw UnknownParameter("no catalog entry named '" + name + "'");
}

std::vector<SuperpotentialSpec> catalog() {
    std::vector<SuperpotentialSpec> out;
    out.reserve(kNames.size());
    for (const auto& n : kNames) out.push_back(catalog_entry(n));
    return out;
}

const ValidityInfo& validity_info(const std::string& name) {
    static const double pi2 = 0.5 * std::numbers::pi;
    static const std::map<std::string, ValidityInfo> table = {
        {"harmonic",
         {-6.0, 6.0, 0.5, 3.0, -12.0, 12.0, 2000, 12, {"omega > 0", "hbar > 0"}}},
        {"morse",
         {-2.0, 8.0, -4.0, -2.2, -6.0, 25.0, 2000, 2,
          {"alpha < 0", "a < 0", "a + n*hbar < 0"}}},
        {"coulomb",
         {0.1, 20.0, 0.5, 2.5, 1e-12, 90.0, 4000, 12, {"a > 0", "B > 0"}}},
        {"eckart_like",
         {0.05, 8.0, 0.8, 2.5, 1e-12, 25.0, 4000, 3,
          {"a > 0", "B > 0", "B^2 > lambda*a^4", "bound states: B > sqrt(lambda)*(a + n*hbar)^2"}}},
        {"radial_oscillator",
         {0.1, 12.0, 0.5, 2.5, 1e-12, 14.0, 2000, 12, {"a > 0", "omega > 0"}}},
        {"scarf_I",
         {-1.35, 1.35, 0.6, 2.0, -pi2 + 1e-6, pi2 - 1e-6, 4000, 12,
          {"a > 0", "|beta| < a", "lambda*(a + n*hbar) < 0"}}},
        {"perturbed_harmonic",
         {-6.0, 6.0, 0.5, 3.0, -12.0, 12.0, 2000, 12, {"hbar > 0"}}},
    };
    const auto it = table.find(name);
    if (it == table.end()) throw UnknownParameter("no validity info for '" + name + "'");
    return it->second;
}

}  // namespace swkb

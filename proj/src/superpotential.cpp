#include "swkb/superpotential.hpp"

#include <cmath>

#include "swkb/quadrature.hpp"
#include "swkb/rootfind.hpp"

namespace swkb {

double SuperpotentialSpec::u(double a_eff) const {
    if (u_B != 0.0 && a_eff == 0.0)
        throw ValidityError(name + ": u(a) = B/a requires a != 0");
    double v = u_alpha * a_eff;
    if (u_B != 0.0) v += u_B / a_eff;
    return v;
}

double SuperpotentialSpec::du_da(double a_eff) const {
    if (u_B != 0.0 && a_eff == 0.0)
        throw ValidityError(name + ": du/da requires a != 0");
    double v = u_alpha;
    if (u_B != 0.0) v -= u_B / (a_eff * a_eff);
    return v;
}

double SuperpotentialSpec::d2u_da2(double a_eff) const {
    if (u_B == 0.0) return 0.0;
    if (a_eff == 0.0) throw ValidityError(name + ": d2u/da2 requires a != 0");
    return 2.0 * u_B / (a_eff * a_eff * a_eff);
}

double SuperpotentialSpec::constant(const std::string& key) const {
    const auto it = constants.find(key);
    if (it == constants.end())
        throw UnknownParameter(name + ": constant '" + key + "' is not defined for this entry");
    return it->second;
}

SuperpotentialSpec SuperpotentialSpec::with_hbar(double new_hbar) const {
    if (new_hbar <= 0) throw ValidityError(name + ": hbar must be positive");
    if (rebuild_with_hbar) return rebuild_with_hbar(new_hbar);
    SuperpotentialSpec copy = *this;
    copy.hbar = new_hbar;
    return copy;
}

double eval_W(const SuperpotentialSpec& spec, double x) { return eval_W(spec, x, spec.a); }

double eval_W(const SuperpotentialSpec& spec, double x, double a_eff) {
    spec.domain.require_interior(x);
    if (spec.general_W) return spec.general_W(x, a_eff);
    double w = spec.u(a_eff);
    if (spec.f1) w += a_eff * spec.f1(x);
    if (spec.f2) w += spec.f2(x);
    return w;
}

double eval_W_prime(const SuperpotentialSpec& spec, double x) {
    return eval_W_prime(spec, x, spec.a);
}

double eval_W_prime(const SuperpotentialSpec& spec, double x, double a_eff) {
    spec.domain.require_interior(x);
    if (spec.general_dW_dx) return spec.general_dW_dx(x, a_eff);
    double wp = 0;
    if (spec.f1_prime) wp += a_eff * spec.f1_prime(x);
    if (spec.f2_prime) wp += spec.f2_prime(x);
    return wp;
}

double eval_V(const SuperpotentialSpec& spec, double x, Sign sign) {
    return eval_V(spec, x, sign, spec.a);
}

double eval_V(const SuperpotentialSpec& spec, double x, Sign sign, double a_eff) {
    const double w = eval_W(spec, x, a_eff);
    const double wp = eval_W_prime(spec, x, a_eff);
    return w * w + (sign == Sign::minus ? -1.0 : 1.0) * spec.hbar * wp;
}

double eval_dW_da(const SuperpotentialSpec& spec, double x, double a_eff) {
    spec.domain.require_interior(x);
    if (spec.general_dW_da) return spec.general_dW_da(x, a_eff);
    double v = spec.du_da(a_eff);
    if (spec.f1) v += spec.f1(x);
    return v;
}

double eval_d2W_da2(const SuperpotentialSpec& spec, double x, double a_eff) {
    spec.domain.require_interior(x);
    if (spec.general_d2W_da2) return spec.general_d2W_da2(x, a_eff);
    return spec.d2u_da2(a_eff);
}

double superpotential_zero(const SuperpotentialSpec& spec) {
    return superpotential_zero(spec, spec.a);
}

double superpotential_zero(const SuperpotentialSpec& spec, double a_eff) {
    const auto f = [&](double x) { return eval_W(spec, x, a_eff); };
    // start from a point well inside the domain
    double start;
    const DomainInterval& d = spec.domain;
    if (std::isfinite(d.left) && std::isfinite(d.right)) {
        start = 0.5 * (d.left + d.right);
    } else if (std::isfinite(d.left)) {
        start = d.left + 1.0;
    } else if (std::isfinite(d.right)) {
        start = d.right - 1.0;
    } else {
        start = 0.0;
    }
    const double f_start = f(start);
    if (f_start == 0.0) return start;
    try {
        const Bracket b = (f_start < 0.0) ? expand_bracket(f, start, f_start, d.right)
                                          : expand_bracket(f, start, f_start, d.left);
        return brent_root(f, b.lo, b.hi, b.f_lo, b.f_hi);
    } catch (const BracketError&) {
        throw NoZeroCrossing(spec.name +
                             ": W has no sign change in the domain (broken supersymmetry?)");
    }
}

double ground_state_log_density(const SuperpotentialSpec& spec, double x) {
    spec.domain.require_interior(x);
    const double x_ref = superpotential_zero(spec);
    if (x == x_ref) return 0.0;
    const auto w = [&](double y) { return eval_W(spec, y); };
    return -adaptive_simpson(w, x_ref, x) / spec.hbar;
}

SuperpotentialSpec mirrored(const SuperpotentialSpec& spec) {
    SuperpotentialSpec m = spec;
    m.name = spec.name + "_mirrored";
    m.domain.left = -spec.domain.right;
    m.domain.right = -spec.domain.left;
    m.domain.left_open = spec.domain.right_open;
    m.domain.right_open = spec.domain.left_open;
    m.u_alpha = -spec.u_alpha;
    m.u_B = -spec.u_B;
    if (auto c = m.constants.find("alpha"); c != m.constants.end()) c->second = -c->second;
    if (auto c = m.constants.find("B"); c != m.constants.end()) c->second = -c->second;
    if (auto c = m.constants.find("beta"); c != m.constants.end()) c->second = -c->second;
    if (spec.f1) {
        auto base = spec.f1;
        m.f1 = [base](double x) { return -base(-x); };
    }
    if (spec.f1_prime) {
        auto base = spec.f1_prime;
        m.f1_prime = [base](double x) { return base(-x); };
    }
    if (spec.f2) {
        auto base = spec.f2;
        m.f2 = [base](double x) { return -base(-x); };
    }
    if (spec.f2_prime) {
        auto base = spec.f2_prime;
        m.f2_prime = [base](double x) { return base(-x); };
    }
    if (spec.general_W) {
        auto base = spec.general_W;
        m.general_W = [base](double x, double a) { return -base(-x, a); };
    }
    if (spec.general_dW_dx) {
        auto base = spec.general_dW_dx;
        m.general_dW_dx = [base](double x, double a) { return base(-x, a); };
    }
    if (spec.general_dW_da) {
        auto base = spec.general_dW_da;
        m.general_dW_da = [base](double x, double a) { return -base(-x, a); };
    }
    if (spec.general_d2W_da2) {
        auto base = spec.general_d2W_da2;
        m.general_d2W_da2 = [base](double x, double a) { return -base(-x, a); };
    }
    m.rebuild_with_hbar = nullptr;
    if (spec.rebuild_with_hbar) {
        auto base = spec.rebuild_with_hbar;
        m.rebuild_with_hbar = [base](double hb) { return mirrored(base(hb)); };
    }
    return m;
}

}  // namespace swkb

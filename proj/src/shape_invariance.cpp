#include "swkb/shape_invariance.hpp"

#include <algorithm>
#include <cmath>

namespace swkb {

namespace {

class ResidualAccumulator {
  public:
    void add(double x, double a, double r) {
        const double mag = std::abs(r);
        if (mag > report_.max_abs_residual) {
            report_.max_abs_residual = mag;
            report_.worst_x = x;
            report_.worst_a = a;
        }
        sum_sq_ += r * r;
        ++report_.sample_count;
    }

    ResidualReport finish() {
        if (report_.sample_count > 0)
            report_.rms_residual = std::sqrt(sum_sq_ / static_cast<double>(report_.sample_count));
        return report_;
    }

  private:
    ResidualReport report_;
    double sum_sq_ = 0;
};

struct SampleStats {
    double min = 0, max = 0, mean = 0;
    bool constant(double tol_scale = 1e-8) const {
        return (max - min) <= tol_scale * (1.0 + std::abs(mean));
    }
};

SampleStats stats_of(const std::vector<double>& values) {
    SampleStats s;
    s.min = *std::min_element(values.begin(), values.end());
    s.max = *std::max_element(values.begin(), values.end());
    double sum = 0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    return s;
}

}  // namespace

std::vector<GridPoint> standard_grid(const SuperpotentialSpec& spec, int nx, int na) {
    const ValidityInfo& info = validity_info(spec.name);
    std::vector<GridPoint> grid;
    grid.reserve(static_cast<size_t>(nx) * na);
    for (int i = 0; i < nx; ++i) {
        const double x = nx == 1 ? info.grid_x_lo
                                 : info.grid_x_lo + (info.grid_x_hi - info.grid_x_lo) * i / (nx - 1);
        for (int j = 0; j < na; ++j) {
            const double a = na == 1 ? info.grid_a_lo
                                     : info.grid_a_lo + (info.grid_a_hi - info.grid_a_lo) * j / (na - 1);
            grid.emplace_back(x, a);
        }
    }
    return grid;
}

ResidualReport residual_sic(const SuperpotentialSpec& spec, std::span<const GridPoint> grid) {
    const SpectrumModel model = make_spectrum_model(spec);
    const double hb = spec.hbar;
    ResidualAccumulator acc;
    for (const auto& [x, a] : grid) {
        const double a_next = a + hb;
        const double w0 = eval_W(spec, x, a);
        const double w1 = eval_W(spec, x, a_next);
        const double lhs = w0 * w0 + hb * eval_W_prime(spec, x, a) + g_of_a(model, a);
        const double rhs = w1 * w1 - hb * eval_W_prime(spec, x, a_next) + g_of_a(model, a_next);
        acc.add(x, a, lhs - rhs);
    }
    return acc.finish();
}

ResidualReport residual_pde1(const SuperpotentialSpec& spec, std::span<const GridPoint> grid) {
    const SpectrumModel model = make_spectrum_model(spec);
    ResidualAccumulator acc;
    for (const auto& [x, a] : grid) {
        const double w = eval_W(spec, x, a);
        const double dw_da = eval_dW_da(spec, x, a);
        const double dw_dx = eval_W_prime(spec, x, a);
        const double dg_da = [&] {
            switch (model.si_class) {
                case SIClass::IA:
                case SIClass::NonConventional:
                    return model.constants.at("omega");
                case SIClass::IB: {
                    const double alpha = model.constants.at("alpha");
                    return -2.0 * alpha * alpha * a;
                }
                case SIClass::IIA:
                case SIClass::IIB: {
                    const double B = model.constants.at("B");
                    const double lambda = model.constants.at("lambda");
                    return 2.0 * B * B / (a * a * a) - 2.0 * lambda * a;
                }
                case SIClass::IIIa:
                    return -2.0 * model.constants.at("epsilon");
                case SIClass::IIIb:
                    return -2.0 * model.constants.at("lambda") * a;
            }
            throw Error("unreachable");
        }();
        acc.add(x, a, w * dw_da - dw_dx + 0.5 * dg_da);
    }
    return acc.finish();
}

ResidualReport residual_pde2(const SuperpotentialSpec& spec, std::span<const GridPoint> grid) {
    ResidualAccumulator acc;
    for (const auto& [x, a] : grid) {
        const double h = 1e-5 * (1.0 + std::abs(x));
        double lo = x - h, hi = x + h;
        if (!spec.domain.is_interior(lo)) lo = x;
        if (!spec.domain.is_interior(hi)) hi = x;
        const double mixed = (lo == hi) ? 0.0
                                        : (eval_d2W_da2(spec, hi, a) - eval_d2W_da2(spec, lo, a)) /
                                              (hi - lo);
        acc.add(x, a, mixed);
    }
    return acc.finish();
}

namespace {

std::vector<double> sample_points(double lo, double hi, int count) {
    std::vector<double> xs(count);
    for (int i = 0; i < count; ++i) xs[i] = lo + (hi - lo) * (i + 0.5) / count;
    return xs;
}

}  // namespace

std::pair<SIClass, ConstantMap> classify(const SuperpotentialSpec& spec, int samples) {
    double lo, hi;
    try {
        const ValidityInfo& info = validity_info(spec.name);
        lo = info.grid_x_lo;
        hi = info.grid_x_hi;
    } catch (const UnknownParameter&) {
        const DomainInterval& d = spec.domain;
        lo = std::isfinite(d.left) ? d.left + 1e-3 * (1.0 + std::abs(d.left)) : -6.0;
        hi = std::isfinite(d.right) ? d.right - 1e-3 * (1.0 + std::abs(d.right)) : 6.0;
        if (std::isfinite(d.left) && !std::isfinite(d.right)) hi = lo + 12.0;
        if (!std::isfinite(d.left) && std::isfinite(d.right)) lo = hi - 12.0;
    }
    return classify(spec, lo, hi, samples);
}

std::pair<SIClass, ConstantMap> classify(const SuperpotentialSpec& spec, double x_lo, double x_hi,
                                         int samples) {
    if (samples < 50) samples = 50;
    if (spec.general_W)
        return {SIClass::NonConventional, {}};  // no decomposition exposed
    const std::vector<double> xs = sample_points(x_lo, x_hi, samples);
    constexpr double kTol = 1e-8;

    const auto f1_at = [&](double x) { return spec.f1 ? spec.f1(x) : 0.0; };
    const auto f1p_at = [&](double x) { return spec.f1_prime ? spec.f1_prime(x) : 0.0; };
    const auto f2_at = [&](double x) { return spec.f2 ? spec.f2(x) : 0.0; };
    const auto f2p_at = [&](double x) { return spec.f2_prime ? spec.f2_prime(x) : 0.0; };

    std::vector<double> f1v, f2v;
    f1v.reserve(xs.size());
    f2v.reserve(xs.size());
    for (double x : xs) {
        f1v.push_back(f1_at(x));
        f2v.push_back(f2_at(x));
    }
    const bool f1_const = stats_of(f1v).constant(kTol);
    const bool f2_const = stats_of(f2v).constant(kTol);

    if (f1_const) {
        // Class I candidates: W = f2(x) + alpha a (after regrouping the
        // constant f1 into u). A B/a term cannot be regrouped away.
        if (spec.u_B != 0.0) return {SIClass::NonConventional, {}};
        if (f2_const) return {SIClass::NonConventional, {}};  // no x-dependence
        const double alpha = spec.u_alpha;
        if (std::abs(alpha) <= kTol) {
            std::vector<double> d;
            for (double x : xs) d.push_back(f2p_at(x));
            const SampleStats st = stats_of(d);
            if (!st.constant(kTol)) return {SIClass::NonConventional, {}};
            const double epsilon = -st.mean;
            return {SIClass::IA, {{"epsilon", epsilon}, {"omega", -2.0 * epsilon}}};
        }
        std::vector<double> d;
        for (double x : xs) d.push_back(alpha * f2_at(x) - f2p_at(x));
        const SampleStats st = stats_of(d);
        if (!st.constant(kTol)) return {SIClass::NonConventional, {}};
        return {SIClass::IB, {{"alpha", alpha}, {"epsilon", st.mean}}};
    }

    // f1 has x-dependence: Class II or III. All of them need f1^2 - f1'
    // constant.
    std::vector<double> c1;
    for (double x : xs) c1.push_back(f1_at(x) * f1_at(x) - f1p_at(x));
    const SampleStats st1 = stats_of(c1);
    if (!st1.constant(kTol)) return {SIClass::NonConventional, {}};
    const double lambda = st1.constant(kTol) ? st1.mean : 0.0;
    const bool lambda_zero = std::abs(lambda) <= kTol * (1.0 + std::abs(lambda));

    if (f2_const) {
        // Class II: W = a f1 + B/a, in the regrouped form (no alpha*a term).
        if (std::abs(spec.u_alpha) > kTol) return {SIClass::NonConventional, {}};
        const ConstantMap out = {{"lambda", lambda_zero ? 0.0 : lambda}, {"B", spec.u_B}};
        return {lambda_zero ? SIClass::IIA : SIClass::IIB, out};
    }

    // Class III: W = a f1 + f2 with u == 0 in the regrouped form.
    if (std::abs(spec.u_alpha) > kTol || spec.u_B != 0.0) return {SIClass::NonConventional, {}};
    std::vector<double> c2;
    for (double x : xs) c2.push_back(f1_at(x) * f2_at(x) - f2p_at(x));
    const SampleStats st2 = stats_of(c2);
    if (!st2.constant(kTol)) return {SIClass::NonConventional, {}};
    const double epsilon = st2.mean;

    if (lambda_zero) return {SIClass::IIIa, {{"lambda", 0.0}, {"epsilon", epsilon}}};

    // IIIb: fit beta from f2 = beta * sqrt(f1^2 - lambda)
    std::vector<double> betas;
    for (double x : xs) {
        const double root = std::sqrt(f1_at(x) * f1_at(x) - lambda);
        if (root == 0.0) continue;
        betas.push_back(f2_at(x) / root);
    }
    if (betas.empty()) return {SIClass::NonConventional, {}};
    const SampleStats stb = stats_of(betas);
    if (!stb.constant(kTol)) return {SIClass::NonConventional, {}};
    return {SIClass::IIIb, {{"lambda", lambda}, {"beta", stb.mean}, {"epsilon", epsilon}}};
}

}  // namespace swkb

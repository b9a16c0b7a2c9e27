#include "swkb/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "swkb/errors.hpp"

namespace swkb {

namespace {

// Newton iteration on Legendre polynomials; nodes are symmetric so only half
// are computed.
GaussLegendreRule compute_gl(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 1; i <= m; ++i) {
        double z = std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5));
        double pp = 0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15) break;
        }
        rule.nodes[i - 1] = -z;
        rule.nodes[n - i] = z;
        rule.weights[i - 1] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[n - i] = rule.weights[i - 1];
    }
    return rule;
}

std::mutex gl_cache_mutex;
std::map<int, GaussLegendreRule> gl_cache;

}  // namespace

const GaussLegendreRule& gauss_legendre(int order) {
    if (order < 1) throw Error("gauss_legendre: order must be positive");
    std::lock_guard<std::mutex> lock(gl_cache_mutex);
    auto it = gl_cache.find(order);
    if (it == gl_cache.end()) it = gl_cache.emplace(order, compute_gl(order)).first;
    return it->second;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b, int order) {
    const GaussLegendreRule& rule = gauss_legendre(order);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0;
    for (int i = 0; i < order; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

QuadResult gl_doubling(const std::function<double(double)>& f, double a, double b, int base_order,
                       int max_doublings, double rel_tol, double scale) {
    QuadResult res;
    int order = base_order;
    double prev = gl_integrate(f, a, b, order);
    for (int k = 1; k <= max_doublings; ++k) {
        order *= 2;
        const double cur = gl_integrate(f, a, b, order);
        res.value = cur;
        res.est_error = std::abs(cur - prev);
        res.refinements = k;
        if (res.est_error <= rel_tol * std::max(std::abs(cur), scale)) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    res.value = prev;
    res.converged = false;
    return res;
}

namespace {

// One tanh-sinh abscissa: for t, the node is m + r*tanh(u) with
// u = (pi/2) sinh(t). Endpoint distances use 1 -+ tanh(u) evaluated as
// 2/(exp(+-2u) + 1), which stays accurate down to denormals.
struct TsNode {
    double x;
    double d_left;
    double d_right;
    double weight;
};

inline TsNode ts_node(double t, double m, double r) {
    const double u = 0.5 * std::numbers::pi * std::sinh(t);
    const double sech = 1.0 / std::cosh(u);  // underflows to 0 for large u
    TsNode n;
    const double one_minus = 2.0 / (std::exp(2.0 * u) + 1.0);   // 1 - tanh(u)
    const double one_plus = 2.0 / (std::exp(-2.0 * u) + 1.0);   // 1 + tanh(u)
    n.d_left = r * one_plus;
    n.d_right = r * one_minus;
    n.x = std::tanh(u) >= 0 ? (m + r) - n.d_right : (m - r) + n.d_left;
    n.weight = r * 0.5 * std::numbers::pi * std::cosh(t) * sech * sech;
    return n;
}

}  // namespace

QuadResult tanh_sinh(const EndpointAwareFn& f, double a, double b, double rel_tol, int max_levels,
                     double scale) {
    QuadResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }
    const double m = 0.5 * (a + b);
    const double r = 0.5 * (b - a);
    const double t_max = 6.1;

    const auto eval_at = [&](double t) -> double {
        const TsNode n = ts_node(t, m, r);
        if (n.weight == 0.0 || n.d_left <= 0.0 || n.d_right <= 0.0) return 0.0;
        return n.weight * f(n.x, n.d_left, n.d_right);
    };

    double h = 0.5;
    double sum = eval_at(0.0);
    for (int k = 1; k * h <= t_max; ++k) {
        sum += eval_at(k * h) + eval_at(-k * h);
    }
    double integral = h * sum;

    for (int level = 1; level <= max_levels; ++level) {
        h *= 0.5;
        double odd = 0;
        for (int k = 1; k * h <= t_max; k += 2) {
            odd += eval_at(k * h) + eval_at(-k * h);
        }
        const double refined = 0.5 * integral + h * odd;
        res.est_error = std::abs(refined - integral);
        res.refinements = level;
        integral = refined;
        if (level >= 2 && res.est_error <= rel_tol * std::max(std::abs(integral), scale)) {
            res.value = integral;
            res.converged = true;
            return res;
        }
    }
    res.value = integral;
    res.converged = false;
    return res;
}

namespace {

double simpson_rec(const std::function<double(double)>& f, double a, double fa, double b, double fb,
                   double m, double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double rel_tol,
                        int max_depth) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double tol = rel_tol * std::max(1.0, std::abs(whole));
    return simpson_rec(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

}  // namespace swkb

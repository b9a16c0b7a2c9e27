#pragma once

#include <functional>
#include <vector>

namespace swkb {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Returns the cached rule of the given order (computed once, thread-safe).
const GaussLegendreRule& gauss_legendre(int order);

/// Fixed-order Gauss-Legendre integral of f over [a, b].
double gl_integrate(const std::function<double(double)>& f, double a, double b, int order);

struct QuadResult {
    double value = 0;
    double est_error = 0;
    int refinements = 0;
    bool converged = false;
};

/// Gauss-Legendre with node-count doubling: order, 2*order, ... until two
/// successive estimates agree to rel_tol * max(|I|, scale).
QuadResult gl_doubling(const std::function<double(double)>& f, double a, double b, int base_order,
                       int max_doublings, double rel_tol, double scale);

/// Integrand for tanh-sinh rules: f(x, d_left, d_right) where d_left/d_right
/// are the exact distances to the interval endpoints, computed without
/// cancellation. Integrands with endpoint singularities must use the
/// distances instead of reconstructing them from x.
using EndpointAwareFn = std::function<double(double x, double d_left, double d_right)>;

/// Tanh-sinh (double exponential) quadrature over (a, b). Handles integrable
/// endpoint singularities such as |x - a|^(-1/2). Level spacing starts at
/// h = 0.5 and halves up to max_levels times.
QuadResult tanh_sinh(const EndpointAwareFn& f, double a, double b, double rel_tol, int max_levels,
                     double scale);

/// Adaptive Simpson quadrature for smooth integrands (used for the
/// ground-state log-density integral).
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-12, int max_depth = 48);

}  // namespace swkb

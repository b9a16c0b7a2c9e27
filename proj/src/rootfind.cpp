#include "swkb/rootfind.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "swkb/errors.hpp"

namespace swkb {

Bracket expand_bracket(const std::function<double(double)>& f, double start, double f_start,
                       double limit, double initial_step, int max_steps) {
    const bool rightward = limit > start;
    const bool finite = std::isfinite(limit);
    double prev = start, f_prev = f_start;
    double step = initial_step;
    for (int k = 0; k < max_steps; ++k) {
        double x;
        if (finite) {
            x = limit - 0.5 * (limit - prev);  // halve the remaining gap
            if (x == prev || std::abs(limit - x) < 1e-13 * (1.0 + std::abs(limit))) break;
        } else {
            x = rightward ? prev + step : prev - step;
            step *= 2.0;
            if (std::abs(x) > 1e12) break;
        }
        const double fx = f(x);
        if (std::isnan(fx)) break;
        if ((f_prev <= 0 && fx >= 0) || (f_prev >= 0 && fx <= 0)) {
            Bracket b;
            b.lo = rightward ? prev : x;
            b.hi = rightward ? x : prev;
            b.f_lo = rightward ? f_prev : fx;
            b.f_hi = rightward ? fx : f_prev;
            return b;
        }
        prev = x;
        f_prev = fx;
    }
    throw BracketError("no sign change between " + std::to_string(start) + " and the domain endpoint " +
                       std::to_string(limit));
}

double brent_root(const std::function<double(double)>& f, double lo, double hi, double f_lo,
                  double f_hi, double f_tol, int max_iter) {
    double a = lo, b = hi, fa = f_lo, fb = f_hi;
    if (fa == 0) return a;
    if (fb == 0) return b;
    if ((fa > 0) == (fb > 0)) throw BracketError("brent_root: endpoints do not bracket a root");

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < max_iter; ++iter) {
        if ((fb > 0) == (fc > 0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double eps = std::numeric_limits<double>::epsilon();
        const double tol1 = 2.0 * eps * std::abs(b) + 0.5e-15;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0 || std::abs(fb) <= f_tol) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // secant / inverse quadratic step
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
        fb = f(b);
    }
    return b;
}

}  // namespace swkb

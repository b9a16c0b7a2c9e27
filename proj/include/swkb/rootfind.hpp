#pragma once

#include <functional>

#include "swkb/errors.hpp"

namespace swkb {

/// A sign-change bracket [lo, hi] with the function values at both ends.
struct Bracket {
    double lo = 0, hi = 0;
    double f_lo = 0, f_hi = 0;
};

/// Expand a bracket from `start` toward `limit` (may be +/-inf) until f
/// changes sign. Toward an infinite limit the step doubles from
/// `initial_step`; toward a finite limit the remaining gap is halved, so the
/// probe approaches the endpoint geometrically without touching it.
/// Throws BracketError when no sign change is found.
Bracket expand_bracket(const std::function<double(double)>& f, double start, double f_start,
                       double limit, double initial_step = 0.1, int max_steps = 200);

/// Brent's method (bisection / secant / inverse quadratic hybrid) on a
/// bracketing interval. Iterates to machine x-resolution; `f_tol` is an
/// additional early-exit residual threshold.
double brent_root(const std::function<double(double)>& f, double lo, double hi, double f_lo,
                  double f_hi, double f_tol = 0.0, int max_iter = 200);

}  // namespace swkb

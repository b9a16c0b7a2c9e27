#include "swkb/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "swkb/spectrum.hpp"

namespace swkb {

namespace {

// number of eigenvalues of tridiag(d, e) strictly below x, via the Sturm
// sequence of the LDL^T pivots
int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x,
                double pivmin) {
    int count = 0;
    double q = 1.0;
    const size_t n = d.size();
    for (size_t i = 0; i < n; ++i) {
        q = (i == 0) ? d[0] - x : d[i] - x - e[i - 1] * e[i - 1] / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0) ++count;
    }
    return count;
}

}  // namespace

std::vector<double> tridiagonal_lowest_eigenvalues(const std::vector<double>& d,
                                                   const std::vector<double>& e, int count) {
    const size_t n = d.size();
    if (n == 0 || e.size() + 1 != n) throw Error("tridiagonal solver: bad matrix dimensions");
    if (count < 1 || static_cast<size_t>(count) > n)
        throw ValidityError("tridiagonal solver: eigenvalue count out of range");

    double lo = d[0], hi = d[0];
    double emax = 0;
    for (size_t i = 0; i < n; ++i) {
        const double off = (i > 0 ? std::abs(e[i - 1]) : 0.0) + (i + 1 < n ? std::abs(e[i]) : 0.0);
        lo = std::min(lo, d[i] - off);
        hi = std::max(hi, d[i] + off);
        if (i + 1 < n) emax = std::max(emax, std::abs(e[i]));
    }
    const double pivmin = std::max(std::numeric_limits<double>::min() * (1.0 + emax * emax),
                                   std::numeric_limits<double>::min());

    std::vector<double> out(count);
    double lower = lo;
    for (int k = 0; k < count; ++k) {
        double a = lower, b = hi;
        for (int iter = 0; iter < 120; ++iter) {
            const double mid = 0.5 * (a + b);
            if (mid == a || mid == b) break;
            if (sturm_count(d, e, mid, pivmin) < k + 1)
                a = mid;
            else
                b = mid;
            if (b - a <= 1e-14 * std::max(1.0, std::abs(a) + std::abs(b))) break;
        }
        out[k] = 0.5 * (a + b);
        lower = a;  // eigenvalues are sought in ascending order
    }
    return out;
}

namespace {

struct GridSolve {
    std::vector<double> eigenvalues;
    std::vector<double> diag;     // kept for the eigenvector pass
    std::vector<double> offdiag;
    double h = 0;
    double x_first = 0;
};

GridSolve solve_on_grid(const SuperpotentialSpec& spec, Sign sign, const DomainInterval& box,
                        int grid_points, int eigen_count) {
    GridSolve g;
    const double h = (box.right - box.left) / (grid_points + 1);
    g.h = h;
    g.x_first = box.left + h;
    const double hb2 = spec.hbar * spec.hbar;
    g.diag.resize(grid_points);
    g.offdiag.assign(grid_points - 1, -hb2 / (h * h));
    for (int i = 0; i < grid_points; ++i) {
        const double x = box.left + (i + 1) * h;
        g.diag[i] = 2.0 * hb2 / (h * h) + eval_V(spec, x, sign);
    }
    g.eigenvalues = tridiagonal_lowest_eigenvalues(g.diag, g.offdiag, eigen_count);
    return g;
}

// inverse iteration for one eigenvector; only used to report edge amplitudes
std::vector<double> eigenvector_of(const GridSolve& g, double lambda) {
    const size_t n = g.diag.size();
    std::vector<double> v(n, 1.0), w(n);
    const double shift = lambda * (1.0 + 1e-10) + 1e-300;
    for (int pass = 0; pass < 3; ++pass) {
        // Thomas solve (T - shift I) w = v with regularized pivots
        std::vector<double> c(n), dd(n);
        double piv = g.diag[0] - shift;
        if (std::abs(piv) < 1e-30) piv = 1e-30;
        c[0] = g.offdiag.empty() ? 0.0 : g.offdiag[0] / piv;
        dd[0] = v[0] / piv;
        for (size_t i = 1; i < n; ++i) {
            piv = g.diag[i] - shift - g.offdiag[i - 1] * c[i - 1];
            if (std::abs(piv) < 1e-30) piv = 1e-30;
            c[i] = (i + 1 < n) ? g.offdiag[i] / piv : 0.0;
            dd[i] = (v[i] - g.offdiag[i - 1] * dd[i - 1]) / piv;
        }
        w[n - 1] = dd[n - 1];
        for (size_t i = n - 1; i-- > 0;) w[i] = dd[i] - c[i] * w[i + 1];
        double norm = 0;
        for (double y : w) norm += y * y;
        norm = std::sqrt(norm);
        for (size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
    }
    return v;
}

std::vector<double> algebraic_reference(const SuperpotentialSpec& spec, Sign sign,
                                        int eigen_count) {
    const SpectrumModel base = make_spectrum_model(spec);
    const int needed = sign == Sign::minus ? eigen_count - 1 : eigen_count;
    SpectrumModel model = base;
    if (model.n_max < needed)
        model = make_spectrum_model(spec, needed);  // may throw ValidityError per level below
    std::vector<double> out(eigen_count);
    for (int k = 0; k < eigen_count; ++k)
        out[k] = sign == Sign::minus ? energy(model, k) : energy(model, k + 1);
    return out;
}

double max_rel_dev(const std::vector<double>& got, const std::vector<double>& want, double hbar) {
    double worst = 0;
    for (size_t i = 0; i < got.size(); ++i)
        worst = std::max(worst, std::abs(got[i] - want[i]) / std::max(std::abs(want[i]), hbar));
    return worst;
}

DomainInterval enlarged_box(const DomainInterval& box, const DomainInterval& domain) {
    DomainInterval wide = box;
    const double width = box.right - box.left;
    if (std::isfinite(domain.left)) {
        wide.left = domain.left + 0.25 * (box.left - domain.left);  // margin / 4
    } else {
        wide.left = box.left - 0.5 * width;
    }
    if (std::isfinite(domain.right)) {
        wide.right = domain.right - 0.25 * (domain.right - box.right);
    } else {
        wide.right = box.right + 0.5 * width;
    }
    return wide;
}

}  // namespace

OracleReport solve_spectrum(const SuperpotentialSpec& spec, Sign sign, OracleConfig config) {
    if (config.eigen_count < 1) throw ValidityError("oracle: eigen_count must be >= 1");
    if (config.grid_points < 500) throw ValidityError("oracle: grid_points must be >= 500");
    if (config.use_default_box) {
        const ValidityInfo& info = validity_info(spec.name);
        config.box = DomainInterval::open(info.box_lo, info.box_hi);
        config.grid_points = std::max(config.grid_points, info.oracle_grid_points);
    }
    if (!(config.box.left < config.box.right) || !std::isfinite(config.box.left) ||
        !std::isfinite(config.box.right))
        throw ValidityError("oracle: box must be a finite interval");
    if (config.box.left < spec.domain.left || config.box.right > spec.domain.right)
        throw ValidityError("oracle: box must lie inside the spec domain");

    OracleReport report;
    report.algebraic = algebraic_reference(spec, sign, config.eigen_count);
    report.box_lo = config.box.left;
    report.box_hi = config.box.right;

    int n_pts = config.grid_points;
    GridSolve coarse = solve_on_grid(spec, sign, config.box, n_pts, config.eigen_count);
    GridSolve fine;
    std::vector<double> rich(config.eigen_count), prev_rich;
    bool converged = false;
    for (int k = 1; k <= config.max_refinements; ++k) {
        n_pts *= 2;
        fine = solve_on_grid(spec, sign, config.box, n_pts, config.eigen_count);
        report.refinements_used = k;
        report.grid_points_used = n_pts;
        // second-order scheme: the reported value is the Richardson
        // extrapolation of the two finest grids; refine until successive
        // reported sets agree
        for (int i = 0; i < config.eigen_count; ++i)
            rich[i] = (4.0 * fine.eigenvalues[i] - coarse.eigenvalues[i]) / 3.0;
        if (!prev_rich.empty()) {
            double change = 0;
            for (int i = 0; i < config.eigen_count; ++i)
                change = std::max(change, std::abs(rich[i] - prev_rich[i]) /
                                              std::max(std::abs(rich[i]), spec.hbar));
            if (change <= config.convergence_rel_tol) {
                converged = true;
                break;
            }
        }
        prev_rich = rich;
        coarse = fine;
    }
    if (!converged)
        throw NotConverged(spec.name +
                           " oracle: eigenvalues did not settle within the grid refinement "
                           "budget (truncation- or singularity-limited)");

    report.eigenvalues = rich;
    report.max_rel_deviation = max_rel_dev(report.eigenvalues, report.algebraic, spec.hbar);

    for (int i = 0; i < config.eigen_count; ++i) {
        const std::vector<double> v = eigenvector_of(fine, fine.eigenvalues[i]);
        double peak = 0;
        for (double y : v) peak = std::max(peak, std::abs(y));
        report.edge_amplitude.push_back(std::max(std::abs(v.front()), std::abs(v.back())) / peak);
    }

    if (config.check_box) {
        const DomainInterval wide = enlarged_box(config.box, spec.domain);
        const double scale = (wide.right - wide.left) / (config.box.right - config.box.left);
        const int wide_pts = static_cast<int>(coarse.diag.size() * scale);
        const GridSolve check = solve_on_grid(spec, sign, wide, wide_pts, config.eigen_count);
        for (int i = 0; i < config.eigen_count; ++i) {
            const double shift = std::abs(check.eigenvalues[i] - coarse.eigenvalues[i]) /
                                 std::max(std::abs(coarse.eigenvalues[i]), spec.hbar);
            if (shift > config.convergence_rel_tol)
                throw BoxTooSmall(spec.name + " oracle: enlarging the box moved eigenvalue " +
                                  std::to_string(i) + " by " + std::to_string(shift) +
                                  " (tol " + std::to_string(config.convergence_rel_tol) + ")");
        }
    }
    return report;
}

double isospectrality_check(const SuperpotentialSpec& spec, OracleConfig config) {
    OracleConfig plus_config = config;
    plus_config.eigen_count = std::max(1, config.eigen_count - 1);
    const OracleReport minus = solve_spectrum(spec, Sign::minus, config);
    const OracleReport plus = solve_spectrum(spec, Sign::plus, plus_config);
    double worst = 0;
    for (int n = 0; n + 1 < config.eigen_count; ++n) {
        const double em = minus.eigenvalues[n + 1];
        const double ep = plus.eigenvalues[n];
        worst = std::max(worst, std::abs(em - ep) / std::max(em, spec.hbar));
    }
    return worst;
}

}  // namespace swkb

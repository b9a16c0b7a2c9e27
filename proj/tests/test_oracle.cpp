#include <cmath>
#include <vector>

#include "doctest.h"
#include "swkb/oracle.hpp"
#include "swkb/spectrum.hpp"

using namespace swkb;

namespace {

// FD matrix assembled by hand, independent of solve_spectrum's plumbing
std::pair<std::vector<double>, std::vector<double>> fd_matrix(double lo, double hi, int n,
                                                              double (*V)(double)) {
    const double h = (hi - lo) / (n + 1);
    std::vector<double> d(n), e(n - 1, -1.0 / (h * h));
    for (int i = 0; i < n; ++i) d[i] = 2.0 / (h * h) + V(lo + (i + 1) * h);
    return {d, e};
}

double harmonic_V(double x) { return x * x - 1.0; }

}  // namespace

TEST_SUITE("oracle") {
    TEST_CASE("tridiagonal eigenvalues of the discrete laplacian") {
        // -u'' on (0, pi) with Dirichlet ends: lambda_k = (2/h^2)(1 - cos(k h))
        const int n = 200;
        const double h = std::numbers::pi / (n + 1);
        std::vector<double> d(n, 2.0 / (h * h)), e(n - 1, -1.0 / (h * h));
        const auto vals = tridiagonal_lowest_eigenvalues(d, e, 3);
        for (int k = 1; k <= 3; ++k) {
            const double expected = 2.0 / (h * h) * (1.0 - std::cos(k * h));
            CHECK(vals[k - 1] == doctest::Approx(expected).epsilon(1e-12));
        }
        CHECK_THROWS_AS(tridiagonal_lowest_eigenvalues(d, e, 0), ValidityError);
    }

    TEST_CASE("grid convergence is second order") {
        double prev_err = 0;
        std::vector<double> ratios;
        for (int n : {2000, 4000, 8000}) {
            const auto [d, e] = fd_matrix(-12.0, 12.0, n, harmonic_V);
            const double err = std::abs(tridiagonal_lowest_eigenvalues(d, e, 3)[2] - 4.0);
            if (prev_err > 0) ratios.push_back(prev_err / err);
            prev_err = err;
        }
        for (double r : ratios) {
            CHECK(r >= 3.0);
            CHECK(r <= 5.0);
        }
    }

    TEST_CASE("harmonic spectrum") {
        OracleConfig config;
        config.eigen_count = 5;
        const OracleReport r = solve_spectrum(catalog_entry("harmonic"), Sign::minus, config);
        const std::vector<double> expected = {0.0, 2.0, 4.0, 6.0, 8.0};
        for (int i = 0; i < 5; ++i)
            CHECK(std::abs(r.eigenvalues[i] - expected[i]) <= 1e-6 * std::max(1.0, expected[i]));
        CHECK(r.max_rel_deviation <= 1e-6);
    }

    TEST_CASE("harmonic partner spectrum") {
        OracleConfig config;
        config.eigen_count = 3;
        const OracleReport r = solve_spectrum(catalog_entry("harmonic"), Sign::plus, config);
        const std::vector<double> expected = {2.0, 4.0, 6.0};
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs(r.eigenvalues[i] - expected[i]) <= 1e-6 * expected[i]);
    }

    TEST_CASE("coulomb spectrum") {
        OracleConfig config;
        config.eigen_count = 3;
        const OracleReport r = solve_spectrum(catalog_entry("coulomb"), Sign::minus, config);
        CHECK(std::abs(r.eigenvalues[0]) <= 1e-6);
        CHECK(r.eigenvalues[1] == doctest::Approx(0.75).epsilon(1e-5));
        CHECK(r.eigenvalues[2] == doctest::Approx(8.0 / 9.0).epsilon(1e-5));
        CHECK(r.max_rel_deviation <= 1e-5);
    }

    TEST_CASE("unbroken SUSY ground state is zero") {
        for (const char* name : {"harmonic", "morse", "coulomb", "radial_oscillator"}) {
            OracleConfig config;
            config.eigen_count = name == std::string("morse") ? 3 : 4;
            const OracleReport r = solve_spectrum(catalog_entry(name), Sign::minus, config);
            CHECK(std::abs(r.eigenvalues[0]) <= 1e-6);
        }
    }

    TEST_CASE("isospectrality for harmonic and morse") {
        OracleConfig config;
        config.eigen_count = 4;
        CHECK(isospectrality_check(catalog_entry("harmonic"), config) <= 1e-6);
        config.eigen_count = 3;  // morse has the finite ladder {0, 5, 8}
        CHECK(isospectrality_check(catalog_entry("morse"), config) <= 1e-5);
    }

    TEST_CASE("a deliberately short box is rejected") {
        OracleConfig config;
        config.eigen_count = 3;
        config.use_default_box = false;
        config.box = DomainInterval::open(-2.0, 6.0);
        config.grid_points = 2000;
        CHECK_THROWS_AS(solve_spectrum(catalog_entry("morse"), Sign::minus, config), BoxTooSmall);
    }

    TEST_CASE("invalid configs are rejected") {
        OracleConfig config;
        config.eigen_count = 0;
        CHECK_THROWS_AS(solve_spectrum(catalog_entry("harmonic"), Sign::minus, config),
                        ValidityError);
        config.eigen_count = 3;
        config.grid_points = 100;
        CHECK_THROWS_AS(solve_spectrum(catalog_entry("harmonic"), Sign::minus, config),
                        ValidityError);
        OracleConfig outside;
        outside.use_default_box = false;
        outside.box = DomainInterval::open(-3.0, 5.0);
        CHECK_THROWS_AS(solve_spectrum(catalog_entry("coulomb"), Sign::minus, outside),
                        ValidityError);
    }

    TEST_CASE("eigenfunctions decay at well-chosen box edges") {
        OracleConfig config;
        config.eigen_count = 4;
        const OracleReport r = solve_spectrum(catalog_entry("harmonic"), Sign::minus, config);
        for (double amp : r.edge_amplitude) CHECK(amp <= 1e-8);
    }

    TEST_CASE("scarf minus-spectrum is truncation-limited") {
        // the left edge of V- sits exactly at the critical -hbar^2/4 inverse
        // square coupling: eigenfunctions vanish like sqrt(distance) and a
        // Dirichlet box converges only logarithmically, so the solver refuses
        OracleConfig config;
        config.eigen_count = 4;
        config.max_refinements = 4;
        CHECK_THROWS_AS(solve_spectrum(catalog_entry("scarf_I"), Sign::minus, config),
                        NotConverged);
        // the partner potential is repulsive at both edges and converges fine
        OracleConfig plus_config;
        plus_config.eigen_count = 3;
        const OracleReport r = solve_spectrum(catalog_entry("scarf_I"), Sign::plus, plus_config);
        const std::vector<double> expected = {3.0, 8.0, 15.0};
        for (int i = 0; i < 3; ++i)
            CHECK(r.eigenvalues[i] == doctest::Approx(expected[i]).epsilon(1e-5));
    }
}

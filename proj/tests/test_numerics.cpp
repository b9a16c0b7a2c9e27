#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "swkb/quadrature.hpp"
#include "swkb/rootfind.hpp"

using namespace swkb;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("quadrature") {
    TEST_CASE("gauss-legendre integrates polynomials of degree 2n-1 exactly") {
        // order 4 handles x^7
        const auto f = [](double x) { return 7.0 * std::pow(x, 6) - 3.0 * x * x + 1.0; };
        const double got = gl_integrate(f, -1.0, 1.0, 4);
        CHECK(got == doctest::Approx(2.0 - 2.0 + 2.0).epsilon(1e-14));
    }

    TEST_CASE("gauss-legendre nodes are symmetric and weights sum to 2") {
        const GaussLegendreRule& rule = gauss_legendre(64);
        double sum = 0;
        for (int i = 0; i < 64; ++i) {
            sum += rule.weights[i];
            CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[63 - i]).epsilon(1e-15));
        }
        CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
    }

    TEST_CASE("gl_doubling converges on a smooth integrand") {
        const auto f = [](double x) { return std::exp(-x * x); };
        const QuadResult q = gl_doubling(f, -6.0, 6.0, 16, 6, 1e-12, 1.0);
        CHECK(q.converged);
        CHECK(q.value == doctest::Approx(std::sqrt(kPi)).epsilon(1e-12));
    }

    TEST_CASE("tanh-sinh handles inverse-square-root endpoint singularities") {
        // int_0^1 dx/sqrt(x) = 2
        const auto f = [](double, double dl, double) { return 1.0 / std::sqrt(dl); };
        const QuadResult q = tanh_sinh(f, 0.0, 1.0, 1e-12, 10, 1.0);
        CHECK(q.converged);
        CHECK(q.value == doctest::Approx(2.0).epsilon(1e-12));
    }

    TEST_CASE("tanh-sinh quarter circle") {
        const auto f = [](double x, double, double) { return std::sqrt(std::max(0.0, 1.0 - x * x)); };
        const QuadResult q = tanh_sinh(f, 0.0, 1.0, 1e-12, 10, 1.0);
        CHECK(q.converged);
        CHECK(q.value == doctest::Approx(kPi / 4.0).epsilon(1e-12));
    }

    TEST_CASE("adaptive simpson on a smooth function") {
        const auto f = [](double x) { return std::sin(x); };
        CHECK(adaptive_simpson(f, 0.0, kPi) == doctest::Approx(2.0).epsilon(1e-11));
    }
}

TEST_SUITE("rootfind") {
    TEST_CASE("brent finds a transcendental root") {
        const auto f = [](double x) { return std::cos(x) - x; };
        const double root = brent_root(f, 0.0, 1.0, f(0.0), f(1.0), 1e-14);
        CHECK(std::abs(f(root)) < 1e-14);
    }

    TEST_CASE("brent rejects a non-bracketing interval") {
        const auto f = [](double x) { return x * x + 1.0; };
        CHECK_THROWS_AS(brent_root(f, -1.0, 1.0, f(-1.0), f(1.0)), BracketError);
    }

    TEST_CASE("bracket expansion toward an infinite endpoint") {
        const auto f = [](double x) { return x - 100.0; };
        const Bracket b = expand_bracket(f, 0.0, f(0.0),
                                         std::numeric_limits<double>::infinity());
        CHECK(b.f_lo <= 0);
        CHECK(b.f_hi >= 0);
        CHECK(b.lo <= 100.0);
        CHECK(b.hi >= 100.0);
    }

    TEST_CASE("bracket expansion approaches a finite endpoint geometrically") {
        // root at 1e-4, singular endpoint at 0
        const auto f = [](double x) { return 1.0 / x - 1e4; };
        const Bracket b = expand_bracket(f, 1.0, f(1.0), 0.0);
        const double root = brent_root(f, b.lo, b.hi, b.f_lo, b.f_hi);
        CHECK(root == doctest::Approx(1e-4).epsilon(1e-10));
    }

    TEST_CASE("bracket expansion fails cleanly when there is no root") {
        const auto f = [](double x) { return 1.0 + x * x; };
        CHECK_THROWS_AS(expand_bracket(f, 0.0, f(0.0), std::numeric_limits<double>::infinity()),
                        BracketError);
    }
}

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "swkb/swkb_engine.hpp"

using namespace swkb;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("swkb_engine") {
    TEST_CASE("turning points of the harmonic well") {
        const auto spec = catalog_entry("harmonic");
        const TurningPoints tp = find_turning_points(spec, 4.0);
        CHECK(tp.x1 == doctest::Approx(-2.0).epsilon(1e-12));
        CHECK(tp.x2 == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(std::abs(tp.f_at_x1) <= 1e-12);
        CHECK(std::abs(tp.f_at_x2) <= 1e-12);
    }

    TEST_CASE("morse turning points match the analytic inversion") {
        // e^{-x} = 3 -+ sqrt(5) at W = +-sqrt(5)
        const auto spec = catalog_entry("morse");
        const TurningPoints tp = find_turning_points(spec, 5.0);
        CHECK(tp.x1 == doctest::Approx(-std::log(3.0 + std::sqrt(5.0))).epsilon(1e-12));
        CHECK(tp.x2 == doctest::Approx(-std::log(3.0 - std::sqrt(5.0))).epsilon(1e-12));
    }

    TEST_CASE("E = 0 collapses to the zero of W") {
        for (const auto& spec : catalog()) {
            const TurningPoints tp = find_turning_points(spec, 0.0);
            CHECK(tp.x1 == tp.x2);
            CHECK(std::abs(eval_W(spec, tp.x1)) <= 1e-10);
        }
    }

    TEST_CASE("energies above the well depth fail to bracket") {
        // morse W -> 3 on the right, so sqrt(E) >= 3 has no outer turning point
        CHECK_THROWS_AS(find_turning_points(catalog_entry("morse"), 10.0), BracketError);
    }

    TEST_CASE("n = 0 short-circuits to an exact zero") {
        for (const auto& spec : catalog()) {
            const SwkbResult r = swkb_integral(spec, 0);
            CHECK(r.integral == 0.0);
            CHECK(r.residual == 0.0);
            CHECK(r.converged);
            CHECK(r.refinements_used == 0);
            CHECK(r.turning.x1 == r.turning.x2);
        }
    }

    TEST_CASE("harmonic n = 2 equals the closed form 2 pi") {
        // int sqrt(E - x^2) = pi E / 2 with E = 4
        const SwkbResult r = swkb_integral(catalog_entry("harmonic"), 2);
        CHECK(r.converged);
        CHECK(r.integral == doctest::Approx(2.0 * kPi).epsilon(1e-12));
    }

    TEST_CASE("coulomb n = 1 gives pi") {
        const SwkbResult r = swkb_integral(catalog_entry("coulomb"), 1);
        CHECK(r.converged);
        CHECK(std::abs(r.integral - kPi) <= 1e-8 * kPi);
    }

    TEST_CASE("exactness across the catalog") {
        for (const char* name :
             {"harmonic", "morse", "coulomb", "eckart_like", "radial_oscillator", "scarf_I"}) {
            const auto spec = catalog_entry(name);
            const SpectrumModel model = make_spectrum_model(spec);
            for (int n = 1; n <= std::min(model.n_max, 10); ++n) {
                const SwkbResult r = swkb_integral(spec, n);
                CHECK(r.converged);
                CHECK(std::abs(r.residual) <= 1e-8 * n * kPi * spec.hbar);
            }
        }
    }

    TEST_CASE("both quadrature methods agree") {
        QuadratureConfig ts;
        ts.method = QuadMethod::tanh_sinh;
        for (const char* name :
             {"harmonic", "morse", "coulomb", "eckart_like", "radial_oscillator", "scarf_I"}) {
            const auto spec = catalog_entry(name);
            const SpectrumModel model = make_spectrum_model(spec);
            for (int n = 1; n <= std::min(model.n_max, 5); ++n) {
                const double gauss = swkb_integral(spec, n).integral;
                const double de = swkb_integral(spec, n, ts).integral;
                CHECK(std::abs(gauss - de) <= 1e-9 * std::abs(gauss));
            }
        }
    }

    TEST_CASE("integral is invariant under mirroring") {
        for (const char* name : {"morse", "coulomb", "scarf_I"}) {
            const auto spec = catalog_entry(name);
            const auto mir = mirrored(spec);
            const SpectrumModel model = make_spectrum_model(spec);
            for (int n = 1; n <= std::min(model.n_max, 4); ++n) {
                const double direct = swkb_integral(spec, n).integral;
                const double flipped = swkb_integral(mir, n).integral;
                CHECK(std::abs(direct - flipped) <= 1e-10 * std::max(1.0, direct));
            }
        }
    }

    TEST_CASE("I scales linearly in hbar") {
        for (const char* name : {"harmonic", "coulomb"}) {
            double lo = 1e300, hi = -1e300;
            for (double hb : {0.5, 1.0, 2.0}) {
                const auto spec = catalog_entry(name, {{"hbar", hb}});
                const double ratio = swkb_integral(spec, 2).integral / hb;
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
            }
            CHECK((hi - lo) <= 1e-8 * hi);
        }
    }

    TEST_CASE("malformed quadrature configs are rejected") {
        QuadratureConfig bad;
        bad.base_nodes = 8;
        CHECK_THROWS_AS(swkb_integral(catalog_entry("harmonic"), 1, bad), ValidityError);
        bad = QuadratureConfig{};
        bad.rel_tol = 0.0;
        CHECK_THROWS_AS(swkb_integral(catalog_entry("harmonic"), 1, bad), ValidityError);
        bad = QuadratureConfig{};
        bad.max_refinements = 0;
        CHECK_THROWS_AS(find_turning_points(catalog_entry("harmonic"), 1.0, bad), ValidityError);
    }

    TEST_CASE("unconverged quadrature is reported, not hidden") {
        QuadratureConfig starved;
        starved.base_nodes = 16;
        starved.max_refinements = 1;
        starved.rel_tol = 1e-14;
        const SwkbResult r = swkb_integral(catalog_entry("eckart_like"), 3, starved);
        CHECK_FALSE(r.converged);
        CHECK(r.integral > 0.0);
        CHECK(r.est_error > 0.0);
    }

    TEST_CASE("negative control misses n pi hbar") {
        const auto control = catalog_entry("perturbed_harmonic");
        double worst = 0;
        for (int n = 1; n <= 5; ++n)
            worst = std::max(worst, std::abs(swkb_integral(control, n).residual));
        CHECK(worst > 1e-3);
        const auto clean = catalog_entry("perturbed_harmonic", {{"perturbation_amplitude", 0.0}});
        for (int n = 1; n <= 5; ++n)
            CHECK(std::abs(swkb_integral(clean, n).residual) <= 1e-8 * n * kPi);
    }

    TEST_CASE("dI/dhbar equals n pi in both modes") {
        const QuadratureConfig config;
        for (const char* name :
             {"harmonic", "morse", "coulomb", "eckart_like", "radial_oscillator", "scarf_I"}) {
            const auto spec = catalog_entry(name);
            const SpectrumModel model = make_spectrum_model(spec);
            for (int n = 0; n <= std::min(model.n_max, 5); ++n) {
                const double fd = dI_dhbar(spec, n, config, DIMode::finite_difference);
                const double eq = dI_dhbar(spec, n, config, DIMode::eq14);
                CHECK(std::abs(fd - n * kPi) <= 1e-4);
                CHECK(std::abs(eq - n * kPi) <= 1e-4);
                CHECK(std::abs(fd - eq) <= 1e-4);
            }
        }
    }

    TEST_CASE("dI/dhbar spot values") {
        const QuadratureConfig config;
        const auto harmonic = catalog_entry("harmonic");
        CHECK(dI_dhbar(harmonic, 3, config, DIMode::finite_difference) ==
              doctest::Approx(3.0 * kPi).epsilon(1e-5));
        CHECK(dI_dhbar(catalog_entry("morse"), 1, config, DIMode::eq14) ==
              doctest::Approx(kPi).epsilon(1e-6));
        CHECK(dI_dhbar(harmonic, 0, config, DIMode::eq14) == 0.0);
    }

    TEST_CASE("lowest-order WKB baseline") {
        // V- = x^2 - 1, E_1 = 2: int sqrt(3 - x^2) = 3 pi / 2, the oscillator
        // happens to satisfy (n + 1/2) pi hbar exactly
        const double harmonic = conventional_wkb_integral(catalog_entry("harmonic"), 1);
        CHECK(harmonic == doctest::Approx(1.5 * kPi).epsilon(1e-9));
        // V- = 1 - 2/x on (0, inf), E_1 = 3/4: the allowed region is (0, 8]
        // and int_0^8 sqrt(2/x - 1/4) dx = 2 pi (substitute x = 8 sin^2 t),
        // far from (n + 1/2) pi hbar
        const double coulomb = conventional_wkb_integral(catalog_entry("coulomb"), 1);
        CHECK(coulomb == doctest::Approx(2.0 * kPi).epsilon(1e-5));
        CHECK(std::abs(coulomb - 1.5 * kPi) > 1e-3);
    }

    TEST_CASE("WKB below the bottom of the well fails to bracket") {
        CHECK_THROWS_AS(wkb_action_at_energy(catalog_entry("harmonic"), -2.0), BracketError);
    }
}

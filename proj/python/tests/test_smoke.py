import math

import pytest

import swkblab as sw

PI = math.pi


def test_catalog_names():
    names = sw.catalog_names()
    assert len(names) == 7
    assert "harmonic" in names
    assert "perturbed_harmonic" in names


def test_eval_points():
    harmonic = sw.catalog_entry("harmonic")
    assert harmonic.W(0.0) == 0.0
    morse = sw.catalog_entry("morse")
    assert morse.W(0.0) == pytest.approx(2.0, abs=1e-14)
    coulomb = sw.catalog_entry("coulomb")
    assert coulomb.W(2.0) == pytest.approx(0.5, abs=1e-14)
    assert coulomb.V(1.0, "minus") == pytest.approx(-1.0, abs=1e-14)


def test_domain_error():
    coulomb = sw.catalog_entry("coulomb")
    with pytest.raises(ValueError):
        coulomb.W(-1.0)


def test_energies():
    assert sw.energy(sw.catalog_entry("morse"), 1) == pytest.approx(5.0, rel=1e-14)
    assert sw.energy(sw.catalog_entry("scarf_I"), 2) == pytest.approx(8.0, rel=1e-14)
    assert sw.energy(sw.catalog_entry("coulomb"), 1) == pytest.approx(0.75, rel=1e-14)


def test_turning_points():
    x1, x2 = sw.find_turning_points(sw.catalog_entry("harmonic"), 4.0)
    assert x1 == pytest.approx(-2.0, abs=1e-10)
    assert x2 == pytest.approx(2.0, abs=1e-10)


def test_swkb_exactness():
    harmonic = sw.swkb_integral(sw.catalog_entry("harmonic"), 2)
    assert harmonic["converged"]
    assert harmonic["integral"] == pytest.approx(2 * PI, rel=1e-10)
    coulomb = sw.swkb_integral(sw.catalog_entry("coulomb"), 1)
    assert coulomb["integral"] == pytest.approx(PI, rel=1e-9)
    zero = sw.swkb_integral(sw.catalog_entry("scarf_I"), 0)
    assert zero["integral"] == 0.0


def test_negative_control():
    control = sw.catalog_entry("perturbed_harmonic")
    residuals = [abs(sw.swkb_integral(control, n)["residual"]) for n in range(1, 6)]
    assert max(residuals) > 1e-3
    clean = sw.catalog_entry("perturbed_harmonic", {"perturbation_amplitude": 0.0})
    assert abs(sw.swkb_integral(clean, 3)["residual"]) < 1e-8


def test_classify():
    tag, constants = sw.classify(sw.catalog_entry("scarf_I"))
    assert tag == "IIIb"
    assert constants["lambda"] == pytest.approx(-1.0, abs=1e-10)
    tag, _ = sw.classify(sw.catalog_entry("perturbed_harmonic"))
    assert tag == "NonConventional"


def test_residuals():
    for name in ("harmonic", "scarf_I"):
        rep = sw.residual_sic(sw.catalog_entry(name))
        assert rep["max_abs_residual"] <= 1e-10


def test_dI_dhbar():
    assert sw.dI_dhbar(sw.catalog_entry("harmonic"), 3) == pytest.approx(3 * PI, abs=1e-6)


def test_oracle_small():
    report = sw.solve_spectrum(
        sw.catalog_entry("harmonic"), eigen_count=3, box=(-10.0, 10.0), grid_points=1000,
        rel_tol=1e-5, check_box=False,
    )
    assert report["max_rel_deviation"] < 1e-4
    assert report["algebraic"] == pytest.approx([0.0, 2.0, 4.0])

"""SWKB quantization laboratory.

Thin package wrapper over the C++ core: a catalog of shape-invariant
superpotentials, shape-invariance residual checks, algebraic spectra, the
singular-endpoint SWKB integral and a finite-difference Schrodinger oracle.
"""

from ._core import (  # noqa: F401
    BoxTooSmall,
    BracketError,
    DomainError,
    NoZeroCrossing,
    NotConverged,
    Superpotential,
    UnknownParameter,
    ValidityError,
    __version__,
    catalog_document,
    catalog_entry,
    catalog_names,
    classify,
    conventional_wkb_integral,
    dE_dhbar,
    dI_dhbar,
    energy,
    find_turning_points,
    g_of_a,
    isospectrality_check,
    n_max,
    partner_check_pairs,
    residual_pde1,
    residual_pde2,
    residual_sic,
    solve_spectrum,
    standard_grid,
    swkb_integral,
)

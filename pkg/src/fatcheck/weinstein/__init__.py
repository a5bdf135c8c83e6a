"""Invariant polynomials of adjoint orbits for the classical groups and G2."""

from .forms import (
    FormTerm,
    TFamily,
    WeinsteinForm,
    bilinear_from_torus,
    canonical_pair,
    positive_ratio,
)
from .groups import FAMILIES, GroupSpec, parse_group
from .schur_forms import (
    q_char_form,
    q_product,
    q_schur_form,
    q_torus,
    q_torus_form,
    staircase_factorial,
    weinstein_form,
)
from .special import (
    SPECIAL_CASES,
    ReducedInvariant,
    chern_h,
    q_g2,
    q_so4_reduced,
    q_special_un,
    q_u2_reduced,
)
from .weyl import q_weyl_sum, weyl_numerator

__all__ = [
    "FAMILIES",
    "FormTerm",
    "GroupSpec",
    "ReducedInvariant",
    "SPECIAL_CASES",
    "TFamily",
    "WeinsteinForm",
    "bilinear_from_torus",
    "canonical_pair",
    "chern_h",
    "parse_group",
    "positive_ratio",
    "q_char_form",
    "q_g2",
    "q_product",
    "q_schur_form",
    "q_so4_reduced",
    "q_special_un",
    "q_torus",
    "q_torus_form",
    "q_u2_reduced",
    "q_weyl_sum",
    "staircase_factorial",
    "weinstein_form",
    "weyl_numerator",
]

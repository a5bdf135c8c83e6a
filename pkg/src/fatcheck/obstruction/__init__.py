"""Bundle data, exact root analysis and the fatness obstructions built on them."""

from .bundle import BundleData, load_bundle, parse_bundle
from .checks import (
    check_fatness,
    complex_rank2_closed_form,
    complex_sphere_check,
    dimension_restriction,
    invariant_form,
    lens_check,
    lens_threshold,
    normal_reduction_check,
    quaternionic_sphere_check,
    quaternionic_sphere_polynomial,
    real_sphere_check,
    sp_times_s_check,
    sp_times_s_curve,
    specialize,
    verdict_from_polynomial,
)
from .curves import OrbitCurve, normalize_orbit_point
from .rank2 import (
    closed_form_orbit_count,
    grassmannian_cbar,
    grassmannian_cbar_closed,
    so4_basis,
    so4_case_analysis,
    so4_dim8_criterion,
    u2_basis,
    u2_case_analysis,
    u2_dim8_criterion,
)
from .s8_bundles import S8SphereBundle
from .sturm import Domain, Interval, RootInterval, default_precision, isolate_roots, sturm_count
from .su3 import SU3Rows, printed_su3_rows, su3_analysis, su3_bounds, su3_rows
from .verdict import Status, VanishingOrbit, Verdict

__all__ = [
    "BundleData",
    "Domain",
    "Interval",
    "OrbitCurve",
    "RootInterval",
    "S8SphereBundle",
    "SU3Rows",
    "Status",
    "VanishingOrbit",
    "Verdict",
    "check_fatness",
    "closed_form_orbit_count",
    "complex_rank2_closed_form",
    "complex_sphere_check",
    "default_precision",
    "dimension_restriction",
    "grassmannian_cbar",
    "grassmannian_cbar_closed",
    "invariant_form",
    "isolate_roots",
    "lens_check",
    "lens_threshold",
    "load_bundle",
    "normal_reduction_check",
    "normalize_orbit_point",
    "parse_bundle",
    "printed_su3_rows",
    "quaternionic_sphere_check",
    "quaternionic_sphere_polynomial",
    "real_sphere_check",
    "so4_basis",
    "so4_case_analysis",
    "so4_dim8_criterion",
    "sp_times_s_check",
    "sp_times_s_curve",
    "specialize",
    "sturm_count",
    "su3_analysis",
    "su3_bounds",
    "su3_rows",
    "u2_basis",
    "u2_case_analysis",
    "u2_dim8_criterion",
    "verdict_from_polynomial",
]

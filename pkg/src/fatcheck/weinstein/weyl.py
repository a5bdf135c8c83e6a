"""Independent route to the invariants: an explicit alternating sum over the Weyl group.

``pi(x) pi(y) q^k = sum_{|mu| = k + r} k!/mu! y^mu L_mu(x)`` with
``L_mu(x) = sum_w det(w) (w x)^mu`` and ``pi`` the product of positive
roots. The right side is built term by term and divided exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, prod

from ..errors import ComplexityLimit, UnsupportedGroup
from ..symfun import MultiPoly, exact_divide, reduce_trace_zero
from ..symfun.symmetric import _compositions
from .forms import WeinsteinForm, bilinear_from_torus
from .groups import GroupSpec

__all__ = ["q_weyl_sum", "weyl_numerator", "MAX_WEYL_RANK", "MAX_WEYL_DEGREE"]

MAX_WEYL_RANK = 4
MAX_WEYL_DEGREE = 24

_SUPPORTED = ("U", "SU", "SO_even", "SO_odd", "Sp", "G2")


def _reduce_both(p: MultiPoly, n: int) -> MultiPoly:
    """Trace-zero reduction on the y-block and on the x-block of a ``2n`` ring."""
    y = [MultiPoly.var(i, 2 * n - 2) for i in range(n - 1)]
    x = [MultiPoly.var(n - 1 + i, 2 * n - 2) for i in range(n - 1)]
    ylast = MultiPoly.zero(2 * n - 2)
    xlast = MultiPoly.zero(2 * n - 2)
    for v in y:
        ylast = ylast - v
    for v in x:
        xlast = xlast - v
    return p.substitute(y + [ylast] + x + [xlast])


def weyl_numerator(group: GroupSpec, k: int) -> MultiPoly:
    """``sum_mu k!/mu! y^mu L_mu(x)`` in ``2n`` variables (y block first)."""
    n = group.torus_dim
    top = k + group.r
    elements = [(w, group.weyl_det(w)) for w in group.weyl_group()]
    kf = factorial(k)
    acc: dict[tuple[int, ...], Fraction] = {}
    for mu in _compositions(top, n):
        weight = Fraction(kf, prod(factorial(a) for a in mu))
        for (perm, signs), det in elements:
            # (w x)^mu = prod_i signs_i^mu_i x_{perm_i}^mu_i
            sgn = det
            xe = [0] * n
            for i, a in enumerate(mu):
                if a:
                    if signs[i] < 0 and a % 2:
                        sgn = -sgn
                    xe[perm[i]] += a
            key = mu + tuple(xe)
            acc[key] = acc.get(key, 0) + weight * sgn
    return MultiPoly(2 * n, acc)


def q_weyl_sum(group: GroupSpec, k: int) -> WeinsteinForm:
    """Invariant of degree ``k`` from the explicit Weyl-group sum.

    Raises
    ------
    UnsupportedGroup
        For the torus and the disconnected O(n) families.
    ComplexityLimit
        If the rank exceeds 4 or ``k + r`` exceeds 24.
    DivisionNotExact
        If the root products do not divide the sum (an arithmetic fault).
    """
    if group.family not in _SUPPORTED:
        raise UnsupportedGroup(f"no Weyl-sum route for {group.label}")
    if group.torus_dim > MAX_WEYL_RANK or k + group.r > MAX_WEYL_DEGREE:
        raise ComplexityLimit(
            f"Weyl sum for {group.label} at k={k} exceeds rank {MAX_WEYL_RANK} or degree {MAX_WEYL_DEGREE}"
        )
    n = group.torus_dim
    num = weyl_numerator(group, k)
    yfac = group.positive_root_factors(2 * n, 0)
    xfac = group.positive_root_factors(2 * n, n)
    if group.trace_zero:
        num = _reduce_both(num, n)
        yfac = [_reduce_both(f, n) for f in yfac]
        xfac = [_reduce_both(f, n) for f in xfac]
    for f in yfac + xfac:
        num = exact_divide(num, f)
    return bilinear_from_torus(num, group.class_family(), k, group, "weyl")

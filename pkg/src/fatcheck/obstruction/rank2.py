"""Closed-form classification for U(2) and SO(4) bundles under a proportionality relation.

With ``D = c1^2 - 4c2`` and ``c1^2 = r D`` (U(2)), or ``B = r A`` with
``A = p1 - 2e``, ``B = p1 + 2e`` (SO(4)), the invariant along
``y = (1+t, 1-t)`` is a multiple of a fixed binomial polynomial in ``t^2``.
The sign of ``r`` alone then decides how many orbits are obstructed. Every
classification is cross-checked against the generic root-isolation path.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from ..errors import CrossCheckFailed, InconsistentProportionality, UnsupportedGroup
from ..symfun import SymExpr, chern_family
from ..weinstein import GroupSpec
from .bundle import BundleData
from .checks import check_fatness
from .curves import OrbitCurve
from .verdict import Status, Verdict

__all__ = [
    "u2_basis",
    "so4_basis",
    "u2_case_analysis",
    "so4_case_analysis",
    "closed_form_orbit_count",
    "u2_dim8_criterion",
    "so4_dim8_criterion",
    "grassmannian_cbar",
    "grassmannian_cbar_closed",
]


def u2_basis(m: int) -> list[SymExpr]:
    """``c1^(m-2j) D^j`` for ``j = 0..m/2``."""
    c1, c2 = chern_family(2).gens()
    D = c1 * c1 - c2 * 4
    return [c1 ** (m - 2 * j) * D**j for j in range(m // 2 + 1)]


def so4_basis(m: int) -> list[SymExpr]:
    """``A^(m/2-j) B^j`` for ``j = 0..m/2``."""
    p1, _, e = GroupSpec("SO_even", 2).class_family().gens()
    A, B = p1 - e * 2, p1 + e * 2
    h = m // 2
    return [A ** (h - j) * B**j for j in range(h + 1)]


def _ratio_numbers(bundle: BundleData, basis: list[SymExpr], r, pivot: int, step) -> tuple[list[Fraction], Fraction | None]:
    """Pair the basis and check ``N_j = r^(step(j)) N_pivot``; infers ``r`` if omitted."""
    N = [bundle.pair(b) for b in basis]
    base = N[pivot]
    if base == 0:
        if any(N):
            raise InconsistentProportionality(f"pivot number vanishes but others do not: {N}")
        return N, None if r is None else Fraction(r)
    if r is None:
        # the neighbour of the pivot has exponent 1
        nb = pivot - 1 if pivot > 0 else 1
        r = N[nb] / base
    r = Fraction(r)
    for j, v in enumerate(N):
        if v != r ** step(j) * base:
            raise InconsistentProportionality(f"number {j} is {v}, expected {r ** step(j) * base} for r = {r}")
    return N, r


def closed_form_orbit_count(r: Fraction | None, leading_zero: bool, m: int) -> int:
    """Distinct obstructed orbits from the sign of ``r``; -1 when everything vanishes."""
    if leading_zero:
        return -1
    if r > 0:
        return 0
    if r == 0:
        return 1
    return m // 2


def _classify(bundle: BundleData, N, r, pivot_zero: bool, which: str, precision) -> Verdict:
    m = bundle.m
    expected = closed_form_orbit_count(r, pivot_zero, m)
    generic = check_fatness(bundle, OrbitCurve.rank2(), precision=precision)
    if pivot_zero:
        case = "a"
    else:
        case = {1: "d", 0: "b", -1: "c"}[(r > 0) - (r < 0)]
    if generic.orbit_count != expected:
        raise CrossCheckFailed(
            f"closed form gives {expected} orbits, root isolation gives {generic.orbit_count}"
        )
    mults = [o.multiplicity for o in generic.vanishing_orbits]
    if case == "c" and any(k != 1 for k in mults):
        raise CrossCheckFailed(f"expected simple roots for r < 0, got multiplicities {mults}")
    if case == "b" and which == "U(2)" and mults != [m]:
        raise CrossCheckFailed(f"expected one root of multiplicity {m}, got {mults}")
    generic.details.update({"case": case, "r": r, "numbers": N, "closed_form_orbits": expected})
    generic.notes.insert(0, f"{which} case ({case})" + ("" if r is None else f" with r = {r}"))
    return generic


def u2_case_analysis(bundle: BundleData, r=None, precision=None) -> Verdict:
    """Classify a U(2) bundle with ``c1^2 = r (c1^2 - 4 c2)``.

    Cases: (a) ``D^(m/2) = 0``: all invariants vanish; (b) ``r = 0``: exactly
    the orbit ``t = 0``; (c) ``r < 0``: exactly ``m/2`` orbits; (d) ``r > 0``:
    none.

    Parameters
    ----------
    bundle : BundleData
        Over U(2) with even ``m``.
    r : rational, optional
        Inferred from the numbers when omitted.

    Raises
    ------
    InconsistentProportionality
        If the numbers do not satisfy the relation.
    CrossCheckFailed
        If root isolation disagrees with the closed form.
    """
    g = bundle.group
    if isinstance(g, tuple) or g != GroupSpec("U", 2):
        raise UnsupportedGroup("u2_case_analysis needs U(2)")
    m = bundle.m
    h = m // 2
    N, r = _ratio_numbers(bundle, u2_basis(m), r, h, lambda j: h - j)
    return _classify(bundle, N, r, N[h] == 0, "U(2)", precision)


def so4_case_analysis(bundle: BundleData, r=None, precision=None) -> Verdict:
    """Classify an SO(4) bundle with ``p1 + 2e = r (p1 - 2e)``; cases as for U(2).

    In case (b) the single obstructed orbit is the limit orbit ``y = (1, -1)``.
    """
    g = bundle.group
    if isinstance(g, tuple) or g != GroupSpec("SO_even", 2):
        raise UnsupportedGroup("so4_case_analysis needs SO(4)")
    N, r = _ratio_numbers(bundle, so4_basis(bundle.m), r, 0, lambda j: j)
    return _classify(bundle, N, r, N[0] == 0, "SO(4)", precision)


def _dim8(C, M, D2, coeff: int) -> bool:
    # the quartic in t is C*a + M*b t^2 + D2*a' t^4; no root and nonzero limit
    if coeff * M * M < C * D2:
        return True
    return C != 0 and M != 0 and D2 != 0 and (C > 0) == (M > 0) == (D2 > 0)


def u2_dim8_criterion(bundle: BundleData) -> bool:
    """Full fatness test for U(2) over an 8-dimensional base in closed form.

    Passes iff ``5 (c1^2 D)^2 < c1^4 D^2``, or the three numbers are nonzero
    with a common sign.
    """
    if bundle.m != 4:
        raise ValueError("the closed-form criterion is for m = 4")
    C, M, D2 = (bundle.pair(b) for b in u2_basis(4))
    return _dim8(C, M, D2, 5)


def so4_dim8_criterion(bundle: BundleData) -> bool:
    """SO(4) analogue: ``25 (AB)^2 < 9 A^2 B^2`` or a common nonzero sign."""
    if bundle.m != 4:
        raise ValueError("the closed-form criterion is for m = 4")
    A2, AB, B2 = (bundle.pair(b) for b in so4_basis(4))
    return _dim8(A2, AB, B2, Fraction(25, 9))


# Grassmannian relation ---------------------------------------------------------------


def grassmannian_cbar(k: int) -> SymExpr:
    """Chern classes of the complementary bundle: ``cbar_k = -c1 cbar_{k-1} - c2 cbar_{k-2}``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    fam = chern_family(2)
    c1, c2 = fam.gens()
    prev, cur = SymExpr.zero(fam), SymExpr.constant(fam, 1)
    for _ in range(k):
        prev, cur = cur, -(c1 * cur) - c2 * prev
    return cur


def grassmannian_cbar_closed(k: int) -> SymExpr:
    """``(-1/2)^k sum_j binom(k+1, 2j+1) c1^(k-2j) D^j``."""
    fam = chern_family(2)
    c1, c2 = fam.gens()
    D = c1 * c1 - c2 * 4
    total = SymExpr.zero(fam)
    for j in range(k // 2 + 1):
        total = total + c1 ** (k - 2 * j) * D**j * comb(k + 1, 2 * j + 1)
    return total * Fraction(-1, 2) ** k

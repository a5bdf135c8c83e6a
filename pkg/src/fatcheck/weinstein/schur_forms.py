"""Invariant forms from Schur expansions and from class determinants.

Two independent constructions of the same invariant:

* :func:`q_schur_form` sums ``S_lambda(y) S_lambda(x)`` over partitions of
  ``k`` (or ``k/2`` on squares) with factorial weights, then rewrites each
  Schur polynomial in the class generators through the elementary basis.
* :func:`q_char_form` sums products of Jacobi-Trudi determinants in the
  class generators over conjugate partitions, never touching the torus.

Both agree up to one positive constant for each degree.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from ..errors import UnsupportedGroup, ZeroVector
from ..partitions import enumerate_Km, enumerate_Km_conjugate, shifted_factorial
from ..symfun import (
    MultiPoly,
    SymExpr,
    determinant,
    express_in_sigma,
    product_family,
    schur,
    torus_family,
)
from .forms import WeinsteinForm
from .groups import GroupSpec

__all__ = [
    "q_schur_form",
    "q_char_form",
    "q_torus",
    "q_torus_form",
    "q_product",
    "weinstein_form",
    "staircase_factorial",
]


def staircase_factorial(n: int, scale: int = 1, offset: int = 0) -> int:
    """``prod_{i<n} (scale*i + offset)!``, the factorial of a scaled staircase."""
    return prod(factorial(scale * i + offset) for i in range(n))


def _half(k: int) -> int | None:
    return k // 2 if k >= 0 and k % 2 == 0 else None


@lru_cache(maxsize=None)
def _schur_sigma(parts: tuple[int, ...], n: int) -> MultiPoly:
    """``S_lambda`` written over ``sigma_1..sigma_n``."""
    return express_in_sigma(schur(parts, n), check=False)


def _sigma_to_family(g: MultiPoly, group: GroupSpec) -> MultiPoly:
    """Move a polynomial over sigma generators into the group's class family.

    For Pontrjagin families the input is read as a polynomial in
    ``sigma_i(x^2) = p_i``.
    """
    fam = group.class_family()
    if group.family == "SU":
        return g.restrict({0: 0})
    if group.family == "SO_even":
        return g.embed(fam.size, list(range(group.rank)))
    return g


def q_schur_form(group: GroupSpec, k: int) -> WeinsteinForm:
    """Schur expansion of ``q_y^k`` with its exact factorial weights.

    Parameters
    ----------
    group : GroupSpec
        Any classical family except the torus.
    k : int
        Degree, ``k >= 0``.

    Returns
    -------
    WeinsteinForm
        For U/SU the weights are ``k!/(lambda+rho)!`` over partitions of
        ``k``; for O/SO/Sp they are ``k!/(2(lambda+rho)+eps)!`` over
        partitions of ``k/2`` evaluated on squares, and SO(2n) adds the
        Euler sum over partitions of ``(k-n)/2``. The zero form is returned
        when no partition set applies (odd ``k`` on squares).

    Raises
    ------
    UnsupportedGroup
        For the torus and G2, which have their own constructors.
    """
    if group.family in ("Torus", "G2"):
        raise UnsupportedGroup(f"{group.label} has a dedicated constructor")
    if k < 0:
        raise ValueError("degree must be non-negative")
    n = group.rank
    fam = group.class_family()
    kf = factorial(k)
    pairs = []
    if group.family in ("U", "SU"):
        for lam in enumerate_Km(k, n):
            coef = Fraction(kf, shifted_factorial(lam))
            s = _sigma_to_family(_schur_sigma(lam, n), group)
            pairs.append((coef, s, s))
        return WeinsteinForm.from_pairs(fam, k, pairs, group, "schur")
    half = _half(k)
    eps = 0 if group.family == "SO_even" else group.epsilon
    if half is not None:
        for lam in enumerate_Km(half, n):
            coef = Fraction(kf, shifted_factorial(lam, scale=2, offset=eps))
            s = _sigma_to_family(_schur_sigma(lam, n), group)
            pairs.append((coef, s, s))
    if group.family == "SO_even":
        rest = k - n
        half_e = _half(rest) if rest >= 0 else None
        if half_e is not None:
            evar = MultiPoly.var(fam.euler, fam.size)
            for lam in enumerate_Km(half_e, n):
                coef = Fraction(kf, shifted_factorial(lam, scale=2, offset=1))
                s = _sigma_to_family(_schur_sigma(lam, n), group) * evar
                pairs.append((coef, s, s))
    return WeinsteinForm.from_pairs(fam, k, pairs, group, "schur")


def _class_det(parts: tuple[int, ...], gens: list) -> MultiPoly | None:
    """``det(g_{lambda_i + j - i})`` over the nonzero rows of ``parts``."""
    lam = tuple(p for p in parts if p)
    size = len(lam)
    one = gens[0]
    if size == 0:
        return one
    top = len(gens) - 1
    mat = [
        [gens[lam[i] + j - i] if 0 <= lam[i] + j - i <= top else None for j in range(size)]
        for i in range(size)
    ]
    return determinant(mat, one)


def _class_gens(group: GroupSpec) -> list:
    """``[1, g_1, ..., g_n]`` with ``g_i`` the i-th Chern or Pontrjagin class (None if zero)."""
    fam = group.class_family()
    n = group.rank
    one = MultiPoly.one(fam.size)
    if group.family == "SU":
        # c_1 is absent; generators start at c_2
        return [one, None] + [MultiPoly.var(i, fam.size) for i in range(n - 1)]
    return [one] + [MultiPoly.var(i, fam.size) for i in range(n)]


def q_char_form(group: GroupSpec, m: int) -> WeinsteinForm:
    """``q^m`` written directly with class determinants over conjugate partitions.

    Torus groups return ``(sum_i y_i c_i)^m``. For U/SU the weight of
    ``lambda`` is ``prod_j (n - lambda_j + j - 1)!``; for O/SO_odd/Sp it is
    ``prod_j (2(n - lambda_j + j - 1) + eps)!``. SO(2n) carries two sums,
    each divided by the factorial of its doubled staircase.

    Raises
    ------
    UnsupportedGroup
        For G2.
    """
    if group.family == "G2":
        raise UnsupportedGroup("G2 has no class-determinant form; use q_g2")
    if group.family == "Torus":
        return q_torus_form(group.rank, m)
    n = group.rank
    fam = group.class_family()
    gens = _class_gens(group)
    pairs = []
    if group.family in ("U", "SU"):
        for lam in enumerate_Km_conjugate(m, n):
            coef = prod(factorial(n - lam[j] + j) for j in range(m))
            d = _class_det(lam, gens)
            pairs.append((Fraction(coef), d, d))
        return WeinsteinForm.from_pairs(fam, m, pairs, group, "char")
    half = _half(m)
    if group.family == "SO_even":
        evar = MultiPoly.var(fam.euler, fam.size)
        if half is not None:
            denom = staircase_factorial(half + n, scale=2)
            for lam in enumerate_Km_conjugate(half, n):
                coef = prod(factorial(2 * (n - lam[j] + j)) for j in range(half))
                d = _class_det(lam, gens)
                pairs.append((Fraction(coef, denom), d, d))
        rest = m - n
        half_e = _half(rest) if rest >= 0 else None
        if half_e is not None:
            denom = staircase_factorial((m + n) // 2, scale=2, offset=1)
            for lam in enumerate_Km_conjugate(half_e, n):
                coef = prod(factorial(2 * (n - lam[j] + j) + 1) for j in range(half_e))
                d = _class_det(lam, gens) * evar
                pairs.append((Fraction(coef, denom), d, d))
        return WeinsteinForm.from_pairs(fam, m, pairs, group, "char")
    eps = group.epsilon
    if half is not None:
        for lam in enumerate_Km_conjugate(half, n):
            coef = prod(factorial(2 * (n - lam[j] + j) + eps) for j in range(half))
            d = _class_det(lam, gens)
            pairs.append((Fraction(coef), d, d))
    return WeinsteinForm.from_pairs(fam, m, pairs, group, "char")


def q_torus_form(n: int, m: int) -> WeinsteinForm:
    """``(sum_i y_i c_i)^m`` as a bilinear form over the torus family."""
    fam = torus_family(n)
    lin = MultiPoly.zero(2 * n)
    for i in range(n):
        lin = lin + MultiPoly.var(i, 2 * n) * MultiPoly.var(n + i, 2 * n)
    return WeinsteinForm(fam, m, lin**m, GroupSpec("Torus", n), "torus")


def q_torus(y, m: int) -> SymExpr:
    """``(sum_i y_i c_i)^m`` for a fixed rational vector ``y``.

    Raises
    ------
    ZeroVector
        If ``y`` is zero.
    """
    y = [Fraction(v) for v in y]
    if not any(y):
        raise ZeroVector("y must be nonzero")
    n = len(y)
    fam = torus_family(n)
    lin = MultiPoly(n, {tuple(int(i == j) for j in range(n)): v for i, v in enumerate(y)})
    return SymExpr(fam, lin**m)


def weinstein_form(group: GroupSpec, k: int) -> WeinsteinForm:
    """Invariant of degree ``k`` normalized so that the degree-0 invariant is 1.

    The normalization constant depends only on the group, so forms of
    different degrees of the same group can be combined (as in products).
    """
    if group.family == "Torus":
        return q_torus_form(group.rank, k)
    if group.family == "G2":
        from .special import q_g2

        form, base = q_g2(k), q_g2(0)
    else:
        form, base = q_schur_form(group, k), q_schur_form(group, 0)
    c = Fraction(base.poly.constant_term())
    return form.scaled(1 / c)


def q_product(left: GroupSpec, right: GroupSpec, m: int) -> WeinsteinForm:
    """Invariant of ``left x right`` as the binomial convolution of factor invariants.

    ``q_(y1,y2)^m = sum_i binom(m, i) q_{y1}^i q_{y2}^{m-i}``, with each
    factor normalized by :func:`weinstein_form`. Generator names of the right
    factor are primed when they clash with the left.
    """
    lf, rf = left.class_family(), right.class_family()
    fam = product_family(lf, rf)
    gl, gr = lf.size, rf.size
    G = gl + gr
    # slots: left y, right y, left x, right x
    lpos = list(range(gl)) + list(range(G, G + gl))
    rpos = list(range(gl, G)) + list(range(G + gl, 2 * G))
    acc = MultiPoly.zero(2 * G)
    for i in range(m + 1):
        L = weinstein_form(left, i).poly
        R = weinstein_form(right, m - i).poly
        if not L or not R:
            continue
        acc = acc + L.embed(2 * G, lpos) * R.embed(2 * G, rpos) * comb(m, i)
    return WeinsteinForm(fam, m, acc, (left, right), "product")

"""Closed-form invariants along distinguished orbit families, and the G2 form."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from ..partitions import enumerate_Km, shifted_factorial
from ..symfun import (
    Family,
    MultiPoly,
    SymExpr,
    chern_family,
    exact_divide,
    g2_family,
    h_in_sigma_poly,
    pontrjagin_euler_family,
    reduce_trace_zero,
    schur,
)
from ..symfun.symmetric import elementary_sigma
from ..symfun.unipoly import UniPoly
from .forms import TFamily, WeinsteinForm, bilinear_from_torus
from .groups import GroupSpec

__all__ = [
    "ReducedInvariant",
    "q_u2_reduced",
    "q_so4_reduced",
    "q_special_un",
    "q_g2",
    "chern_h",
    "SPECIAL_CASES",
]

SPECIAL_CASES = ("all_ones", "e1", "perturbed_ones", "e1_plus_te2")


@dataclass(frozen=True)
class ReducedInvariant:
    """``sum_j coefficients[j] * t^powers[j] * basis[j]`` over a rank-2 family.

    ``basis[-1]`` is the class paired with the leading power of ``t``; it
    alone governs the limit orbit ``t -> infinity``.
    """

    family: Family
    m: int
    coefficients: tuple[int, ...]
    powers: tuple[int, ...]
    basis: tuple[SymExpr, ...]

    def to_tfamily(self) -> TFamily:
        t = UniPoly.t()
        return TFamily.from_pairs(
            self.family,
            [(t**p * c, b) for c, p, b in zip(self.coefficients, self.powers, self.basis)],
        )

    def limit_class(self) -> SymExpr:
        return self.basis[-1]


def q_u2_reduced(m: int) -> ReducedInvariant:
    """U(2) invariant at ``y = (1+t, 1-t)`` grouped by ``c1^(m-2j) D^j``, ``D = c1^2 - 4c2``.

    Coefficients are ``binom(m+1, 2j+1)`` on ``t^(2j)``.
    """
    if m < 0 or m % 2:
        raise ValueError("m must be a non-negative even integer")
    fam = chern_family(2)
    c1, c2 = fam.gens()
    D = c1 * c1 - c2 * 4
    js = range(m // 2 + 1)
    return ReducedInvariant(
        fam,
        m,
        tuple(comb(m + 1, 2 * j + 1) for j in js),
        tuple(2 * j for j in js),
        tuple(c1 ** (m - 2 * j) * D**j for j in js),
    )


def q_so4_reduced(m: int) -> ReducedInvariant:
    """SO(4) invariant at ``y = (1+t, 1-t)`` grouped by ``(p1-2e)^(m/2-j) (p1+2e)^j``.

    Coefficients are ``binom(m+2, 2j+1)`` on ``t^(2j)``.
    """
    if m < 0 or m % 2:
        raise ValueError("m must be a non-negative even integer")
    fam = pontrjagin_euler_family(2)
    p1, _, e = fam.gens()
    A, B = p1 - e * 2, p1 + e * 2
    h = m // 2
    js = range(h + 1)
    return ReducedInvariant(
        fam,
        m,
        tuple(comb(m + 2, 2 * j + 1) for j in js),
        tuple(2 * j for j in js),
        tuple(A ** (h - j) * B**j for j in js),
    )


def chern_h(k: int, family: Family) -> SymExpr:
    """``h_k = det(g_{j-i+1})`` in the family's first ``n`` generators (Chern or Pontrjagin).

    ``h_0 = 1`` and ``h_k = 0`` for ``k < 0``.
    """
    n = family.rank
    if k < 0:
        return SymExpr.zero(family)
    g = h_in_sigma_poly(k, n)
    if family.size != n:
        g = g.embed(family.size, list(range(n)))
    return SymExpr(family, g)


def q_special_un(case: str, n: int, m: int, t=None):
    """U(n) invariants at special orbit points.

    Parameters
    ----------
    case : {"all_ones", "e1", "perturbed_ones", "e1_plus_te2"}
        ``y = (1,...,1)``, ``y = e1``, ``y = (1+t, 1, ..., 1)`` and
        ``y = e1 + t e2``.
    n, m : int
        Rank and degree.
    t : rational, optional
        When given, the t-families are evaluated there.

    Returns
    -------
    SymExpr or TFamily
        The first two cases give expressions; the others give families in
        ``t`` unless ``t`` is supplied.
    """
    fam = chern_family(n)
    c1 = fam.gens()[0]
    if case == "all_ones":
        return c1**m
    if case == "e1":
        return chern_h(m, fam)
    T = UniPoly.t()
    if case == "perturbed_ones":
        pairs = [(T**k * comb(m + n - 1, n + k - 1), c1 ** (m - k) * chern_h(k, fam)) for k in range(m + 1)]
    elif case == "e1_plus_te2":
        if n < 2:
            raise ValueError("e1 + t e2 needs n >= 2")
        pairs = []
        for k in range(m // 2 + 1):
            window = UniPoly([1 if k <= i <= m - k else 0 for i in range(m + 1)])
            cls = chern_h(k, fam) * chern_h(m - k, fam) - chern_h(k - 1, fam) * chern_h(m - k + 1, fam)
            pairs.append((window * comb(m + 2 * n - 3, n + k - 2), cls))
    else:
        raise ValueError(f"unknown case {case!r}; expected one of {SPECIAL_CASES}")
    fam_t = TFamily.from_pairs(fam, pairs)
    return fam_t if t is None else fam_t.at(t)


def q_g2(m: int) -> WeinsteinForm:
    """G2 invariant over generators ``u = sigma_2(s)`` and ``v = sigma_3(s)^2``.

    Sums ``2 m!/(lambda+rho)! S_lambda(y) S_lambda(s)`` over partitions of
    ``m+3`` into three parts, restricts both sides to the trace-zero plane
    and divides by ``sigma_3(y) sigma_3(s)``. Partitions with a nonzero last
    part are divided termwise; the rest is divided as an aggregate.

    Raises
    ------
    DivisionNotExact
        If the aggregate is not divisible (an arithmetic fault).
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    fam = g2_family()
    if m % 2:
        # -1 lies in the Weyl group, so odd degrees vanish
        return WeinsteinForm(fam, m, MultiPoly.zero(2 * fam.size), GroupSpec("G2", 2), "g2")
    lp, rp = [0, 1], [2, 3]
    s3 = reduce_trace_zero(elementary_sigma(3, 3))
    termwise = MultiPoly.zero(4)
    aggregate = MultiPoly.zero(4)
    for lam in enumerate_Km(m + 3, 3):
        coef = Fraction(2 * factorial(m), shifted_factorial(lam))
        if lam[2] >= 1:
            # S_lambda = sigma_3 * S_(lambda - 1) in three variables
            red = reduce_trace_zero(schur(tuple(p - 1 for p in lam), 3))
            termwise = termwise + red.embed(4, lp) * red.embed(4, rp) * coef
        else:
            red = reduce_trace_zero(schur(lam, 3))
            aggregate = aggregate + red.embed(4, lp) * red.embed(4, rp) * coef
    if aggregate:
        denom = s3.embed(4, lp) * s3.embed(4, rp)
        termwise = termwise + exact_divide(aggregate, denom)
    return bilinear_from_torus(termwise, fam, m, GroupSpec("G2", 2), "g2")

"""Symmetric polynomials: elementary, complete, alternants and Schur functions.

Everything here returns :class:`MultiPoly` values in ``n`` torus variables,
except :func:`express_in_sigma` and :func:`h_in_sigma_poly`, which return
polynomials over the generator ring ``Q[sigma_1, ..., sigma_n]``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterator, Sequence

from ..partitions import conjugate, rho
from .multipoly import MultiPoly, exact_divide

__all__ = [
    "elementary_sigma",
    "complete_h",
    "alternant",
    "vandermonde",
    "schur",
    "SCHUR_ROUTES",
    "express_in_sigma",
    "h_in_sigma_poly",
    "reduce_trace_zero",
    "is_symmetric",
    "determinant",
    "solve_in_span",
    "perm_sign",
    "NotSymmetric",
]

SCHUR_ROUTES = ("bialternant", "jacobi_trudi_h", "jacobi_trudi_sigma")


class NotSymmetric(ValueError):
    pass


def perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def elementary_sigma(i: int, n: int) -> MultiPoly:
    """``sigma_i`` in ``n`` variables; zero outside ``0 <= i <= n``."""
    if i < 0 or i > n:
        return MultiPoly.zero(n)
    terms = {}
    for idx in combinations(range(n), i):
        e = [0] * n
        for k in idx:
            e[k] = 1
        terms[tuple(e)] = 1
    return MultiPoly(n, terms)


def _compositions(m: int, n: int) -> Iterator[tuple[int, ...]]:
    if n == 1:
        yield (m,)
        return
    for first in range(m, -1, -1):
        for rest in _compositions(m - first, n - 1):
            yield (first,) + rest


def complete_h(m: int, n: int) -> MultiPoly:
    """Sum of all monomials of degree ``m`` in ``n`` variables."""
    if m < 0:
        return MultiPoly.zero(n)
    return MultiPoly(n, {e: 1 for e in _compositions(m, n)})


def alternant(mu: Sequence[int]) -> MultiPoly:
    """``det(x_i^{mu_j})`` in ``len(mu)`` variables."""
    n = len(mu)
    terms: dict[tuple[int, ...], int] = {}
    for perm in permutations(range(n)):
        e = tuple(mu[perm[i]] for i in range(n))
        terms[e] = terms.get(e, 0) + perm_sign(perm)
    return MultiPoly(n, terms)


def vandermonde(n: int) -> MultiPoly:
    """``prod_{i<j} (x_i - x_j)``."""
    return alternant(rho(n))


def determinant(matrix: Sequence[Sequence], one, zero=None):
    """Determinant of a square matrix of ring elements.

    Expands row by row while remembering only the set of columns already
    used. Columns that no later row can reach are pruned, so banded and
    Hessenberg-shaped matrices stay cheap even at size 16 or more. Falsy
    entries are treated as zero.
    """
    size = len(matrix)
    if zero is None:
        zero = one * 0
    if size == 0:
        return one
    last_row = [-1] * size
    for i, row in enumerate(matrix):
        for j in range(size):
            if row[j]:
                last_row[j] = i
    if min(last_row) < 0:
        return zero
    must = [0] * size
    for j, i in enumerate(last_row):
        must[i] |= 1 << j
    required = 0
    states = {0: one}
    for i in range(size):
        required |= must[i]
        row = matrix[i]
        nxt: dict[int, object] = {}
        for used, acc in states.items():
            for j in range(size):
                entry = row[j]
                if not entry or (used >> j) & 1:
                    continue
                new = used | (1 << j)
                if new & required != required:
                    continue
                term = acc * entry
                if bin(used >> (j + 1)).count("1") % 2:
                    term = -term
                nxt[new] = nxt[new] + term if new in nxt else term
        states = {k: v for k, v in nxt.items() if v}
        if not states:
            return zero
    return states.get((1 << size) - 1, zero)


def _strip(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def schur(parts: Sequence[int], n: int, route: str = "bialternant") -> MultiPoly:
    """Schur polynomial ``S_lambda`` in ``n`` variables.

    Parameters
    ----------
    parts : sequence of int
        A partition; trailing zeros are optional.
    n : int
        Number of variables.
    route : {"bialternant", "jacobi_trudi_h", "jacobi_trudi_sigma"}
        ``A_{lambda+rho} / Delta``, ``det(h_{lambda_i+j-i})`` or
        ``det(sigma_{lambda'_i+j-i})``.

    Raises
    ------
    ValueError
        If the partition has more than ``n`` nonzero parts on a route that
        indexes rows by parts, or the route is unknown.
    DivisionNotExact
        If the bialternant quotient leaves a remainder (arithmetic fault).
    """
    lam = _strip(parts)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)) or any(p < 0 for p in lam):
        raise ValueError(f"{tuple(parts)} is not a partition")
    one = MultiPoly.one(n)
    if route == "jacobi_trudi_sigma":
        if not lam:
            return one
        size = lam[0]
        conj = conjugate(lam, size)
        sig = [elementary_sigma(k, n) for k in range(n + 1)]
        mat = [
            [sig[conj[i] + j - i] if 0 <= conj[i] + j - i <= n else None for j in range(size)]
            for i in range(size)
        ]
        return determinant(mat, one)
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more than {n} nonzero parts")
    if route == "bialternant":
        padded = lam + (0,) * (n - len(lam))
        mu = tuple(p + r for p, r in zip(padded, rho(n)))
        return exact_divide(alternant(mu), vandermonde(n))
    if route == "jacobi_trudi_h":
        size = len(lam)
        if size == 0:
            return one
        top = lam[0] + size
        hs = [complete_h(k, n) for k in range(top + 1)]
        mat = [
            [hs[lam[i] + j - i] if lam[i] + j - i >= 0 else None for j in range(size)]
            for i in range(size)
        ]
        return determinant(mat, one)
    raise ValueError(f"unknown route {route!r}; expected one of {SCHUR_ROUTES}")


def is_symmetric(p: MultiPoly) -> bool:
    n = p.nvars
    if n < 2:
        return True
    swap = list(range(n))
    swap[0], swap[1] = 1, 0
    cycle = [(i + 1) % n for i in range(n)]
    return p.permute(swap) == p and p.permute(cycle) == p


def express_in_sigma(p: MultiPoly, check: bool = True) -> MultiPoly:
    """Rewrite a symmetric polynomial in the elementary symmetric basis.

    Returns a polynomial over generators ``sigma_1, ..., sigma_n`` (variable
    ``i`` stands for ``sigma_{i+1}``). Uses repeated leading-term
    cancellation in graded-lex order.

    Raises
    ------
    NotSymmetric
        If ``p`` is not invariant under permutations of its variables.
    """
    n = p.nvars
    if check and not is_symmetric(p):
        raise NotSymmetric("polynomial is not symmetric")
    sig = [elementary_sigma(k, n) for k in range(n + 1)]
    powers: dict[tuple[int, int], MultiPoly] = {}

    def sig_pow(i: int, k: int) -> MultiPoly:
        if (i, k) not in powers:
            powers[(i, k)] = sig[i] ** k
        return powers[(i, k)]

    out: dict[tuple[int, ...], object] = {}
    rest = p
    while rest:
        e, c = rest.leading_term()
        gen_exp = tuple(e[i] - (e[i + 1] if i + 1 < n else 0) for i in range(n))
        if any(k < 0 for k in gen_exp):
            raise NotSymmetric(f"leading exponent {e} is not non-increasing")
        out[gen_exp] = c
        prod = MultiPoly.constant(c, n)
        for i, k in enumerate(gen_exp):
            if k:
                prod = prod * sig_pow(i + 1, k)
        rest = rest - prod
    return MultiPoly(n, out)


def h_in_sigma_poly(m: int, n: int) -> MultiPoly:
    """``h_m`` over generators ``sigma_1..sigma_n`` via the alternating recurrence."""
    gens = MultiPoly.gens(n)
    h = [MultiPoly.one(n)]
    for r in range(1, m + 1):
        acc = MultiPoly.zero(n)
        for j in range(1, min(r, n) + 1):
            term = gens[j - 1] * h[r - j]
            acc = acc + term if j % 2 else acc - term
        h.append(acc)
    if m < 0:
        return MultiPoly.zero(n)
    return h[m]


def reduce_trace_zero(p: MultiPoly) -> MultiPoly:
    """Substitute ``x_n = -(x_1 + ... + x_{n-1})``; result has ``n-1`` variables."""
    n = p.nvars
    if n < 2:
        raise ValueError("need at least two variables")
    gens = MultiPoly.gens(n - 1)
    last = MultiPoly.zero(n - 1)
    for g in gens:
        last = last - g
    return p.substitute(gens + [last])


def _solve_square(mat: list[list[Fraction]]) -> list[list[Fraction]] | None:
    """Inverse of a square rational matrix, or None if singular."""
    size = len(mat)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(mat)]
    for col in range(size):
        piv = next((r for r in range(col, size) if aug[r][col]), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


def solve_in_span(
    target: dict[tuple[int, ...], object],
    basis: Sequence[MultiPoly],
    zero,
) -> list | None:
    """Coefficients ``a_b`` with ``sum_b a_b * basis[b] == target``.

    ``target`` maps torus exponents to coefficients that may themselves be
    ring elements (for instance polynomials in other variables); the basis
    is rational. Returns None when ``target`` is outside the span.
    """
    if not basis:
        return [] if not any(target.values()) else None
    monos = sorted({e for b in basis for e in b.terms} | set(target))
    # greedily pick independent rows (monomials)
    chosen: list[tuple[int, ...]] = []
    rows: list[list[Fraction]] = []
    echelon: list[tuple[int, list[Fraction]]] = []
    for e in monos:
        row = [Fraction(b.coefficient(e)) for b in basis]
        red = list(row)
        for pc, prow in echelon:
            if red[pc]:
                f = red[pc] / prow[pc]
                red = [a - f * b for a, b in zip(red, prow)]
        pivot = next((i for i, v in enumerate(red) if v), None)
        if pivot is None:
            continue
        echelon.append((pivot, red))
        chosen.append(e)
        rows.append(row)
        if len(chosen) == len(basis):
            break
    if len(chosen) < len(basis):
        raise ValueError("basis is linearly dependent")
    inv = _solve_square(rows)
    coeffs = []
    for b in range(len(basis)):
        acc = zero
        for r, e in enumerate(chosen):
            v = target.get(e)
            if v and inv[b][r]:
                acc = acc + v * inv[b][r]
        coeffs.append(acc)
    # verify on every monomial
    for e in monos:
        acc = zero
        for b, cb in enumerate(coeffs):
            c = basis[b].coefficient(e)
            if c and cb:
                acc = acc + cb * c
        if acc != (target.get(e) or zero):
            return None
    return coeffs


def schur_table(m: int, n: int, route: str = "bialternant") -> dict[tuple[int, ...], MultiPoly]:
    from ..partitions import enumerate_Km

    return {lam: schur(lam, n, route) for lam in enumerate_Km(m, n)}


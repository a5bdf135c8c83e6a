"""Exact real-root counting and isolation with Sturm chains.

Signs are taken one-sidedly at the interval endpoints (the sign of the first
nonvanishing derivative), so endpoints that are themselves roots need no
special perturbation. Infinite endpoints use the leading coefficient.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from ..errors import AllZero
from ..symfun.unipoly import UniPoly

__all__ = [
    "Interval",
    "Domain",
    "RootInterval",
    "sturm_chain",
    "sturm_count",
    "isolate_roots",
    "default_precision",
    "simplest_between",
]

DEFAULT_PRECISION = Fraction(1, 10**9)


def default_precision() -> Fraction:
    """Root width bound; ``FATCHECK_PRECISION`` overrides the built-in ``1e-9``."""
    text = os.environ.get("FATCHECK_PRECISION")
    if not text:
        return DEFAULT_PRECISION
    value = Fraction(text)
    if value <= 0:
        raise ValueError("FATCHECK_PRECISION must be positive")
    return value


@dataclass(frozen=True)
class Interval:
    """An interval with rational or infinite (None) endpoints."""

    lo: Fraction | None
    hi: Fraction | None
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self):
        lo = None if self.lo is None else Fraction(self.lo)
        hi = None if self.hi is None else Fraction(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        # infinite ends are never closed
        if lo is None:
            object.__setattr__(self, "lo_closed", False)
        if hi is None:
            object.__setattr__(self, "hi_closed", False)
        if lo is not None and hi is not None:
            if lo > hi or (lo == hi and not (self.lo_closed and self.hi_closed)):
                raise ValueError(f"empty interval {self}")

    def contains(self, x) -> bool:
        x = Fraction(x)
        if self.lo is not None and (x < self.lo or (x == self.lo and not self.lo_closed)):
            return False
        if self.hi is not None and (x > self.hi or (x == self.hi and not self.hi_closed)):
            return False
        return True

    def __str__(self) -> str:
        left = "(-inf" if self.lo is None else ("[" if self.lo_closed else "(") + str(self.lo)
        right = "inf)" if self.hi is None else str(self.hi) + ("]" if self.hi_closed else ")")
        return f"{left}, {right}"


class Domain:
    """A sorted union of disjoint intervals."""

    __slots__ = ("intervals",)

    def __init__(self, intervals: Iterable[Interval]):
        ivs = sorted(intervals, key=lambda iv: (iv.lo is not None, iv.lo if iv.lo is not None else 0))
        for a, b in zip(ivs, ivs[1:]):
            if a.hi is None or b.lo is None or a.hi > b.lo or (
                a.hi == b.lo and a.hi_closed and b.lo_closed
            ):
                raise ValueError("domain intervals must be disjoint")
        self.intervals = tuple(ivs)

    @classmethod
    def real_line(cls) -> "Domain":
        return cls([Interval(None, None)])

    @classmethod
    def closed(cls, a, b) -> "Domain":
        return cls([Interval(a, b)])

    @classmethod
    def at_most(cls, a, closed: bool = True) -> "Domain":
        return cls([Interval(None, a, hi_closed=closed)])

    @classmethod
    def at_least(cls, a, closed: bool = True) -> "Domain":
        return cls([Interval(a, None, lo_closed=closed)])

    @classmethod
    def parse(cls, text: str) -> "Domain":
        """Parse ``full``, ``t<=Q``, ``t<Q``, ``t>=Q``, ``t>Q`` or ``a,b`` (closed)."""
        s = text.replace(" ", "").lower()
        if s in ("full", "r", "real"):
            return cls.real_line()
        m = re.fullmatch(r"t(<=|<|>=|>)(.+)", s)
        if m:
            op, val = m.group(1), Fraction(m.group(2))
            if op.startswith("<"):
                return cls.at_most(val, closed=op == "<=")
            return cls.at_least(val, closed=op == ">=")
        s = s.removeprefix("interval")
        parts = s.split(",")
        if len(parts) == 2:
            return cls.closed(Fraction(parts[0]), Fraction(parts[1]))
        raise ValueError(f"cannot parse domain {text!r}")

    def contains(self, x) -> bool:
        return any(iv.contains(x) for iv in self.intervals)

    def finite_points(self) -> list[Fraction]:
        pts = []
        for iv in self.intervals:
            pts += [p for p in (iv.lo, iv.hi) if p is not None]
        return pts

    def __str__(self) -> str:
        return " U ".join(str(iv) for iv in self.intervals)

    def __repr__(self) -> str:
        return f"Domain({self})"


@dataclass(frozen=True)
class RootInterval:
    """A certified root: ``lo <= root <= hi``; ``exact`` is set for rational roots."""

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1
    exact: Fraction | None = None

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def value(self) -> Fraction:
        return self.exact if self.exact is not None else (self.lo + self.hi) / 2

    def __float__(self) -> float:
        return float(self.value)

    def contains(self, x) -> bool:
        return self.lo <= Fraction(x) <= self.hi

    def __str__(self) -> str:
        tag = f" (x{self.multiplicity})" if self.multiplicity > 1 else ""
        if self.exact is not None:
            return f"{self.exact}{tag}"
        return f"[{float(self.lo):.12g}, {float(self.hi):.12g}]{tag}"


# sign machinery -----------------------------------------------------------------


def sturm_chain(p: UniPoly) -> list[UniPoly]:
    """Signed remainder sequence of ``p`` and ``p'``."""
    chain = [p, p.derivative()]
    while chain[-1]:
        r = chain[-2] % chain[-1]
        if not r:
            break
        chain.append(-r)
    return [f for f in chain if f]


def _sign(v) -> int:
    return (v > 0) - (v < 0)


class _SignPoly:
    """A positive integer multiple of a polynomial and its derivatives.

    Only signs are ever read, so the rescaling is harmless and lets every
    evaluation at ``a/b`` run in integers on ``b^d f(a/b)``.
    """

    __slots__ = ("derivs",)

    def __init__(self, f: UniPoly):
        den = 1
        for c in f.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in f.coeffs]
        self.derivs = [ints]
        while len(ints) > 1:
            ints = [i * c for i, c in enumerate(ints)][1:]
            self.derivs.append(ints)

    @property
    def degree(self) -> int:
        return len(self.derivs[0]) - 1

    @staticmethod
    def _eval_sign(coeffs: list[int], x: Fraction) -> int:
        a, b = x.numerator, x.denominator
        acc, bp = coeffs[-1], 1
        for c in reversed(coeffs[:-1]):
            bp *= b
            acc = acc * a + c * bp
        return (acc > 0) - (acc < 0)

    def sign_at(self, x: Fraction) -> int:
        return self._eval_sign(self.derivs[0], x) if self.derivs[0] else 0

    def side_sign(self, x: Fraction, right: bool) -> int:
        """Sign just right (or left) of ``x``: the first nonvanishing derivative decides."""
        for k, coeffs in enumerate(self.derivs):
            s = self._eval_sign(coeffs, x)
            if s:
                return s if right or k % 2 == 0 else -s
        return 0

    def inf_sign(self, positive: bool) -> int:
        lead = self.derivs[0][-1]
        s = (lead > 0) - (lead < 0)
        return s if positive or self.degree % 2 == 0 else -s


def _variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _v(chain: list[_SignPoly], x: Fraction | None, right: bool, at_inf: int = 0) -> int:
    if at_inf:
        return _variations([f.inf_sign(at_inf > 0) for f in chain])
    return _variations([f.side_sign(x, right) for f in chain])


def _count_interval(chain: list[_SignPoly], iv: Interval) -> int:
    """Distinct roots in ``iv`` of the squarefree polynomial heading ``chain``."""
    p = chain[0]
    if iv.lo is not None and iv.lo == iv.hi:
        return int(not p.sign_at(iv.lo))
    va = _v(chain, None, True, -1) if iv.lo is None else _v(chain, iv.lo, True)
    vb = _v(chain, None, False, +1) if iv.hi is None else _v(chain, iv.hi, False)
    n = va - vb
    if iv.lo is not None and iv.lo_closed and not p.sign_at(iv.lo):
        n += 1
    if iv.hi is not None and iv.hi_closed and not p.sign_at(iv.hi):
        n += 1
    return n


def _sign_chain(f: UniPoly) -> list[_SignPoly]:
    return [_SignPoly(g) for g in sturm_chain(f)]


def _as_domain(domain) -> Domain:
    if domain is None:
        return Domain.real_line()
    if isinstance(domain, Domain):
        return domain
    if isinstance(domain, Interval):
        return Domain([domain])
    if isinstance(domain, str):
        return Domain.parse(domain)
    return Domain(domain)


def sturm_count(p: UniPoly, domain=None) -> int:
    """Number of distinct real roots of ``p`` in ``domain`` (default: the real line).

    Raises
    ------
    AllZero
        If ``p`` is the zero polynomial.
    """
    if not p:
        raise AllZero("polynomial vanishes identically")
    dom = _as_domain(domain)
    if p.degree == 0:
        return 0
    sf = p.squarefree_part()
    chain = _sign_chain(sf)
    return sum(_count_interval(chain, iv) for iv in dom.intervals)


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with the smallest denominator in ``[lo, hi]`` (Stern-Brocot)."""
    if lo > hi:
        raise ValueError("empty range")
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_between(-hi, -lo)
    fl = lo.numerator // lo.denominator
    if fl == lo:
        return Fraction(fl)
    if fl + 1 <= hi:
        return Fraction(fl + 1)
    # lo and hi share the integer part; recurse on reciprocals of fractional parts
    rest = simplest_between(1 / (hi - fl), 1 / (lo - fl))
    return fl + 1 / rest


def _cauchy_bound(p: UniPoly) -> Fraction:
    lead = abs(p.leading())
    return 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))


def _isolate_squarefree(f: UniPoly, dom: Domain, precision: Fraction, mult: int) -> list[RootInterval]:
    chain = _sign_chain(f)

    def zero(x) -> bool:
        return not chain[0].sign_at(x)

    bound = _cauchy_bound(f)
    out: list[RootInterval] = []
    for iv in dom.intervals:
        lo = -bound if iv.lo is None else iv.lo
        hi = bound if iv.hi is None else iv.hi
        lo_c, hi_c = iv.lo_closed, iv.hi_closed
        if lo > hi:
            continue
        if lo == hi:
            if lo_c and hi_c and zero(lo):
                out.append(RootInterval(lo, lo, mult, lo))
            continue
        # endpoint roots are recorded exactly and then excluded
        if lo_c and zero(lo):
            out.append(RootInterval(lo, lo, mult, lo))
        if hi_c and zero(hi):
            out.append(RootInterval(hi, hi, mult, hi))
        stack = [(lo, hi)]
        while stack:
            a, b = stack.pop()
            n = _count_interval(chain, Interval(a, b, False, False))
            if n == 0:
                continue
            if n == 1:
                c = simplest_between(a, b)
                if a < c < b and zero(c):
                    out.append(RootInterval(c, c, mult, c))
                    continue
                if b - a <= precision:
                    out.append(RootInterval(a, b, mult, None))
                    continue
            mid = (a + b) / 2
            if zero(mid):
                out.append(RootInterval(mid, mid, mult, mid))
            stack.append((mid, b))
            stack.append((a, mid))
    return out


def isolate_roots(p: UniPoly, domain=None, precision=None) -> list[RootInterval]:
    """Certified isolating intervals for the distinct real roots of ``p`` in ``domain``.

    Parameters
    ----------
    p : UniPoly
    domain : Domain, Interval, str or None
        Defaults to the real line.
    precision : rational, optional
        Maximum width of a non-exact interval; defaults to
        :func:`default_precision`.

    Returns
    -------
    list of RootInterval
        Sorted by location, with multiplicities from a squarefree
        decomposition. Rational roots found along the way are exact.

    Raises
    ------
    AllZero
        If ``p`` is the zero polynomial.
    """
    if not p:
        raise AllZero("polynomial vanishes identically")
    prec = default_precision() if precision is None else Fraction(precision)
    dom = _as_domain(domain)
    roots: list[RootInterval] = []
    for f, mult in p.squarefree_factors():
        roots += _isolate_squarefree(f, dom, prec, mult)
    roots.sort(key=lambda r: (r.lo, r.hi))
    return roots

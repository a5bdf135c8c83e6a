"""Polynomials over named generator families (Chern, Pontrjagin, Euler, ...).

A :class:`Family` fixes the generator names, their degrees and their images
as symmetric polynomials on a maximal torus. A :class:`SymExpr` is a
polynomial over one family, kept in canonical form (``e^2`` rewritten to
``p_n``; ``c_1`` simply absent from special-unitary families).

Degrees are "class degrees": ``c_i`` has degree ``i``, ``p_i`` degree
``2i`` and ``e`` degree ``n``, so a top-degree number over a ``2m``
dimensional base has class degree ``m``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .multipoly import MultiPoly, exact_divide
from .symmetric import (
    elementary_sigma,
    express_in_sigma,
    reduce_trace_zero,
    solve_in_span,
)

__all__ = [
    "Family",
    "SymExpr",
    "sigma_family",
    "torus_family",
    "chern_family",
    "pontrjagin_family",
    "pontrjagin_euler_family",
    "g2_family",
    "product_family",
    "euler_sign",
    "parse_monomial",
    "format_monomial",
]


def euler_sign(n: int) -> int:
    """Orientation sign ``s`` in ``e = s * sigma_n(x)`` for rank ``n``."""
    return -1 if (n * (n - 1) // 2) % 2 else 1


@dataclass(frozen=True, eq=False)
class Family:
    """Named generators with degrees and torus images.

    Attributes
    ----------
    kind : str
        One of ``sigma``, ``torus``, ``chern``, ``pontrjagin``,
        ``pontrjagin_euler``, ``g2``, ``product``.
    rank : int
        Number of torus coordinates the images live in.
    names, degrees, images :
        Generator data, index-aligned.
    trace_zero : bool
        Torus points are constrained to ``sum(x) == 0``.
    euler : int or None
        Index of the Euler generator; its square is rewritten to ``top``.
    top : int or None
        Index of ``p_n`` for the Euler relation.
    """

    kind: str
    rank: int
    names: tuple[str, ...]
    degrees: tuple[int, ...]
    images: tuple[MultiPoly, ...] = field(repr=False)
    trace_zero: bool = False
    euler: int | None = None
    top: int | None = None
    label: str = ""

    def __eq__(self, other) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return (self.kind, self.rank, self.names, self.trace_zero) == (
            other.kind,
            other.rank,
            other.names,
            other.trace_zero,
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.rank, self.names, self.trace_zero))

    @property
    def size(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r}; expected one of {self.names}") from None

    def weight(self, exponent: Sequence[int]) -> int:
        return sum(d * k for d, k in zip(self.degrees, exponent))

    def canonical(self, poly: MultiPoly) -> MultiPoly:
        """Apply the defining relations (only ``e^2 = p_n`` is needed)."""
        if self.euler is None or not any(e[self.euler] > 1 for e in poly.terms):
            return poly
        out: dict[tuple[int, ...], object] = {}
        for e, c in poly.terms.items():
            k = e[self.euler]
            if k > 1:
                ne = list(e)
                ne[self.euler] = k % 2
                ne[self.top] += k // 2
                e = tuple(ne)
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.size, out)

    def monomials(self, degree: int) -> list[tuple[int, ...]]:
        """Canonical generator monomials of the given class degree, grlex descending."""
        out: list[tuple[int, ...]] = []

        def rec(i: int, left: int, acc: list[int]):
            if i == self.size:
                if left == 0:
                    out.append(tuple(acc))
                return
            cap = left // self.degrees[i]
            if i == self.euler:
                cap = min(cap, 1)
            for k in range(cap, -1, -1):
                acc.append(k)
                rec(i + 1, left - k * self.degrees[i], acc)
                acc.pop()

        if degree >= 0:
            rec(0, degree, [])
        return out

    def torus_image(self, poly: MultiPoly) -> MultiPoly:
        """Substitute generator images; result lives in ``rank`` variables."""
        if not poly:
            return MultiPoly.zero(self.rank)
        return poly.substitute(list(self.images))

    def reduced_image(self, poly: MultiPoly) -> MultiPoly:
        """Torus image, restricted to ``sum(x) == 0`` for trace-zero families."""
        img = self.torus_image(poly)
        return reduce_trace_zero(img) if self.trace_zero else img

    def from_torus(self, p: MultiPoly) -> MultiPoly:
        """Generator polynomial whose torus image is ``p``.

        Raises
        ------
        ValueError
            If ``p`` is not in the image of this family.
        """
        if p.nvars != self.rank:
            raise ValueError("variable count does not match the family rank")
        if not p:
            return MultiPoly.zero(self.size)
        fast = self._from_torus_fast(p)
        if fast is not None:
            return fast
        return self._from_torus_linear(p)

    def _from_torus_fast(self, p: MultiPoly) -> MultiPoly | None:
        n = self.rank
        if self.kind == "torus":
            return p
        if self.kind in ("sigma", "chern"):
            g = express_in_sigma(p)
            if self.trace_zero:
                # drop every monomial containing sigma_1
                g = MultiPoly(n, {e: c for e, c in g.terms.items() if e[0] == 0})
                return g.restrict({0: 0}) if g else MultiPoly.zero(self.size)
            return g
        if self.kind in ("pontrjagin", "pontrjagin_euler"):
            even = {e: c for e, c in p.terms.items() if all(k % 2 == 0 for k in e)}
            odd = {e: c for e, c in p.terms.items() if e not in even}
            halved = MultiPoly(n, {tuple(k // 2 for k in e): c for e, c in even.items()})
            g_even = express_in_sigma(halved) if halved else MultiPoly.zero(n)
            if self.kind == "pontrjagin":
                if odd:
                    raise ValueError("polynomial is not even in every variable")
                return g_even
            out = g_even.embed(self.size, list(range(n)))
            if odd:
                q = exact_divide(MultiPoly(n, odd), elementary_sigma(n, n))
                if any(k % 2 for e in q.terms for k in e):
                    raise ValueError("polynomial is not invariant under even sign changes")
                g_odd = express_in_sigma(MultiPoly(n, {tuple(k // 2 for k in e): c for e, c in q.terms.items()}))
                evar = MultiPoly.var(self.euler, self.size)
                out = out + g_odd.embed(self.size, list(range(n))) * evar * euler_sign(n)
            return self.canonical(out)
        return None

    def _from_torus_linear(self, p: MultiPoly) -> MultiPoly:
        target_poly = reduce_trace_zero(p) if self.trace_zero else p
        out: dict[tuple[int, ...], object] = {}
        for d in sorted({sum(e) for e in p.terms}):
            part = target_poly.homogeneous_part(d)
            if not part:
                continue
            monos = self.monomials(d)
            basis = [self.reduced_image(MultiPoly.monomial(e)) for e in monos]
            coeffs = solve_in_span(dict(part.terms), basis, Fraction(0))
            if coeffs is None:
                raise ValueError(f"degree {d} part is not expressible in {self.names}")
            for e, c in zip(monos, coeffs):
                if c:
                    out[e] = c
        return MultiPoly(self.size, out)

    def gens(self) -> list["SymExpr"]:
        return [SymExpr(self, MultiPoly.var(i, self.size)) for i in range(self.size)]


# constructors -------------------------------------------------------------


def _x(n: int) -> list[MultiPoly]:
    return MultiPoly.gens(n)


@lru_cache(maxsize=None)
def sigma_family(n: int) -> Family:
    return Family(
        "sigma",
        n,
        tuple(f"sigma{i}" for i in range(1, n + 1)),
        tuple(range(1, n + 1)),
        tuple(elementary_sigma(i, n) for i in range(1, n + 1)),
        label=f"sigma({n})",
    )


@lru_cache(maxsize=None)
def torus_family(n: int) -> Family:
    return Family(
        "torus",
        n,
        tuple(f"c{i}" for i in range(1, n + 1)),
        (1,) * n,
        tuple(_x(n)),
        label=f"T^{n}",
    )


@lru_cache(maxsize=None)
def chern_family(n: int, su: bool = False) -> Family:
    start = 2 if su else 1
    if su and n < 2:
        raise ValueError("SU(n) needs n >= 2")
    return Family(
        "chern",
        n,
        tuple(f"c{i}" for i in range(start, n + 1)),
        tuple(range(start, n + 1)),
        tuple(elementary_sigma(i, n) for i in range(start, n + 1)),
        trace_zero=su,
        label=f"{'SU' if su else 'U'}({n})",
    )


def _squares(n: int) -> list[MultiPoly]:
    return [g * g for g in _x(n)]


@lru_cache(maxsize=None)
def pontrjagin_family(n: int) -> Family:
    sq = _squares(n)
    return Family(
        "pontrjagin",
        n,
        tuple(f"p{i}" for i in range(1, n + 1)),
        tuple(2 * i for i in range(1, n + 1)),
        tuple(elementary_sigma(i, n).substitute(sq) for i in range(1, n + 1)),
        label=f"pontrjagin({n})",
    )


@lru_cache(maxsize=None)
def pontrjagin_euler_family(n: int) -> Family:
    base = pontrjagin_family(n)
    return Family(
        "pontrjagin_euler",
        n,
        base.names + ("e",),
        base.degrees + (n,),
        base.images + (elementary_sigma(n, n) * euler_sign(n),),
        euler=n,
        top=n - 1,
        label=f"pontrjagin_euler({n})",
    )


@lru_cache(maxsize=None)
def g2_family() -> Family:
    """Generators ``u = sigma_2(s)`` and ``v = sigma_3(s^2)`` on the plane ``sum(s) = 0``."""
    s3 = elementary_sigma(3, 3)
    return Family(
        "g2",
        3,
        ("u", "v"),
        (2, 6),
        (elementary_sigma(2, 3), s3 * s3),
        trace_zero=True,
        label="G2",
    )


def product_family(left: Family, right: Family, rename: Mapping[str, str] | None = None) -> Family:
    """Generators of both factors side by side, torus coordinates concatenated.

    Clashing names on the right are primed unless ``rename`` says otherwise.
    """
    if left.trace_zero or right.trace_zero:
        raise ValueError("products of trace-zero factors are not supported")
    rename = dict(rename or {})
    names_r = []
    for nm in right.names:
        new = rename.get(nm, nm)
        while new in left.names or new in names_r:
            new += "'"
        names_r.append(new)
    n = left.rank + right.rank
    imgs = [im.embed(n, list(range(left.rank))) for im in left.images]
    imgs += [im.embed(n, list(range(left.rank, n))) for im in right.images]
    euler = left.euler if left.euler is not None else (
        None if right.euler is None else right.euler + left.size
    )
    top = left.top if left.euler is not None else (
        None if right.euler is None else right.top + left.size
    )
    if left.euler is not None and right.euler is not None:
        raise ValueError("at most one Euler generator is supported in a product")
    return Family(
        "product",
        n,
        left.names + tuple(names_r),
        left.degrees + right.degrees,
        tuple(imgs),
        euler=euler,
        top=top,
        label=f"{left.label} x {right.label}",
    )


# monomial text ------------------------------------------------------------

_FACTOR = re.compile(r"^\s*([A-Za-z][A-Za-z0-9_']*)\s*(?:\^\s*(\d+))?\s*$")


def parse_monomial(text: str, family: Family) -> tuple[int, ...]:
    """Parse ``c1^2*c2`` style text into an exponent vector.

    Raises
    ------
    ValueError
        On syntax errors, unknown generators, or non-canonical monomials.
    """
    exp = [0] * family.size
    text = text.strip()
    if text in ("1", ""):
        return tuple(exp)
    for factor in text.split("*"):
        m = _FACTOR.match(factor)
        if not m:
            raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
        name, power = m.group(1), int(m.group(2) or 1)
        if name not in family.names:
            raise ValueError(f"unknown generator {name!r} for {family.label}; expected {family.names}")
        exp[family.index(name)] += power
    if family.euler is not None and exp[family.euler] > 1:
        raise ValueError(f"{text!r} is not reduced: use p{family.top + 1} for e^2")
    return tuple(exp)


def format_monomial(exp: Sequence[int], family: Family) -> str:
    parts = [n if k == 1 else f"{n}^{k}" for n, k in zip(family.names, exp) if k]
    return "*".join(parts) or "1"


# expressions -----------------------------------------------------------------


class SymExpr:
    """A polynomial over one generator :class:`Family`, in canonical form."""

    __slots__ = ("family", "poly")

    def __init__(self, family: Family, poly: MultiPoly):
        if poly.nvars != family.size:
            raise ValueError("polynomial does not match family size")
        self.family = family
        self.poly = family.canonical(poly)

    @classmethod
    def zero(cls, family: Family) -> "SymExpr":
        return cls(family, MultiPoly.zero(family.size))

    @classmethod
    def constant(cls, family: Family, c) -> "SymExpr":
        return cls(family, MultiPoly.constant(c, family.size))

    @classmethod
    def from_terms(cls, family: Family, terms: Mapping[str, object]) -> "SymExpr":
        """Build from ``{"c1^2": 3, "c2": -1}`` style text keys."""
        return cls(family, MultiPoly(family.size, {parse_monomial(k, family): Fraction(v) for k, v in terms.items()}))

    @classmethod
    def from_torus(cls, family: Family, p: MultiPoly) -> "SymExpr":
        return cls(family, family.from_torus(p))

    def _lift(self, other) -> MultiPoly:
        if isinstance(other, SymExpr):
            if other.family != self.family:
                raise ValueError(f"family mismatch: {self.family.label} vs {other.family.label}")
            return other.poly
        return MultiPoly.constant(other, self.family.size)

    def __add__(self, other):
        return SymExpr(self.family, self.poly + self._lift(other))

    __radd__ = __add__

    def __sub__(self, other):
        return SymExpr(self.family, self.poly - self._lift(other))

    def __rsub__(self, other):
        return SymExpr(self.family, self._lift(other) - self.poly)

    def __neg__(self):
        return SymExpr(self.family, -self.poly)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymExpr(self.family, self.poly.scale(other))
        return SymExpr(self.family, self.poly * self._lift(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return SymExpr(self.family, self.poly**k)

    def __eq__(self, other) -> bool:
        if isinstance(other, SymExpr):
            return self.family == other.family and self.poly == other.poly
        if isinstance(other, (int, Fraction)):
            return self.poly == MultiPoly.constant(other, self.family.size)
        return NotImplemented

    def __hash__(self):
        return hash((self.family, self.poly))

    def __bool__(self) -> bool:
        return bool(self.poly)

    def __repr__(self) -> str:
        return f"SymExpr[{self.family.label}]({self})"

    def __str__(self) -> str:
        return self.poly.to_str(list(self.family.names))

    def terms(self) -> Iterator[tuple[str, Fraction]]:
        for e, c in self.poly.sorted_terms():
            yield format_monomial(e, self.family), Fraction(c)

    def degrees(self) -> set[int]:
        return {self.family.weight(e) for e in self.poly.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def coefficient(self, monomial: str | Sequence[int]):
        e = parse_monomial(monomial, self.family) if isinstance(monomial, str) else tuple(monomial)
        return Fraction(self.poly.coefficient(e))

    def to_torus(self) -> MultiPoly:
        return self.family.torus_image(self.poly)

    def evaluate(self, values: Sequence) -> object:
        """Substitute values (numbers or ring elements) for the generators."""
        return self.poly.evaluate(list(values))

    def pair(self, numbers: Mapping[tuple[int, ...], Fraction]) -> Fraction:
        """Linear pairing with characteristic numbers keyed by exponent.

        Raises
        ------
        KeyError
            If a monomial of the expression has no number.
        """
        total = Fraction(0)
        for e, c in self.poly.terms.items():
            if e not in numbers:
                raise KeyError(format_monomial(e, self.family))
            total += c * numbers[e]
        return total

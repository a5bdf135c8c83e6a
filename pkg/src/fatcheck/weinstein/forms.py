"""Bilinear invariant forms and their specializations along orbit curves.

A :class:`WeinsteinForm` stores one polynomial over ``2g`` generator
variables: the first ``g`` are the generators evaluated at the orbit point
``y`` and the last ``g`` are the characteristic classes of the bundle. Both
sides use the same :class:`~fatcheck.symfun.Family`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from ..errors import DegreeMismatch, MissingClassNumber, ZeroVector
from ..symfun import Family, MultiPoly, SymExpr, format_monomial, solve_in_span
from ..symfun.symmetric import reduce_trace_zero
from ..symfun.unipoly import UniPoly

__all__ = [
    "FormTerm",
    "WeinsteinForm",
    "TFamily",
    "positive_ratio",
    "bilinear_from_torus",
    "canonical_pair",
]


def canonical_pair(poly: MultiPoly, family: Family) -> MultiPoly:
    """Apply ``e^2 = p_n`` separately on the y-side and the x-side."""
    if family.euler is None:
        return poly
    g = family.size
    spots = [(family.euler, family.top), (g + family.euler, g + family.top)]
    if not any(e[i] > 1 for e in poly.terms for i, _ in spots):
        return poly
    out: dict[tuple[int, ...], object] = {}
    for e, c in poly.terms.items():
        ne = list(e)
        for i, top in spots:
            if ne[i] > 1:
                ne[top] += ne[i] // 2
                ne[i] %= 2
        key = tuple(ne)
        out[key] = out.get(key, 0) + c
    return MultiPoly(poly.nvars, out)


def positive_ratio(a: MultiPoly, b: MultiPoly) -> Fraction | None:
    """The constant ``c > 0`` with ``a == c * b``, or None.

    Two zero polynomials compare as equal with ratio 1.
    """
    if not a and not b:
        return Fraction(1)
    if a.terms.keys() != b.terms.keys():
        return None
    ratio = None
    for e, c in a.terms.items():
        q = Fraction(c) / Fraction(b.terms[e])
        if ratio is None:
            ratio = q
        elif q != ratio:
            return None
    return ratio if ratio > 0 else None


@dataclass(frozen=True)
class FormTerm:
    """One ``coefficient * y_part(y) * x_part(classes)`` record."""

    coefficient: Fraction
    y_part: SymExpr
    x_part: SymExpr

    def __str__(self) -> str:
        return f"y:{self.y_part} x:{self.x_part} coeff:{self.coefficient}"


class WeinsteinForm:
    """The invariant ``q_y^k`` of a group as a bilinear generator polynomial.

    Parameters
    ----------
    family : Family
        Generators used on both sides.
    k : int
        Degree; the x-side has class degree ``k``.
    poly : MultiPoly
        Polynomial over ``2 * family.size`` variables, y-generators first.
    group : object, optional
        The :class:`GroupSpec` (or a tuple of them for products).
    """

    __slots__ = ("family", "k", "poly", "group", "note")

    def __init__(self, family: Family, k: int, poly: MultiPoly, group=None, note: str = ""):
        if poly.nvars != 2 * family.size:
            raise ValueError("form polynomial must have two copies of the generators")
        self.family = family
        self.k = k
        self.poly = canonical_pair(poly, family)
        self.group = group
        self.note = note

    # construction -------------------------------------------------------------
    @classmethod
    def from_pairs(cls, family: Family, k: int, pairs, group=None, note: str = "") -> "WeinsteinForm":
        """Sum of ``coef * Y (x) X`` for ``(coef, Y, X)`` generator polynomials."""
        g = family.size
        acc: dict[tuple[int, ...], object] = {}
        for coef, ypoly, xpoly in pairs:
            if not coef or not ypoly or not xpoly:
                continue
            for ey, cy in ypoly.terms.items():
                for ex, cx in xpoly.terms.items():
                    key = ey + ex
                    acc[key] = acc.get(key, 0) + coef * cy * cx
        return cls(family, k, MultiPoly(2 * g, acc), group, note)

    # protocol -------------------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.poly)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeinsteinForm):
            return NotImplemented
        return self.family == other.family and self.k == other.k and self.poly == other.poly

    def __hash__(self):
        return hash((self.family, self.k, self.poly))

    def __repr__(self) -> str:
        return f"WeinsteinForm[{self.family.label}, k={self.k}]({len(self.poly)} terms)"

    def scaled(self, c) -> "WeinsteinForm":
        return WeinsteinForm(self.family, self.k, self.poly.scale(Fraction(c)), self.group, self.note)

    def ratio_to(self, other: "WeinsteinForm") -> Fraction | None:
        """``c > 0`` with ``self == c * other`` (exact), else None."""
        if self.family != other.family:
            raise ValueError(f"family mismatch: {self.family.label} vs {other.family.label}")
        return positive_ratio(self.poly, other.poly)

    def equivalent(self, other: "WeinsteinForm") -> bool:
        """Equal up to one positive rational constant."""
        return self.ratio_to(other) is not None

    # views ----------------------------------------------------------------------
    def _split(self, e: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        g = self.family.size
        return e[:g], e[g:]

    def terms(self) -> list[FormTerm]:
        """Records grouped by x-monomial, each with a rational y-side expression.

        The y-side polynomial of each record is scaled so its leading
        coefficient is 1; the scale moves into ``coefficient``.
        """
        groups: dict[tuple[int, ...], dict[tuple[int, ...], object]] = {}
        for e, c in self.poly.terms.items():
            ey, ex = self._split(e)
            groups.setdefault(ex, {})[ey] = c
        fam = self.family
        out = []
        for ex in sorted(groups, key=lambda v: (fam.weight(v), v), reverse=True):
            ypoly = MultiPoly(fam.size, groups[ex])
            _, lead = ypoly.leading_term()
            lead = Fraction(lead)
            out.append(
                FormTerm(
                    lead,
                    SymExpr(fam, ypoly.scale(1 / lead)),
                    SymExpr(fam, MultiPoly.monomial(ex)),
                )
            )
        return out

    def x_monomials(self) -> list[tuple[int, ...]]:
        seen = {self._split(e)[1] for e in self.poly.terms}
        return sorted(seen, key=lambda v: (self.family.weight(v), v), reverse=True)

    def to_records(self) -> str:
        return "\n".join(str(t) for t in self.terms())

    def __str__(self) -> str:
        return " + ".join(f"({t.coefficient})*[{t.y_part}]*{t.x_part}" for t in self.terms()) or "0"

    # evaluation -----------------------------------------------------------------
    def _gen_values(self, y: Sequence, one=None) -> list:
        fam = self.family
        y = list(y)
        if len(y) != fam.rank:
            raise ValueError(f"{fam.label} needs {fam.rank} torus coordinates, got {len(y)}")
        if fam.trace_zero:
            total = sum(y[1:], y[0])
            if total != 0:
                raise ValueError("trace-zero family needs coordinates summing to zero")
        return [img.evaluate(y, one=one) for img in fam.images]

    def at_y(self, y: Sequence) -> SymExpr:
        """Specialize the y-side at a rational torus point; returns an x-side expression."""
        if not any(Fraction(v) for v in y):
            raise ZeroVector("orbit point must be nonzero")
        vals = [Fraction(v) for v in self._gen_values([Fraction(v) for v in y])]
        out: dict[tuple[int, ...], Fraction] = {}
        for e, c in self.poly.terms.items():
            ey, ex = self._split(e)
            v = Fraction(c)
            for val, k in zip(vals, ey):
                if k:
                    v *= val**k
            if v:
                out[ex] = out.get(ex, 0) + v
        return SymExpr(self.family, MultiPoly(self.family.size, out))

    def at_curve(self, coords: Sequence[UniPoly]) -> "TFamily":
        """Substitute ``y = coords(t)``; returns x-monomial -> polynomial in ``t``."""
        vals = self._gen_values(list(coords), one=UniPoly.one())
        cache: dict[tuple[int, int], UniPoly] = {}

        def power(i: int, k: int) -> UniPoly:
            if (i, k) not in cache:
                cache[(i, k)] = vals[i] ** k
            return cache[(i, k)]

        out: dict[tuple[int, ...], UniPoly] = {}
        for e, c in self.poly.terms.items():
            ey, ex = self._split(e)
            term = UniPoly.const(c)
            for i, k in enumerate(ey):
                if k:
                    term = term * power(i, k)
            out[ex] = out.get(ex, UniPoly()) + term
        return TFamily(self.family, {e: p for e, p in out.items() if p})

    def value(self, y: Sequence, x: Sequence) -> Fraction:
        """Numeric value at torus points ``y`` and ``x`` (both exact)."""
        gy = self._gen_values([Fraction(v) for v in y])
        gx = self._gen_values([Fraction(v) for v in x])
        return Fraction(self.poly.evaluate(list(gy) + list(gx)))

    def to_torus(self) -> MultiPoly:
        """Image in ``2 * rank`` torus variables (reduced for trace-zero families)."""
        fam = self.family
        imgs = [reduce_trace_zero(i) if fam.trace_zero else i for i in fam.images]
        R = imgs[0].nvars
        left = [im.embed(2 * R, list(range(R))) for im in imgs]
        right = [im.embed(2 * R, list(range(R, 2 * R))) for im in imgs]
        return self.poly.substitute(left + right)


class TFamily:
    """A polynomial in ``t`` for each x-side class monomial."""

    __slots__ = ("family", "rows")

    def __init__(self, family: Family, rows: Mapping[tuple[int, ...], UniPoly]):
        self.family = family
        self.rows = {tuple(e): p for e, p in rows.items() if p}

    @classmethod
    def from_pairs(cls, family: Family, pairs) -> "TFamily":
        """Sum of ``UniPoly * SymExpr`` pairs, expanded by monomial."""
        rows: dict[tuple[int, ...], UniPoly] = {}
        for tpoly, expr in pairs:
            for e, c in expr.poly.terms.items():
                rows[e] = rows.get(e, UniPoly()) + tpoly * c
        return cls(family, rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TFamily):
            return NotImplemented
        return self.family == other.family and self.rows == other.rows

    def __bool__(self) -> bool:
        return bool(self.rows)

    def __add__(self, other: "TFamily") -> "TFamily":
        rows = dict(self.rows)
        for e, p in other.rows.items():
            rows[e] = rows.get(e, UniPoly()) + p
        return TFamily(self.family, rows)

    def scaled(self, c) -> "TFamily":
        return TFamily(self.family, {e: p * Fraction(c) for e, p in self.rows.items()})

    def row(self, monomial: str | Sequence[int]) -> UniPoly:
        from ..symfun import parse_monomial

        e = parse_monomial(monomial, self.family) if isinstance(monomial, str) else tuple(monomial)
        return self.rows.get(e, UniPoly())

    def monomials(self) -> list[tuple[int, ...]]:
        return sorted(self.rows, key=lambda v: (self.family.weight(v), v), reverse=True)

    def degree(self) -> int:
        return max((p.degree for p in self.rows.values()), default=-1)

    def at(self, t) -> SymExpr:
        t = Fraction(t)
        return SymExpr(self.family, MultiPoly(self.family.size, {e: p(t) for e, p in self.rows.items()}))

    def specialize(self, numbers: Mapping[tuple[int, ...], Fraction]) -> UniPoly:
        """Pair every row with its class number.

        Raises
        ------
        MissingClassNumber
            If a monomial with a nonzero row has no number.
        """
        total = UniPoly()
        for e in self.monomials():
            if e not in numbers:
                raise MissingClassNumber(format_monomial(e, self.family))
            total = total + self.rows[e] * Fraction(numbers[e])
        return total

    def ratio_to(self, other: "TFamily") -> Fraction | None:
        if self.rows.keys() != other.rows.keys():
            return None
        ratio = None
        for e, p in self.rows.items():
            q = other.rows[e]
            if p.degree != q.degree:
                return None
            c = p.leading() / q.leading()
            if p != q * c or (ratio is not None and c != ratio):
                return None
            ratio = c
        if ratio is None:
            return Fraction(1)
        return ratio if ratio > 0 else None

    def __str__(self) -> str:
        return "\n".join(f"{format_monomial(e, self.family)}: {self.rows[e]}" for e in self.monomials())


def bilinear_from_torus(P: MultiPoly, family: Family, k: int, group=None, note: str = "") -> WeinsteinForm:
    """Rewrite a bilinear torus polynomial in generators on both sides.

    ``P`` lives in ``2R`` variables (y first), where ``R`` is the family rank,
    or rank minus one for trace-zero families after reduction. It must be
    homogeneous of degree ``k`` on each side.

    Raises
    ------
    ValueError
        If ``P`` is not in the span of generator monomials.
    """
    R = P.nvars // 2
    monos = family.monomials(k)
    basis = [family.reduced_image(MultiPoly.monomial(e)) for e in monos]
    if basis and basis[0].nvars != R:
        raise ValueError("torus polynomial does not match the family")
    # group by x-exponent; coefficients are y-polynomials
    target: dict[tuple[int, ...], MultiPoly] = {}
    for e, c in P.terms.items():
        ey, ex = e[:R], e[R:]
        if sum(ex) != k or sum(ey) != k:
            raise DegreeMismatch(f"term {e} is not of bidegree ({k}, {k})")
        target.setdefault(ex, {})[ey] = c  # type: ignore[index]
    target = {ex: MultiPoly(R, t) for ex, t in target.items()}
    ycoeffs = solve_in_span(target, basis, MultiPoly.zero(R))
    if ycoeffs is None:
        raise ValueError("x-side is not expressible in the generators")
    pairs = []
    for xe, ypoly in zip(monos, ycoeffs):
        if not ypoly:
            continue
        nums = solve_in_span(dict(ypoly.terms), basis, Fraction(0))
        if nums is None:
            raise ValueError("y-side is not expressible in the generators")
        for ye, c in zip(monos, nums):
            if c:
                pairs.append((c, MultiPoly.monomial(ye), MultiPoly.monomial(xe)))
    return WeinsteinForm.from_pairs(family, k, pairs, group, note)

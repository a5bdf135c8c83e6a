"""SU(3) bundles over a 32-dimensional base.

Along ``y = (1, t, -1-t)``, ``0 <= t <= 1``, the degree-16 invariant is
``sigma_2(y)^2 c2^2 (a(t) c3^4 + b(t) c3^2 c2^3 + c(t) c2^6)`` with three
palindromic polynomials of degree 12. Under ``c3^2 = r c2^3`` it becomes the
quadratic ``a r^2 + b r + c`` in ``r``, whose roots at the chamber walls
bound the admissible ``r``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..errors import ParametrizationUnconfirmed, UnsupportedGroup
from ..fixtures import load_fixture
from ..symfun import parse_monomial
from ..symfun.unipoly import UniPoly
from ..weinstein import GroupSpec
from .bundle import BundleData
from .checks import invariant_form, verdict_from_polynomial
from .curves import OrbitCurve
from .sturm import Domain, RootInterval, isolate_roots
from .verdict import Verdict

__all__ = ["SU3Rows", "su3_rows", "printed_su3_rows", "su3_bounds", "su3_analysis", "SU3_GROUP"]

SU3_GROUP = GroupSpec("SU", 3)
M = 16
ROW_KEYS = ("c2^2*c3^4", "c2^5*c3^2", "c2^8")


@dataclass(frozen=True)
class SU3Rows:
    """The rows ``a``, ``b``, ``c`` (coefficients of ``c3^4``, ``c3^2 c2^3``, ``c2^6``)."""

    a: UniPoly
    b: UniPoly
    c: UniPoly
    scale: Fraction = Fraction(1)
    notes: tuple[str, ...] = ()

    def quadratic_at(self, t) -> UniPoly:
        """``a(t) r^2 + b(t) r + c(t)`` as a polynomial in ``r``."""
        t = Fraction(t)
        return UniPoly([self.c(t), self.b(t), self.a(t)])

    def in_t(self, r) -> UniPoly:
        r = Fraction(r)
        return self.a * (r * r) + self.b * r + self.c


def _palindrome(half: list[int]) -> UniPoly:
    return UniPoly(half + half[-2::-1])


def printed_su3_rows() -> SU3Rows:
    """Rows as stored in the fixture (integer coefficients)."""
    rows = load_fixture("su3_table")["rows"]
    a_spec = rows["c2^2*c3^4"]
    a = UniPoly.const(a_spec["scale"])
    for f in a_spec["factors"]:
        a = a * UniPoly(f)
    return SU3Rows(a, _palindrome(rows["c2^5*c3^2"]["palindromic_half"]), _palindrome(rows["c2^8"]["palindromic_half"]))


def _computed_rows(curve: OrbitCurve) -> dict[str, UniPoly]:
    form = invariant_form(SU3_GROUP, M)
    tf = form.at_curve(curve.coordinates())
    fam = form.family
    return {k: tf.rows.get(parse_monomial(k, fam), UniPoly()) for k in ROW_KEYS}


@lru_cache(maxsize=2)
def su3_rows(confirm: bool = True) -> SU3Rows:
    """Rows computed from the invariant and matched against the stored table.

    The computed rows are divided by ``sigma_2(y)^2`` and scaled by one
    common positive constant.

    Raises
    ------
    ParametrizationUnconfirmed
        If no candidate parametrization reproduces the table.
    """
    printed = printed_su3_rows()
    spec = load_fixture("su3_table")
    common = UniPoly(spec["common_factor"]) ** spec["common_factor_power"]
    candidates = [
        OrbitCurve.su3(),
        # same chamber with the coordinates permuted
        OrbitCurve((0, 1, -1), (1, 0, -1), Domain.closed(0, 1), False, "reciprocal", "su3-swapped"),
    ]
    tried = []
    for curve in candidates:
        raw = _computed_rows(curve)
        try:
            reduced = [raw[k].exact_div(common) for k in ROW_KEYS]
        except ArithmeticError:
            tried.append(f"{curve.name}: rows not divisible by the common factor")
            continue
        a, b, c = reduced
        if not c:
            tried.append(f"{curve.name}: empty row")
            continue
        k = c.coefficient(0) / printed.c.coefficient(0)
        rows = SU3Rows(a / k, b / k, c / k, k, (f"parametrization {curve.name}",))
        if not confirm or (rows.a, rows.b, rows.c) == (printed.a, printed.b, printed.c):
            if confirm and k <= 0:
                tried.append(f"{curve.name}: negative constant")
                continue
            return rows
        tried.append(f"{curve.name}: coefficients differ")
    raise ParametrizationUnconfirmed("; ".join(tried))


@dataclass(frozen=True)
class SU3Bounds:
    """Certified enclosures of the chamber-wall bounds on ``r``."""

    t0: RootInterval
    r0: RootInterval
    r1: RootInterval
    r2: RootInterval
    discriminant_roots: tuple[RootInterval, ...]

    def as_dict(self) -> dict[str, RootInterval]:
        return {"t0": self.t0, "r0": self.r0, "r1": self.r1, "r2": self.r2}


def su3_bounds(rows: SU3Rows | None = None, precision=Fraction(1, 10**12)) -> SU3Bounds:
    """Enclose ``t0``, ``r0``, ``r1``, ``r2``.

    ``r2 < r0`` are the roots of the quadratic at ``t = 0``; ``r1`` is the
    smaller root at ``t = 1``; ``t0`` is the root of ``a`` in ``[0, 1]``
    where ``b > 0``, the point where one root of the quadratic escapes to
    infinity.
    """
    rows = rows or su3_rows()
    q0 = isolate_roots(rows.quadratic_at(0), None, precision)
    q1 = isolate_roots(rows.quadratic_at(1), None, precision)
    if len(q0) != 2 or len(q1) != 2:
        raise ParametrizationUnconfirmed("boundary quadratics do not have two real roots")
    a_roots = isolate_roots(rows.a, Domain.closed(0, 1), precision)
    t0s = [r for r in a_roots if rows.b(r.value) > 0]
    if len(t0s) != 1:
        raise ParametrizationUnconfirmed(f"expected one escape point in [0,1], found {len(t0s)}")
    disc = rows.b * rows.b - rows.a * rows.c * 4
    droots = tuple(isolate_roots(disc, Domain.closed(0, 1), precision))
    return SU3Bounds(t0s[0], q0[1], q1[0], q0[0], droots)


@lru_cache(maxsize=1)
def _default_bounds() -> SU3Bounds:
    return su3_bounds(su3_rows())


def su3_analysis(bundle: BundleData | None = None, r=None, precision=None) -> Verdict:
    """Test an SU(3) bundle over a 32-dimensional base on the full chamber.

    Parameters
    ----------
    bundle : BundleData, optional
        Over SU(3) with ``m = 16``. When omitted, ``r`` must be given and the
        bundle ``c2^8 = 1``, ``c3^2 c2^5 = r``, ``c3^4 c2^2 = r^2`` is used.
    r : rational, optional
        Proportionality ``c3^2 = r c2^3``; recorded and checked against the
        bundle when both are given.

    Returns
    -------
    Verdict
        ``details["bounds"]`` holds the enclosures from :func:`su3_bounds`.
    """
    if bundle is None:
        if r is None:
            raise ValueError("give a bundle or r")
        r = Fraction(r)
        fam = SU3_GROUP.class_family()
        bundle = BundleData(
            SU3_GROUP,
            M,
            {parse_monomial("c2^8", fam): 1, parse_monomial("c2^5*c3^2", fam): r, parse_monomial("c2^2*c3^4", fam): r * r},
        )
    if bundle.group != SU3_GROUP or bundle.m != M:
        raise UnsupportedGroup("su3_analysis needs SU(3) with m = 16")
    rows = su3_rows()
    n = [bundle.number(k) for k in ROW_KEYS]
    poly = rows.a * n[0] + rows.b * n[1] + rows.c * n[2]
    notes = list(rows.notes) + ["rows divided by sigma_2(y)^2, which has no real zeros"]
    if r is not None:
        r = Fraction(r)
        if n[1] != r * n[2] or n[0] != r * r * n[2]:
            notes.append(f"numbers do not satisfy c3^2 = {r} c2^3")
    v = verdict_from_polynomial(poly, OrbitCurve.su3(), SU3_GROUP, None, precision, notes=notes)
    bounds = _default_bounds()
    v.details["bounds"] = bounds.as_dict()
    v.details["r"] = r
    if r is not None and v.passed:
        inside = bounds.r0.hi < r < bounds.r1.lo
        v.notes.append(f"r = {r} lies {'inside' if inside else 'outside'} (r0, r1)")
    return v

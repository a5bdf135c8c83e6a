"""Fatness obstructions: specialize invariants to bundle data and look for zeros."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from math import comb

from ..errors import DegenerateSlope, DegreeMismatch, UnsupportedGroup
from ..symfun import SymExpr
from ..symfun.unipoly import UniPoly
from ..weinstein import (
    GroupSpec,
    TFamily,
    WeinsteinForm,
    chern_h,
    q_char_form,
    q_g2,
    q_product,
    q_special_un,
    q_torus_form,
)
from .bundle import BundleData
from .curves import OrbitCurve, normalize_orbit_point
from .sturm import Domain, RootInterval, isolate_roots
from .verdict import Status, VanishingOrbit, Verdict

__all__ = [
    "invariant_form",
    "specialize",
    "check_fatness",
    "verdict_from_polynomial",
    "dimension_restriction",
    "real_sphere_check",
    "complex_sphere_check",
    "complex_rank2_closed_form",
    "quaternionic_sphere_polynomial",
    "quaternionic_sphere_check",
    "sp_times_s_curve",
    "sp_times_s_check",
    "lens_check",
    "lens_threshold",
    "normal_reduction_check",
]


@lru_cache(maxsize=64)
def invariant_form(group, m: int) -> WeinsteinForm:
    """Degree-``m`` invariant for a group or a pair of groups (product)."""
    if isinstance(group, tuple):
        return q_product(group[0], group[1], m)
    if group.family == "Torus":
        return q_torus_form(group.rank, m)
    if group.family == "G2":
        return q_g2(m)
    return q_char_form(group, m)


def _as_tfamily(form, curve: OrbitCurve) -> TFamily:
    if isinstance(form, TFamily):
        return form
    return form.at_curve(curve.coordinates())


def specialize(form: WeinsteinForm | TFamily, bundle: BundleData, curve: OrbitCurve) -> UniPoly:
    """The invariant along ``curve`` evaluated on the bundle's characteristic numbers.

    Raises
    ------
    DegreeMismatch
        If the form's degree or family does not match the bundle.
    MissingClassNumber
        If a class monomial of the form has no number.
    """
    if form.family != bundle.family:
        raise DegreeMismatch(f"form over {form.family.label}, bundle over {bundle.family.label}")
    if isinstance(form, WeinsteinForm) and form.k != bundle.m:
        raise DegreeMismatch(f"form has degree {form.k}, bundle has m={bundle.m}")
    return _as_tfamily(form, curve).specialize(bundle.numbers)


def _orbit_group(group):
    return None if isinstance(group, tuple) else group


def _representative(group, y) -> tuple[Fraction, ...] | None:
    if not any(y):
        return None
    return normalize_orbit_point(_orbit_group(group), y)


def verdict_from_polynomial(
    poly: UniPoly,
    curve: OrbitCurve,
    group=None,
    top_degree: int | None = None,
    precision=None,
    failing: Status = Status.VANISHES,
    notes: list[str] | None = None,
) -> Verdict:
    """Turn an invariant polynomial on an orbit curve into a verdict.

    Roots are isolated on the curve's domain and grouped into orbits by the
    curve's identification rule. When the curve includes the limit orbit,
    the coefficient of ``t^top_degree`` decides it.
    """
    notes = list(notes or [])
    if not poly:
        orbit = VanishingOrbit(None, 0, None, "all")
        return Verdict(failing, [orbit], notes, poly, identically_zero=True)
    roots = isolate_roots(poly, curve.domain, precision)
    # merge enclosures that the identification maps onto each other
    groups: list[tuple[Fraction, Fraction, list[RootInterval]]] = []
    for r in sorted(roots, key=lambda r: curve.canonical_interval(r)):
        lo, hi = curve.canonical_interval(r)
        if groups and lo <= groups[-1][1]:
            glo, ghi, members = groups[-1]
            groups[-1] = (glo, max(ghi, hi), members + [r])
        else:
            groups.append((lo, hi, [r]))
    orbits = []
    for _, _, members in groups:
        # prefer a non-negative parameter as the reported root
        r = max(members, key=lambda x: (x.lo >= 0, x.exact is not None, -abs(x.lo)))
        mult = max(x.multiplicity for x in members)
        orbits.append(VanishingOrbit(r, mult, _representative(group, curve.at(r.value))))
    if curve.includes_infinity_orbit:
        d = top_degree if top_degree is not None else poly.degree
        if poly.coefficient(d) == 0:
            zero_paired = curve.identification == "reciprocal" and any(
                o.parameter.contains(0) for o in orbits
            )
            if not zero_paired:
                orbits.append(VanishingOrbit(None, 1, _representative(group, curve.slope), "limit"))
    status = failing if orbits else Status.NONVANISHING
    return Verdict(status, orbits, notes, poly)


def check_fatness(bundle: BundleData, curve: OrbitCurve, form=None, precision=None) -> Verdict:
    """Decide whether the invariant vanishes on some orbit of ``curve``.

    Parameters
    ----------
    bundle : BundleData
    curve : OrbitCurve
    form : WeinsteinForm or TFamily, optional
        Defaults to :func:`invariant_form` for the bundle's group.
    precision : rational, optional
        Width bound for irrational root enclosures.

    Returns
    -------
    Verdict
        ``NonvanishingEverywhere`` or ``VanishesOnOrbits``.
    """
    if form is None:
        form = invariant_form(bundle.group, bundle.m)
    poly = specialize(form, bundle, curve)
    v = verdict_from_polynomial(poly, curve, bundle.group, bundle.m, precision)
    v.notes.append(f"{bundle.label}, m={bundle.m}, curve {curve.name or 'custom'} on {curve.domain}")
    return v


def dimension_restriction(base_dim: int, fat_subspace_dim: int) -> bool:
    """Whether a fat subspace of this dimension is allowed over a base of this dimension.

    With ``base_dim = (2a+1) 2^(4b+c)``, ``0 <= c <= 3``, a fat subspace has
    dimension at most ``2^c + 8b - 1`` (vector fields on spheres).
    """
    if base_dim < 1:
        raise ValueError("base dimension must be positive")
    e = (base_dim & -base_dim).bit_length() - 1
    b, c = divmod(e, 4)
    return fat_subspace_dim <= 2**c + 8 * b - 1


# sphere bundles ------------------------------------------------------------------------


def _require(bundle: BundleData, families: tuple[str, ...], what: str) -> GroupSpec:
    g = bundle.group
    if isinstance(g, tuple) or g.family not in families:
        raise UnsupportedGroup(f"{what} needs a group in {families}, got {bundle.label}")
    return g


def _require_even(m: int):
    if m % 2:
        raise DegreeMismatch(f"m must be even, got {m}")


def real_sphere_check(bundle: BundleData) -> Verdict:
    """Obstruction for real sphere bundles: ``h_{m/2}(p)`` must not vanish."""
    g = _require(bundle, ("SO_even", "SO_odd", "O_even", "O_odd"), "real sphere check")
    _require_even(bundle.m)
    h = chern_h(bundle.m // 2, bundle.family)
    value = bundle.pair(h)
    poly = UniPoly.const(value)
    curve = OrbitCurve.point([1] + [0] * (g.rank - 1))
    v = verdict_from_polynomial(poly, curve, g, failing=Status.VIOLATED)
    v.details["h"] = str(h)
    v.details["value"] = value
    v.notes.append(f"h_{bundle.m // 2} = {h} evaluates to {value}")
    return v


def complex_rank2_closed_form(c1sq: Fraction, c2: Fraction) -> bool:
    """Pass condition for ``n = m = 2``: ``c1^2 = s c2`` with ``s < 1`` or ``s > 4``."""
    c1sq, c2 = Fraction(c1sq), Fraction(c2)
    if c2 == 0:
        return c1sq != 0
    s = c1sq / c2
    return s < 1 or s > 4


def complex_sphere_check(bundle: BundleData, precision=None) -> Verdict:
    """Obstruction for complex sphere bundles: the invariant along ``e1 + t e2``, ``t <= 0``."""
    g = _require(bundle, ("U",), "complex sphere check")
    _require_even(bundle.m)
    if g.rank < 2:
        raise UnsupportedGroup("complex sphere check needs rank >= 2")
    tf = q_special_un("e1_plus_te2", g.rank, bundle.m)
    poly = tf.specialize(bundle.numbers)
    curve = OrbitCurve.e1_plus_te2(g.rank, Domain.at_most(0))
    v = verdict_from_polynomial(poly, curve, g, precision=precision, failing=Status.VIOLATED)
    if g.rank == 2 and bundle.m == 2:
        closed = complex_rank2_closed_form(bundle.number("c1^2"), bundle.number("c2"))
        v.details["closed_form_pass"] = closed
        v.notes.append(f"closed-form rule (s < 1 or s > 4): {'pass' if closed else 'fail'}")
    return v


def quaternionic_sphere_polynomial(bundle: BundleData) -> UniPoly:
    """The Sp(n) invariant along ``e1 + t e2`` in the complete classes ``h_k(p)``."""
    g = bundle.group
    n, m = g.rank, bundle.m
    half = m // 2
    fam = bundle.family
    T = UniPoly.t()
    pairs = []
    for k in range(half // 2 + 1):
        window = sum((T ** (2 * s) for s in range(k, half - k + 1)), UniPoly())
        cls = chern_h(half - k, fam) * chern_h(k, fam) - chern_h(half - k + 1, fam) * chern_h(k - 1, fam)
        pairs.append((window * comb(m + 4 * n - 4, 2 * k + 2 * n - 3), cls))
    return TFamily.from_pairs(fam, pairs).specialize(bundle.numbers)


def quaternionic_sphere_check(bundle: BundleData, precision=None) -> Verdict:
    """Obstruction for quaternionic sphere bundles.

    For ``n = 1`` the test is ``p1^(m/2) != 0``. For ``n >= 2`` the bundle
    would be fat on a 10-dimensional subspace, which the base dimension must
    allow; otherwise the invariant along ``e1 + t e2`` must not vanish.
    """
    g = _require(bundle, ("Sp",), "quaternionic sphere check")
    _require_even(bundle.m)
    if g.rank == 1:
        value = bundle.number((bundle.m // 2,))
        curve = OrbitCurve.point([1])
        v = verdict_from_polynomial(UniPoly.const(value), curve, g, failing=Status.VIOLATED)
        v.notes.append(f"p1^{bundle.m // 2} = {value}")
        return v
    if not dimension_restriction(2 * bundle.m, 10):
        return Verdict(
            Status.FORBIDDEN,
            notes=[f"a 10-dimensional fat subspace is impossible over a base of dimension {2 * bundle.m}"],
            details={"base_dim": 2 * bundle.m, "fat_subspace_dim": 10},
        )
    poly = quaternionic_sphere_polynomial(bundle)
    curve = OrbitCurve.e1_plus_te2(g.rank, Domain.real_line())
    return verdict_from_polynomial(poly, curve, g, precision=precision, failing=Status.VIOLATED)


def sp_times_s_curve(n: int, s_kind: str) -> OrbitCurve:
    """``(e1 - t e2, t - 1)`` for ``0 <= t <= 1`` in the torus of ``Sp(n) x S``."""
    if s_kind not in ("circle", "sp1"):
        raise ValueError("s_kind must be 'circle' or 'sp1'")
    base = [1] + [0] * (n - 1) + [-1]
    slope = [0] + ([-1] + [0] * (n - 2) if n > 1 else []) + [1]
    return OrbitCurve(tuple(base), tuple(slope), Domain.closed(0, 1), False, None, "sp x s")


def sp_times_s_check(bundle: BundleData, s_kind: str, precision=None) -> Verdict:
    """Obstruction for ``Sp(n) x S`` with ``S`` the circle or ``Sp(1)``.

    The invariant comes from the product rule applied to the two factors.
    """
    g = bundle.group
    if not isinstance(g, tuple) or g[0].family != "Sp":
        raise UnsupportedGroup("sp_times_s_check needs a bundle over Sp(n) x S")
    expected = GroupSpec("U", 1) if s_kind == "circle" else GroupSpec("Sp", 1)
    if g[1] != expected:
        raise UnsupportedGroup(f"second factor must be {expected.label} for s_kind={s_kind!r}")
    _require_even(bundle.m)
    curve = sp_times_s_curve(g[0].rank, s_kind)
    form = invariant_form(g, bundle.m)
    poly = specialize(form, bundle, curve)
    return verdict_from_polynomial(poly, curve, None, precision=precision, failing=Status.VIOLATED)


# lens space bundles -------------------------------------------------------------------


def lens_threshold(p: int, q: int, m: int) -> float:
    """Display value of the bound on ``r`` for the lens bundle ``(p, q)``.

    Never used for decisions; :func:`lens_check` decides exactly.
    """
    if p == q:
        return -math.inf
    c = math.cos(math.pi / (m + 1))
    T = (p + q) / (p - q)
    return -((1 - c) / (1 + c)) * T * T


def lens_check(p: int, q: int, bundle: BundleData, precision=None) -> Verdict:
    """Obstruction for the lens space bundle with slope ``(p, q)`` associated to a U(2) bundle.

    The tested orbits are ``y = (1+t, 1-t)`` for ``t >= |(p+q)/(p-q)|`` together
    with the limit orbit. For ``p = q`` only the limit orbit remains and the
    test is ``(c1^2 - 4c2)^(m/2) != 0``.

    Raises
    ------
    DegenerateSlope
        If ``p = q`` but ``(p, q)`` is not ``+-(1, 1)``.
    """
    g = _require(bundle, ("U",), "lens check")
    if g.rank != 2:
        raise UnsupportedGroup("lens check needs U(2)")
    _require_even(bundle.m)
    m = bundle.m
    note = f"display threshold for r: {lens_threshold(p, q, m):.12g}"
    if p == q:
        if abs(p) != 1:
            raise DegenerateSlope(f"(p, q) = ({p}, {q}) is not primitive")
        fam = bundle.family
        c1, c2 = fam.gens()
        value = bundle.pair((c1 * c1 - c2 * 4) ** (m // 2))
        curve = OrbitCurve.point([1, -1])
        return verdict_from_polynomial(UniPoly.const(value), curve, g, failing=Status.VIOLATED, notes=[note])
    T = abs(Fraction(p + q, p - q))
    curve = OrbitCurve.rank2(Domain.at_least(T))
    poly = specialize(invariant_form(g, m), bundle, curve)
    v = verdict_from_polynomial(poly, curve, g, m, precision, Status.VIOLATED, [note])
    v.details["slope_bound"] = T
    return v


# product reductions -------------------------------------------------------------------


def normal_reduction_check(left: GroupSpec, right: GroupSpec, m: int, bundle: BundleData) -> bool:
    """Whether every invariant at ``y = (0, y2)`` vanishes on the bundle's numbers.

    The product invariant is specialized to ``y1 = 0`` and the class side
    is paired with the numbers; the result must be the zero polynomial in
    the right factor's torus coordinates.
    """
    form = invariant_form((left, right), m)
    fam = form.family
    if fam != bundle.family:
        raise DegreeMismatch("bundle family does not match the product")
    gl = left.class_family().size
    G = fam.size
    acc: dict[tuple[int, ...], Fraction] = {}
    for e, c in form.poly.terms.items():
        ey, ex = e[:G], e[G:]
        if any(ey[:gl]):
            continue
        key = ey[gl:]
        num = bundle.numbers.get(ex)
        if num is None:
            if bundle.m == m:
                num = bundle.number(ex)
            else:
                raise DegreeMismatch("bundle degree differs from m")
        acc[key] = acc.get(key, Fraction(0)) + Fraction(c) * num
    return not any(acc.values())


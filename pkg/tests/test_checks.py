from fractions import Fraction
from math import gcd

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from _support import SO4, U2, u2_ratio_bundle
from fatcheck.errors import DegenerateSlope, DegreeMismatch, MissingClassNumber, UnsupportedGroup
from fatcheck.obstruction import (
    BundleData,
    Domain,
    OrbitCurve,
    S8SphereBundle,
    Status,
    check_fatness,
    complex_rank2_closed_form,
    complex_sphere_check,
    dimension_restriction,
    invariant_form,
    isolate_roots,
    lens_check,
    lens_threshold,
    normal_reduction_check,
    quaternionic_sphere_check,
    quaternionic_sphere_polynomial,
    real_sphere_check,
    sp_times_s_check,
    sp_times_s_curve,
    specialize,
)
from fatcheck.symfun.unipoly import UniPoly
from fatcheck.weinstein import GroupSpec, chern_h

SP1, SP2 = GroupSpec("Sp", 1), GroupSpec("Sp", 2)
G2_NUMBERS = {"p1^2": 1, "p1*e": -1, "p2": 1}


def proportional(a: UniPoly, b: UniPoly) -> bool:
    if not a or not b:
        return not a and not b
    c = a.leading() / b.leading()
    return c > 0 and a == b * c


def random_numbers(group, m, draw_values):
    fam = group.class_family()
    return {e: Fraction(v) for e, v in zip(fam.monomials(m), draw_values)}


# specialize ----------------------------------------------------------------------------


def test_specialize_g2_example():
    b = BundleData.from_text_numbers(SO4, 4, G2_NUMBERS)
    poly = specialize(invariant_form(SO4, 4), b, OrbitCurve.rank2())
    assert proportional(poly, UniPoly([9, 0, -10, 0, 1]))


@pytest.mark.parametrize("group", [GroupSpec("SO_odd", 2), GroupSpec("SO_even", 3)], ids=lambda g: g.label)
def test_specialize_at_e1_gives_complete_class(group):
    m = 4
    fam = group.class_family()
    nums = {e: Fraction(i + 2, i + 1) for i, e in enumerate(fam.monomials(m))}
    b = BundleData(group, m, nums)
    poly = specialize(invariant_form(group, m), b, OrbitCurve.point([1] + [0] * (group.rank - 1)))
    want = b.pair(chern_h(m // 2, fam))
    assert poly.degree <= 0
    assert (poly.coefficient(0) == 0) == (want == 0)
    assert poly.coefficient(0) * want > 0


def test_specialize_zero_bundle():
    fam = U2.class_family()
    b = BundleData(U2, 4, {e: 0 for e in fam.monomials(4)})
    assert not specialize(invariant_form(U2, 4), b, OrbitCurve.rank2())


def test_specialize_errors():
    b = BundleData.from_text_numbers(U2, 2, {"c1^2": 1})
    with pytest.raises(MissingClassNumber):
        specialize(invariant_form(U2, 2), b, OrbitCurve.rank2())
    with pytest.raises(DegreeMismatch):
        specialize(invariant_form(U2, 4), b, OrbitCurve.rank2())


values = st.lists(st.integers(-20, 20), min_size=3, max_size=3)


@given(values, values, st.integers(-3, 3))
def test_specialize_is_linear(a, b, k):
    form = invariant_form(U2, 4)
    curve = OrbitCurve.rank2()
    na, nb = random_numbers(U2, 4, a), random_numbers(U2, 4, b)
    mixed = {e: na[e] + k * nb[e] for e in na}
    lhs = specialize(form, BundleData(U2, 4, mixed), curve)
    rhs = specialize(form, BundleData(U2, 4, na), curve) + specialize(form, BundleData(U2, 4, nb), curve) * k
    assert lhs == rhs


# orbits and soundness ------------------------------------------------------------------


def test_g2_orbits_are_reported_once():
    b = BundleData.from_text_numbers(SO4, 4, G2_NUMBERS)
    v = check_fatness(b, OrbitCurve.rank2())
    assert v.status is Status.VANISHES
    assert sorted(o.parameter.exact for o in v.vanishing_orbits) == [1, 3]
    assert sorted(o.representative for o in v.vanishing_orbits) == [(1, -2), (1, 0)]


def test_negated_roots_share_an_orbit():
    # roots at t = +-2 only
    b = u2_ratio_bundle(2, Fraction(-4, 3))
    v = check_fatness(b, OrbitCurve.rank2())
    assert v.orbit_count == 1
    assert abs(v.vanishing_orbits[0].parameter.value) == 2


def test_limit_orbit_reported_once():
    # D^(m/2) = 0 and c1^2 D = 0 leaves a constant: only the limit orbit vanishes
    b = BundleData.from_text_numbers(U2, 2, {"c1^2": 4, "c2": 1})
    v = check_fatness(b, OrbitCurve.rank2())
    assert [o.at_infinity for o in v.vanishing_orbits] == [True]
    assert v.vanishing_orbits[0].representative == (1, -1)


def test_curve_without_limit_orbit_passes_constant():
    b = BundleData.from_text_numbers(U2, 2, {"c1^2": 4, "c2": 1})
    assert check_fatness(b, OrbitCurve.rank2(infinity=False)).passed


def _samples():
    pts = {Fraction(n, d) for n in range(-40, 41) for d in (1, 3, 7)}
    return sorted(pts | {Fraction(10**k) for k in range(2, 7)} | {Fraction(-(10**k)) for k in range(2, 7)})


@given(st.lists(st.integers(-12, 12), min_size=3, max_size=3).filter(any))
def test_decision_is_sound_on_samples(nums):
    b = BundleData(U2, 4, random_numbers(U2, 4, nums))
    curve = OrbitCurve.rank2(infinity=False)
    v = check_fatness(b, curve)
    poly = v.polynomial
    signs = {(poly(t) > 0) - (poly(t) < 0) for t in _samples()}
    if v.passed:
        assert len(signs) == 1 and 0 not in signs
    elif not v.identically_zero:
        for o in v.vanishing_orbits:
            r = o.parameter
            if r.exact is not None:
                assert poly(r.exact) == 0
            elif o.multiplicity % 2:
                assert poly(r.lo) * poly(r.hi) <= 0
    if len(signs - {0}) > 1:
        assert not v.passed


# dimension restriction -----------------------------------------------------------------


@pytest.mark.parametrize(
    "base, fat, allowed",
    [(4, 2, True), (8, 7, True), (8, 8, False), (16, 10, False), (8, 10, False), (16, 8, True), (12, 3, True), (2, 2, False)],
)
def test_dimension_restriction_examples(base, fat, allowed):
    assert dimension_restriction(base, fat) is allowed


@given(st.integers(1, 4096), st.integers(1, 40))
def test_dimension_restriction_properties(base, fat):
    if dimension_restriction(base, fat + 1):
        assert dimension_restriction(base, fat)
    if dimension_restriction(base, 2):
        assert base % 4 == 0


def test_dimension_restriction_rejects_zero():
    with pytest.raises(ValueError):
        dimension_restriction(0, 1)


# sphere bundles ------------------------------------------------------------------------


def test_real_sphere_rows():
    so3 = GroupSpec("SO_odd", 1)
    assert real_sphere_check(BundleData.from_text_numbers(so3, 2, {"p1": 0})).status is Status.VIOLATED
    assert real_sphere_check(BundleData.from_text_numbers(so3, 2, {"p1": 5})).passed
    so5 = GroupSpec("SO_odd", 2)
    assert not real_sphere_check(BundleData.from_text_numbers(so5, 4, {"p1^2": 3, "p2": 3})).passed
    assert real_sphere_check(BundleData.from_text_numbers(so5, 4, {"p1^2": 4, "p2": -3})).passed


def test_real_sphere_requires_orthogonal_group():
    with pytest.raises(UnsupportedGroup):
        real_sphere_check(BundleData.from_text_numbers(U2, 2, {"c1^2": 1, "c2": 1}))


@pytest.mark.parametrize("c1sq, c2, ok", [(1, 1, False), (9, 1, True), (9, 2, True), (9, 3, False), (9, 4, False)])
def test_complex_sphere_candidates(c1sq, c2, ok):
    v = complex_sphere_check(BundleData.from_text_numbers(U2, 2, {"c1^2": c1sq, "c2": c2}))
    assert v.passed is ok
    assert v.details["closed_form_pass"] is ok


@given(st.integers(-30, 30), st.integers(-30, 30))
def test_complex_closed_form_matches_root_count(c1sq, c2):
    v = complex_sphere_check(BundleData.from_text_numbers(U2, 2, {"c1^2": c1sq, "c2": c2}))
    if v.identically_zero:
        assert not complex_rank2_closed_form(c1sq, c2)
    else:
        assert v.passed is complex_rank2_closed_form(c1sq, c2)


def test_complex_sphere_at_zero_is_complete_class():
    g = GroupSpec("U", 3)
    fam = g.class_family()
    nums = {e: Fraction(3 - i, 2) for i, e in enumerate(fam.monomials(4))}
    b = BundleData(g, 4, nums)
    v = complex_sphere_check(b)
    h = b.pair(chern_h(4, fam))
    assert v.polynomial.coefficient(0) * h > 0 or (v.polynomial.coefficient(0) == 0 == h)


def test_complex_sphere_needs_even_m():
    with pytest.raises(DegreeMismatch):
        complex_sphere_check(BundleData.from_text_numbers(U2, 3, {"c1^3": 1, "c1*c2": 1}))


def test_quaternionic_rank_one():
    assert quaternionic_sphere_check(BundleData.from_text_numbers(SP1, 4, {"p1^2": 0})).status is Status.VIOLATED
    assert quaternionic_sphere_check(BundleData.from_text_numbers(SP1, 4, {"p1^2": 2})).passed


@pytest.mark.parametrize("nums", [{"p1^2": 0, "p2": 0}, {"p1^2": 1, "p2": 5}])
def test_quaternionic_small_base_is_forbidden(nums):
    v = quaternionic_sphere_check(BundleData.from_text_numbers(SP2, 4, nums))
    assert v.status is Status.FORBIDDEN and not v.vanishing_orbits


def test_quaternionic_polynomial_at_zero():
    fam = SP2.class_family()
    nums = {e: Fraction(1 + i) for i, e in enumerate(fam.monomials(8))}
    b = BundleData(SP2, 8, nums)
    p0 = quaternionic_sphere_polynomial(b).coefficient(0)
    h = b.pair(chern_h(4, fam))
    assert p0 * h > 0 or p0 == h == 0


def test_quaternionic_large_base_runs_the_polynomial():
    fam = SP2.class_family()
    m = 64  # base dimension 128 allows a 10-dimensional fat subspace
    assert dimension_restriction(2 * m, 10)
    nums = {e: Fraction(0) for e in fam.monomials(m)}
    nums[(m // 2, 0)] = Fraction(1)
    v = quaternionic_sphere_check(BundleData(SP2, m, nums))
    assert v.status in (Status.NONVANISHING, Status.VIOLATED)
    assert v.polynomial is not None


# Sp(n) x S ----------------------------------------------------------------------------


def test_sp_times_circle_matches_product_expansion():
    g = (SP1, GroupSpec("U", 1))
    b = BundleData.from_text_numbers(g, 2, {"p1": 3, "c1^2": 5})
    v = sp_times_s_check(b, "circle")
    # the Sp(1) orbit is a round 2-sphere, so its degree-2 moment is p1 / 3;
    # the product rule then gives p1 / 3 + (t - 1)^2 c1^2
    want = UniPoly.const(Fraction(1, 3) * 3) + UniPoly([-1, 1]) ** 2 * 5
    assert proportional(v.polynomial, want)
    assert v.passed


def test_sp_times_s_without_mixed_numbers_reduces_to_quaternionic():
    g = (SP2, SP1)
    m = 4
    fam = invariant_form(g, m).family
    nums = {e: Fraction(0) for e in fam.monomials(m)}
    nums[(2, 0, 0)] = Fraction(3)
    nums[(0, 1, 0)] = Fraction(-1)
    b = BundleData(g, m, nums)
    poly = sp_times_s_check(b, "sp1").polynomial
    quat = quaternionic_sphere_polynomial(BundleData.from_text_numbers(SP2, m, {"p1^2": 3, "p2": -1}))
    # same polynomial up to the reparametrization of the Sp(2) coordinate
    curve = sp_times_s_curve(2, "sp1")
    assert curve.at(0) == (1, 0, -1) and curve.at(1) == (1, -1, 0)
    assert proportional(UniPoly([poly(Fraction(0))]), UniPoly([quat(Fraction(0))]))
    assert proportional(UniPoly([poly(Fraction(1))]), UniPoly([quat(Fraction(-1))]))


def test_sp_times_s_rejects_wrong_factor():
    g = (SP1, GroupSpec("U", 1))
    b = BundleData.from_text_numbers(g, 2, {"p1": 3, "c1^2": 5})
    with pytest.raises(UnsupportedGroup):
        sp_times_s_check(b, "sp1")
    with pytest.raises(ValueError):
        sp_times_s_curve(1, "torus")


# lens bundles --------------------------------------------------------------------------


LENS_M2 = BundleData.from_text_numbers(U2, 2, {"c1^2": 1, "c2": 1})


def test_lens_grid_for_the_grassmannian_numbers():
    for p in range(-5, 6):
        for q in range(-5, 6):
            if gcd(p, q) != 1 or (p == q and abs(p) != 1):
                continue
            assert lens_check(p, q, LENS_M2).passed is (p * q > 0), (p, q)


def test_lens_threshold_coefficient():
    assert lens_threshold(1, 0, 2) == pytest.approx(-1 / 3, abs=1e-15)
    assert lens_threshold(1, 1, 2) == float("-inf")


def test_lens_diagonal_slope():
    v = lens_check(1, 1, LENS_M2)
    assert v.passed  # D = c1^2 - 4c2 = -3
    with pytest.raises(DegenerateSlope):
        lens_check(2, 2, LENS_M2)


def _mp_threshold(p, q, m):
    with mpmath.workdps(50):
        c = mpmath.cos(mpmath.pi / (m + 1))
        T = mpmath.mpf(p + q) / (p - q)
        return -((1 - c) / (1 + c)) * T * T


@pytest.mark.parametrize("m", [2, 4, 6, 8])
def test_lens_decision_matches_high_precision_threshold(m):
    rs = [Fraction(n, 8) for n in range(-24, 9, 3)]
    slopes = [(2, 1), (3, 1), (3, -1), (1, -2), (5, 2), (4, -3)]
    checked = 0
    for p, q in slopes:
        thr = _mp_threshold(p, q, m)
        for r in rs:
            with mpmath.workdps(50):
                gap = mpmath.mpf(r.numerator) / r.denominator - thr
            if abs(gap) < mpmath.mpf(10) ** -40:
                continue
            b = u2_ratio_bundle(m, r)
            assert lens_check(p, q, b).passed is (gap > 0), (m, p, q, r)
            checked += 1
    assert checked > 50


# product reductions --------------------------------------------------------------------


def test_normal_reduction_torus():
    t1 = GroupSpec("Torus", 1)
    b = BundleData.from_text_numbers((t1, t1), 2, {"c1^2": 7, "c1*c1'": 0, "c1'^2": 0})
    assert normal_reduction_check(t1, t1, 2, b)


def test_normal_reduction_circle_so3():
    g = (GroupSpec("U", 1), GroupSpec("SO_odd", 1))
    b = BundleData.from_text_numbers(g, 2, {"c1^2": 5, "p1": 0})
    assert normal_reduction_check(*g, 2, b)


def test_normal_reduction_has_no_false_positive():
    t1 = GroupSpec("Torus", 1)
    b = BundleData.from_text_numbers((t1, t1), 2, {"c1^2": 0, "c1*c1'": 0, "c1'^2": 1})
    assert not normal_reduction_check(t1, t1, 2, b)


# 7-sphere bundles over S^8 ------------------------------------------------------------


@given(st.integers(-20, 20))
def test_s8_diagonal_bundles_are_excluded(k):
    b = S8SphereBundle(k, k)
    assert b.p2 == 0
    assert b.verdicts()["real"].status is Status.VIOLATED
    assert b.fatness_excluded()


@given(st.integers(-5, 5).filter(bool))
def test_s8_quaternionic_bundles_are_forbidden(r):
    b = S8SphereBundle(8 * r, 4 * r)
    assert b.has_quaternionic_structure and b.consistent()
    assert b.verdicts()["quaternionic"].status is Status.FORBIDDEN


def test_s8_structure_rules():
    assert S8SphereBundle(4, 2).has_complex_structure
    assert not S8SphereBundle(4, 2).has_quaternionic_structure
    assert not S8SphereBundle(2, 1).has_complex_structure
    assert S8SphereBundle(4, 2).verdicts()["complex"].passed
    assert not S8SphereBundle(4, 2).fatness_excluded()

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from _support import SO4, U2, so4_ratio_bundle, u2_ratio_bundle
from fatcheck.errors import InconsistentProportionality, UnsupportedGroup
from fatcheck.obstruction import (
    BundleData,
    OrbitCurve,
    check_fatness,
    closed_form_orbit_count,
    grassmannian_cbar,
    grassmannian_cbar_closed,
    so4_case_analysis,
    so4_dim8_criterion,
    u2_case_analysis,
    u2_dim8_criterion,
)
from fatcheck.symfun import SymExpr, chern_family


def random_instances(count: int, seed: int):
    rng = random.Random(seed)
    out = []
    for i in range(count):
        m = rng.choice([2, 4, 6, 8])
        kind = i % 4
        if kind == 0:
            r = Fraction(0)
        else:
            r = Fraction(rng.randint(1, 40), rng.randint(1, 12))
            if kind in (1, 2):
                r = -r
        out.append((m, r, Fraction(rng.choice([-3, -1, 1, 2, 5]))))
    return out


def test_trichotomy_on_random_instances():
    seen = set()
    for m, r, scale in random_instances(200, 7):
        for make, analyse in ((u2_ratio_bundle, u2_case_analysis), (so4_ratio_bundle, so4_case_analysis)):
            b = make(m, r, scale)
            v = analyse(b, r)
            generic = check_fatness(b, OrbitCurve.rank2())
            assert v.orbit_count == generic.orbit_count == closed_form_orbit_count(r, False, m)
            if r < 0:
                assert v.orbit_count == m // 2
                assert all(o.multiplicity == 1 for o in v.vanishing_orbits)
            seen.add(v.details["case"])
    assert seen == {"b", "c", "d"}


@pytest.mark.parametrize("m", [2, 4, 6])
def test_case_a_everything_vanishes(m):
    fam = U2.class_family()
    c1, c2 = fam.gens()
    # c1 = 0 and c2 = 0 pair every basis element to zero
    b = BundleData(U2, m, {e: 0 for e in fam.monomials(m)})
    v = u2_case_analysis(b, 1)
    assert v.details["case"] == "a" and v.orbit_count == -1


def test_u2_case_b_is_one_orbit_of_full_multiplicity():
    v = u2_case_analysis(u2_ratio_bundle(4, 0))
    assert v.orbit_count == 1
    assert v.vanishing_orbits[0].parameter.exact == 0
    assert v.vanishing_orbits[0].multiplicity == 4


def test_so4_case_b_is_the_limit_orbit():
    v = so4_case_analysis(so4_ratio_bundle(4, 0))
    assert v.orbit_count == 1 and v.vanishing_orbits[0].at_infinity


def test_r_is_inferred():
    v = u2_case_analysis(u2_ratio_bundle(6, Fraction(-5, 2)))
    assert v.details["r"] == Fraction(-5, 2)


def test_inconsistent_numbers_are_rejected():
    b = BundleData.from_text_numbers(U2, 4, {"c1^4": 1, "c1^2*c2": 0, "c2^2": 7})
    with pytest.raises(InconsistentProportionality):
        u2_case_analysis(b)
    with pytest.raises(InconsistentProportionality):
        u2_case_analysis(u2_ratio_bundle(4, 2), r=3)


def test_wrong_group_is_rejected():
    with pytest.raises(UnsupportedGroup):
        so4_case_analysis(u2_ratio_bundle(2, 1))


def test_closed_form_counts():
    assert closed_form_orbit_count(Fraction(1), False, 8) == 0
    assert closed_form_orbit_count(Fraction(0), False, 8) == 1
    assert closed_form_orbit_count(Fraction(-1), False, 8) == 4
    assert closed_form_orbit_count(None, True, 8) == -1


nums3 = st.lists(st.integers(-15, 15), min_size=3, max_size=3)


@given(nums3)
def test_u2_dim8_criterion_matches_root_isolation(vals):
    fam = U2.class_family()
    b = BundleData(U2, 4, dict(zip(fam.monomials(4), map(Fraction, vals))))
    assert u2_dim8_criterion(b) is check_fatness(b, OrbitCurve.rank2()).passed


@given(nums3)
def test_so4_dim8_criterion_matches_root_isolation(vals):
    fam = SO4.class_family()
    b = BundleData(SO4, 4, dict(zip(fam.monomials(4), map(Fraction, vals))))
    assert so4_dim8_criterion(b) is check_fatness(b, OrbitCurve.rank2()).passed


def test_dim8_criterion_needs_m_four():
    with pytest.raises(ValueError):
        u2_dim8_criterion(u2_ratio_bundle(2, 1))


# complementary Chern classes -----------------------------------------------------------


def test_cbar_small_values():
    fam = chern_family(2)
    c1, c2 = fam.gens()
    assert grassmannian_cbar(0) == SymExpr.constant(fam, 1)
    assert grassmannian_cbar(1) == -c1
    assert grassmannian_cbar(2) == c1 * c1 - c2


@pytest.mark.parametrize("k", range(13))
def test_cbar_recursion_matches_closed_form(k):
    assert grassmannian_cbar(k) == grassmannian_cbar_closed(k)


def test_cbar_inverts_total_chern_class():
    fam = chern_family(2)
    c1, c2 = fam.gens()
    for k in range(2, 10):
        total = grassmannian_cbar(k) + c1 * grassmannian_cbar(k - 1) + c2 * grassmannian_cbar(k - 2)
        assert not total

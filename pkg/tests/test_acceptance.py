"""The thirteen acceptance criteria, each timed against its bound.

Every test stores one PASS/FAIL line; the lines are printed again in the
terminal summary. Caches are cleared first so each timing starts cold.
"""

import random
import time
from fractions import Fraction
from math import comb, gcd, prod

import mpmath
import pytest

from _support import ACCEPTANCE, record_acceptance, so4_ratio_bundle, u2_ratio_bundle
from fatcheck.fixtures import load_fixture
from fatcheck.haar_oracle import McConfig, mc_moments, ratio_validate
from fatcheck.obstruction import (
    BundleData,
    Domain,
    OrbitCurve,
    S8SphereBundle,
    Status,
    check_fatness,
    closed_form_orbit_count,
    complex_rank2_closed_form,
    complex_sphere_check,
    dimension_restriction,
    grassmannian_cbar,
    grassmannian_cbar_closed,
    invariant_form,
    isolate_roots,
    lens_check,
    lens_threshold,
    printed_su3_rows,
    so4_case_analysis,
    su3_bounds,
    u2_case_analysis,
)
from fatcheck.obstruction import su3 as su3_module
from fatcheck.partitions import enumerate_Km
from fatcheck.symfun import (
    SCHUR_ROUTES,
    MultiPoly,
    SymExpr,
    chern_family,
    complete_h,
    elementary_sigma,
    exact_divide,
    h_in_sigma,
    schur,
    sigma_family,
)
from fatcheck.symfun.unipoly import UniPoly
from fatcheck.weinstein import GroupSpec, TFamily, chern_h, q_schur_form, q_weyl_sum
from fatcheck.weinstein import schur_forms

U2, SO4 = GroupSpec("U", 2), GroupSpec("SO_even", 2)


@pytest.fixture(autouse=True)
def cold_caches():
    invariant_form.cache_clear()
    schur_forms._schur_sigma.cache_clear()
    su3_module.su3_rows.cache_clear()
    su3_module._default_bounds.cache_clear()


def proportional(a, b) -> bool:
    if not a or not b:
        return False
    c = a.leading() / b.leading()
    return c > 0 and a == b * c


def rank2_family(group, m) -> TFamily:
    return invariant_form(group, m).at_curve(OrbitCurve.rank2().coordinates())


def test_criterion_01_u2_degree_four():
    start = time.perf_counter()
    tf = rank2_family(U2, 4)
    c1, c2 = chern_family(2).gens()
    D = c1 * c1 - c2 * 4
    T = UniPoly.t()
    want = TFamily.from_pairs(tf.family, [(UniPoly([5]), c1**4), (T**2 * 10, c1 * c1 * D), (T**4, D * D)])
    ratio = tf.ratio_to(want)
    ok = ratio is not None and ratio > 0
    assert record_acceptance(1, ok, time.perf_counter() - start, 1, f"U(2) m=4 family / (5, 10, 1) = {ratio}")


def test_criterion_02_so4_degree_four():
    start = time.perf_counter()
    tf = rank2_family(SO4, 4)
    p1, _, e = SO4.class_family().gens()
    A, B = p1 - e * 2, p1 + e * 2
    T = UniPoly.t()
    want = TFamily.from_pairs(tf.family, [(UniPoly([3]), A * A), (T**2 * 10, A * B), (T**4 * 3, B * B)])
    ratio = tf.ratio_to(want)
    ok = ratio is not None and ratio > 0
    assert record_acceptance(2, ok, time.perf_counter() - start, 1, f"SO(4) m=4 family / (3, 10, 3) = {ratio}")


def _mp(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


def test_criterion_03_su3_table_and_bounds():
    start = time.perf_counter()
    rows = su3_module.su3_rows()
    printed = printed_su3_rows()
    table_ok = (rows.a, rows.b, rows.c) == (printed.a, printed.b, printed.c) and rows.scale > 0
    spec = load_fixture("su3_table")
    b = su3_bounds(rows, precision=Fraction(1, 10**12))
    widths_ok = all(iv.width <= Fraction(1, 10**6) for iv in b.as_dict().values())
    close = []
    with mpmath.workdps(40):
        for name in ("r0", "r1", "r2"):
            p = spec["bounds"][name]["closed_form_parts"]
            exact = (p["a"] + p["b"] * mpmath.sqrt(p["radicand"])) / p["denominator"]
            iv = getattr(b, name)
            close.append(_mp(iv.lo) - mpmath.mpf("1e-12") <= exact <= _mp(iv.hi) + mpmath.mpf("1e-12"))
            approx = spec["bounds"][name]["approx"]
            digits = len(approx.split(".")[1])
            close.append(abs(float(iv) - float(approx)) <= 10 ** (-digits))
        t0_gap = abs(float(b.t0) - float(spec["bounds"]["t0"]["approx"]))
    ok = table_ok and widths_ok and all(close) and t0_gap <= 1e-6 and not b.discriminant_roots
    detail = f"table {'exact' if table_ok else 'differs'}, t0 = {float(b.t0):.12f} (printed gap {t0_gap:.1e}), r0 = {float(b.r0):.8f}, r1 = {float(b.r1):.7f}, r2 = {float(b.r2):.4f}"
    assert record_acceptance(3, ok, time.perf_counter() - start, 60, detail)


def test_criterion_04_sphere_table():
    start = time.perf_counter()
    fam = GroupSpec("SO_odd", 4).class_family()
    rows = load_fixture("sphere_table")["rows"]
    good = 0
    for row in rows:
        k = row["base_dim"] // 4
        lhs = SymExpr.from_terms(fam, row["lhs"])
        rhs = SymExpr.from_terms(fam, row["rhs"]) if row["rhs"] else SymExpr.zero(fam)
        h = chern_h(k, fam)
        good += h == lhs - rhs or h == rhs - lhs
    ok = good == 4 and [r["base_dim"] for r in rows] == [4, 8, 12, 16]
    assert record_acceptance(4, ok, time.perf_counter() - start, 1, f"{good}/4 rows of h in Pontrjagin classes")


def _cp4():
    spec = load_fixture("cp4_tangent")
    b = BundleData.from_text_numbers(GroupSpec("U", 4), spec["m"], spec["numbers"])
    return spec, complex_sphere_check(b)


def test_criterion_05_roots_and_verdict():
    # the parts of criterion 5 that are reproduced
    spec, v = _cp4()
    assert len(isolate_roots(v.polynomial, Domain.closed(-1, 0))) == 2
    assert v.status is Status.VIOLATED
    assert proportional(v.polynomial, UniPoly(spec["recomputed_polynomial"]))


@pytest.mark.xfail(strict=True, reason="the published degree-4 polynomial is not reproduced; see the decisions ledger")
def test_criterion_05_cp4_tangent():
    start = time.perf_counter()
    spec, v = _cp4()
    poly = v.polynomial
    published = UniPoly(spec["published_polynomial"])
    prop = proportional(poly, published)
    n_roots = len(isolate_roots(poly, Domain.closed(-1, 0)))
    ok = prop and n_roots == 2 and v.status is Status.VIOLATED
    detail = (
        f"polynomial {poly.primitive()} vs published {published}: "
        f"{'proportional' if prop else 'NOT proportional'}; roots in [-1, 0]: {n_roots}; verdict {v.status}"
    )
    assert record_acceptance(5, ok, time.perf_counter() - start, 1, detail)


def test_criterion_06_cp2_candidates():
    start = time.perf_counter()
    candidates = [(1, 1), (9, 1), (9, 2), (9, 3), (9, 4)]
    passing, agree = [], 0
    for c1sq, c2 in candidates:
        v = complex_sphere_check(BundleData.from_text_numbers(U2, 2, {"c1^2": c1sq, "c2": c2}))
        agree += v.passed is complex_rank2_closed_form(c1sq, c2)
        if v.passed:
            passing.append((c1sq, c2))
    ok = passing == [(9, 1), (9, 2)] and agree == 5
    assert record_acceptance(6, ok, time.perf_counter() - start, 1, f"passing {passing}; closed form agrees on {agree}/5")


def test_criterion_07_g2_bundle():
    start = time.perf_counter()
    b = BundleData.from_text_numbers(SO4, 4, {"p1^2": 1, "p1*e": -1, "p2": 1})
    p1, _, e = SO4.class_family().gens()
    A, B = p1 - e * 2, p1 + e * 2
    pairings = (b.pair(A * A), b.pair(B * B), b.pair(A * B))
    v = check_fatness(b, OrbitCurve.rank2())
    roots = [r.exact for r in isolate_roots(v.polynomial)]
    orbits = sorted(o.representative for o in v.vanishing_orbits)
    cls = so4_case_analysis(b)
    ok = (
        pairings == (9, 1, -3)
        and proportional(v.polynomial, UniPoly([9, 0, -10, 0, 1]))
        and roots == [-3, -1, 1, 3]
        and orbits == [(1, -2), (1, 0)]
        and cls.details["r"] == Fraction(-1, 3)
        and cls.orbit_count == 2
    )
    detail = f"roots {[str(r) for r in roots]}, orbits {[tuple(map(int, o)) for o in orbits]}, r = {cls.details['r']}, {cls.orbit_count} orbits"
    assert record_acceptance(7, ok, time.perf_counter() - start, 1, detail)


def test_criterion_08_s8_bundles():
    start = time.perf_counter()
    real = all(S8SphereBundle(k, k).verdicts()["real"].status is Status.VIOLATED for k in range(-6, 7))
    quat = all(
        S8SphereBundle(8 * r, 4 * r).verdicts()["quaternionic"].status is Status.FORBIDDEN for r in (-3, -2, -1, 1, 2, 3)
    )
    restriction = dimension_restriction(16, 10) is False and dimension_restriction(8, 10) is False
    ok = real and quat and restriction
    detail = f"k=l real route violated: {real}; (8r,4r) forbidden: {quat}; no 10-dim fat subspace over dim 8 or 16: {restriction}"
    assert record_acceptance(8, ok, time.perf_counter() - start, 1, detail)


def test_criterion_09_path_equivalence():
    start = time.perf_counter()
    groups = [U2, GroupSpec("U", 3), SO4, GroupSpec("SO_odd", 2), GroupSpec("Sp", 1), GroupSpec("Sp", 2)]
    bad = []
    for g in groups:
        for k in range(0, 7):
            w, s = q_weyl_sum(g, k), q_schur_form(g, k)
            if not s:
                if w:
                    bad.append((g.label, k))
                continue
            r = w.ratio_to(s)
            if r is None or r <= 0:
                bad.append((g.label, k))
    ok = not bad
    assert record_acceptance(9, ok, time.perf_counter() - start, 120, f"6 groups x k <= 6, mismatches {bad}")


def test_criterion_10_symmetric_functions():
    start = time.perf_counter()
    failures = []
    for n in range(1, 5):
        for m in range(0, 9):
            for lam in enumerate_Km(m, n):
                vals = [schur(lam, n, route) for route in SCHUR_ROUTES]
                if any(v != vals[0] for v in vals):
                    failures.append(("routes", lam))
    for n in range(1, 5):
        for r in range(1, 13):
            total = MultiPoly.zero(n)
            for j in range(r + 1):
                term = elementary_sigma(j, n) * complete_h(r - j, n)
                total = total + term if j % 2 == 0 else total - term
            if total:
                failures.append(("recurrence", n, r))
    fam = sigma_family(2)
    s1, s2 = fam.gens()
    for m in range(0, 13):
        rhs = SymExpr.zero(fam)
        for j in range(m // 2 + 1):
            rhs = rhs + s1 ** (m - 2 * j) * (s1 * s1 - s2 * 4) ** j * comb(m + 1, 2 * j + 1)
        if h_in_sigma(m, 2) != rhs * Fraction(1, 2**m):
            failures.append(("two-variable", m))
    # specializations for n = 3
    n = 3
    t = UniPoly.t()
    for m in range(0, 9):
        if m <= n and schur((1,) * m + (0,) * (n - m), n) != elementary_sigma(m, n):
            failures.append(("column", m))
        if schur((m, 0, 0), n) != complete_h(m, n):
            failures.append(("row", m))
        for lam in enumerate_Km(m, n):
            k = lam[-1]
            if k and schur(lam, n) != elementary_sigma(n, n) ** k * schur(tuple(v - k for v in lam), n):
                failures.append(("full column", lam))
            if schur(lam, n).evaluate([1, 0, 0]) != (1 if lam[1] == 0 else 0):
                failures.append(("e1", lam))
            along = schur(lam, n).evaluate([UniPoly.one(), t, UniPoly()], one=UniPoly.one())
            want = sum((t**i for i in range(lam[1], m - lam[1] + 1)), UniPoly()) if lam[2] == 0 else UniPoly()
            if along != want:
                failures.append(("e1+te2", lam))
            dim = prod(Fraction(lam[i] - lam[j] + j - i, j - i) for i in range(n) for j in range(i + 1, n))
            if schur(lam, n).evaluate([1] * n) != dim:
                failures.append(("ones", lam))
    a, b = MultiPoly.gens(2)
    for m in range(0, 13):
        if exact_divide(a ** (m + 1) - b ** (m + 1), a - b) != complete_h(m, 2):
            failures.append(("quotient", m))
    ok = not failures
    assert record_acceptance(10, ok, time.perf_counter() - start, 30, f"failures {failures[:5]}")


def test_criterion_11_haar_oracle():
    start = time.perf_counter()
    so3 = GroupSpec("SO_odd", 1)
    cfg = McConfig(1_000_000, 20240611)
    est = mc_moments(so3, [1], [1], [2, 4, 6], cfg)
    sigmas = [abs(est.means[i] - 1 / (2 * k + 1)) / est.std_error(i) for i, k in enumerate((1, 2, 3))]
    u2 = ratio_validate(U2, [1, 0], [1, 0], 4, 2, McConfig(1_000_000, 20240612))
    again = mc_moments(so3, [1], [1], [2, 4, 6], cfg)
    ok = all(s <= 4 for s in sigmas) and u2.passed and again == est
    detail = f"SO(3) deviations {', '.join(f'{s:.2f}' for s in sigmas)} sigma; U(2) 4/2 ratio {u2.mc_ratio:.5f} vs 3/5 ({u2.deviation:.2f} sigma); repeat identical: {again == est}"
    assert record_acceptance(11, ok, time.perf_counter() - start, 60, detail)


def test_criterion_12_trichotomy():
    start = time.perf_counter()
    rng = random.Random(2024)
    mismatches, counted_c = [], 0
    for i in range(200):
        m = rng.choice([2, 4, 6, 8])
        r = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
        scale = rng.choice([-2, -1, 1, 3])
        group, make, analyse = (U2, u2_ratio_bundle, u2_case_analysis) if i % 2 else (SO4, so4_ratio_bundle, so4_case_analysis)
        b = make(m, r, scale)
        v = analyse(b, r)  # raises if root isolation disagrees with the closed form
        generic = check_fatness(b, OrbitCurve.rank2())
        want = closed_form_orbit_count(r, False, m)
        if not (v.orbit_count == generic.orbit_count == want):
            mismatches.append((group.label, m, r))
        if r < 0:
            counted_c += 1
            if generic.orbit_count != m // 2:
                mismatches.append((group.label, m, r, "count"))
    ok = not mismatches and counted_c > 50
    assert record_acceptance(12, ok, time.perf_counter() - start, 30, f"200 instances ({counted_c} with r < 0), mismatches {mismatches}")


def test_criterion_13_lens_bundles():
    start = time.perf_counter()
    cbar_ok = all(grassmannian_cbar(k) == grassmannian_cbar_closed(k) for k in range(13))
    b = BundleData.from_text_numbers(U2, 2, {"c1^2": 1, "c2": 1})
    c1, c2 = b.family.gens()
    r = b.pair(c1 * c1) / b.pair(c1 * c1 - c2 * 4)
    bad, checked = [], 0
    for p in range(-5, 6):
        for q in range(-5, 6):
            if gcd(p, q) != 1 or (p == q and abs(p) != 1):
                continue
            checked += 1
            if lens_check(p, q, b).passed is not (p * q > 0):
                bad.append((p, q))
    thr = lens_threshold(1, 0, 2)
    ok = cbar_ok and r == Fraction(-1, 3) and not bad and abs(thr + 1 / 3) < 1e-15
    detail = f"cbar recursion = closed form (k <= 12): {cbar_ok}; r = {r}; {checked} slopes, mismatches {bad}; threshold coefficient {thr:.15f}"
    assert record_acceptance(13, ok, time.perf_counter() - start, 5, detail)


def test_every_criterion_reported():
    # runs last in file order
    assert set(ACCEPTANCE) == set(range(1, 14))

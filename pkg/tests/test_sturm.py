from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from fatcheck.errors import AllZero
from fatcheck.obstruction import Domain, Interval, default_precision, isolate_roots, sturm_count
from fatcheck.obstruction.sturm import simplest_between
from fatcheck.symfun.unipoly import UniPoly

G2_POLY = UniPoly([9, 0, -10, 0, 1])
CP4_DISPLAY = UniPoly([14, 119, 219, 119, 14])


def test_counts_on_the_line():
    assert sturm_count(G2_POLY) == 4
    assert sturm_count(UniPoly([1, 0, 1])) == 0
    assert sturm_count(UniPoly.const(3)) == 0


def test_count_on_closed_interval():
    assert sturm_count(CP4_DISPLAY, Domain.closed(-1, 0)) == 2


def test_endpoint_flags():
    p = UniPoly([-1, 0, 1])  # roots at -1 and 1
    assert sturm_count(p, Domain.closed(-1, 1)) == 2
    assert sturm_count(p, Domain([Interval(-1, 1, False, False)])) == 0
    assert sturm_count(p, Domain.at_least(1)) == 1
    assert sturm_count(p, Domain.at_least(1, closed=False)) == 0
    assert sturm_count(p, Domain.at_most(0)) == 1


def test_zero_polynomial_signals():
    with pytest.raises(AllZero):
        sturm_count(UniPoly())
    with pytest.raises(AllZero):
        isolate_roots(UniPoly())


def test_isolation_g2_polynomial_is_exact():
    roots = isolate_roots(G2_POLY, None, Fraction(1, 10**6))
    assert [r.exact for r in roots] == [-3, -1, 1, 3]


def test_double_root_on_unit_interval():
    (r,) = isolate_roots(UniPoly([Fraction(1, 4), -1, 1]), Domain.closed(0, 1))
    assert r.contains(Fraction(1, 2)) and r.multiplicity == 2


def test_irrational_roots_meet_precision():
    prec = Fraction(1, 10**9)
    roots = isolate_roots(UniPoly([-2, 0, 1]), None, prec)
    assert len(roots) == 2
    for r in roots:
        assert r.width <= prec
        assert r.lo * r.lo <= 2 <= r.hi * r.hi or r.hi * r.hi <= 2 <= r.lo * r.lo


def test_precision_from_environment(monkeypatch):
    monkeypatch.setenv("FATCHECK_PRECISION", "1/1000")
    assert default_precision() == Fraction(1, 1000)
    (r,) = isolate_roots(UniPoly([-2, 0, 1]), Domain.at_least(0))
    assert r.width <= Fraction(1, 1000)
    monkeypatch.setenv("FATCHECK_PRECISION", "-1")
    with pytest.raises(ValueError):
        default_precision()
    monkeypatch.delenv("FATCHECK_PRECISION")
    assert default_precision() == Fraction(1, 10**9)


@pytest.mark.parametrize(
    "text, inside, outside",
    [("full", [-10**6, 0], []), ("t<=0", [0, -5], [1]), ("t<0", [-5], [0]), ("t>=1/2", [Fraction(1, 2)], [0]), ("-1,0", [-1, 0], [1])],
)
def test_domain_parse(text, inside, outside):
    d = Domain.parse(text)
    assert all(d.contains(x) for x in inside)
    assert not any(d.contains(x) for x in outside)


def test_domain_parse_rejects_garbage():
    with pytest.raises(ValueError):
        Domain.parse("sometimes")


@given(st.fractions(min_value=-50, max_value=50, max_denominator=100), st.fractions(min_value=0, max_value=5, max_denominator=100))
def test_simplest_between(lo, width):
    hi = lo + width
    c = simplest_between(lo, hi)
    assert lo <= c <= hi
    assert all(not (lo <= Fraction(n, d) <= hi) for d in range(1, c.denominator) for n in range(int(lo * d) - 1, int(hi * d) + 2))


small_roots = st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=5), min_size=1, max_size=5)


@given(small_roots, st.integers(-3, 3).filter(bool))
def test_isolation_finds_every_rational_root(roots, lead):
    p = UniPoly.const(lead)
    for r in roots:
        p = p * UniPoly([-r, 1])
    found = isolate_roots(p)
    assert sorted({r.exact for r in found}) == sorted(set(roots))
    for r in found:
        assert r.multiplicity == roots.count(r.exact)


@given(st.lists(st.integers(-8, 8), min_size=2, max_size=7).filter(lambda c: c[-1] != 0))
def test_count_matches_sympy(coeffs):
    p = UniPoly(coeffs)
    t = sympy.Symbol("t")
    expr = sum(c * t**i for i, c in enumerate(coeffs))
    ref = sorted(set(sympy.Poly(expr, t).real_roots()))
    assert sturm_count(p) == len(ref)
    got = isolate_roots(p, None, Fraction(1, 10**6))
    assert len(got) == len(ref)
    for r, z in zip(got, ref):
        assert float(r.lo) - 1e-12 <= float(z) <= float(r.hi) + 1e-12

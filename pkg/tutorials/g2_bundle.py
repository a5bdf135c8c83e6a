"""Walk through a rank-two obstruction check on an SO(4) bundle.

The bundle has characteristic numbers p1^2 = 1, p1*e = -1, p2 = 1 in
degree 8. We build the degree-4 invariant along the standard rank-two
orbit curve, isolate its real roots exactly and read off where it
vanishes.

Run with ``python3 tutorials/g2_bundle.py``.
"""

from fatcheck.obstruction import BundleData, OrbitCurve, check_fatness, isolate_roots, so4_case_analysis
from fatcheck.weinstein import GroupSpec

so4 = GroupSpec("SO_even", 2)
bundle = BundleData.from_text_numbers(so4, 4, {"p1^2": 1, "p1*e": -1, "p2": 1})

# pairings against A = p1 - 2e and B = p1 + 2e
p1, _, e = so4.class_family().gens()
A, B = p1 - e * 2, p1 + e * 2
print("A^2, A*B, B^2 =", bundle.pair(A * A), bundle.pair(A * B), bundle.pair(B * B))

verdict = check_fatness(bundle, OrbitCurve.rank2())
print("invariant along the curve:", verdict.polynomial.primitive())
print("certified roots:", [str(r.exact) for r in isolate_roots(verdict.polynomial)])
print("status:", verdict.status)
for orbit in verdict.vanishing_orbits:
    print("  vanishes on the orbit of", tuple(str(c) for c in orbit.representative))

# the same answer from the proportionality classification
cls = so4_case_analysis(bundle)
print("ratio r =", cls.details["r"], "case", cls.details["case"], "orbits", cls.orbit_count)

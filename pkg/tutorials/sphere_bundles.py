"""Sphere-bundle checks over complex projective spaces and S^8.

Three short stories:

1. rank-two complex bundles over CP^2, where a closed-form rule and root
   isolation must agree;
2. the tangent bundle of CP^4, whose invariant has two roots in [-1, 0];
3. S^7 bundles over S^8, where each of the three sphere routes gives its
   own verdict.

Run with ``python3 tutorials/sphere_bundles.py``.
"""

from fatcheck.obstruction import (
    BundleData,
    Domain,
    S8SphereBundle,
    complex_rank2_closed_form,
    complex_sphere_check,
    isolate_roots,
)
from fatcheck.weinstein import GroupSpec

u2 = GroupSpec("U", 2)
print("rank-two bundles over CP^2")
for c1sq, c2 in [(1, 1), (9, 1), (9, 2), (9, 3), (9, 4)]:
    v = complex_sphere_check(BundleData.from_text_numbers(u2, 2, {"c1^2": c1sq, "c2": c2}))
    print(f"  c1^2={c1sq} c2={c2}: passes {v.passed}, closed form {complex_rank2_closed_form(c1sq, c2)}")

print("\ntangent bundle of CP^4")
numbers = {"c1^4": 625, "c1^2*c2": 250, "c1*c3": 50, "c2^2": 100, "c4": 5}
v = complex_sphere_check(BundleData.from_text_numbers(GroupSpec("U", 4), 4, numbers))
roots = isolate_roots(v.polynomial, Domain.closed(-1, 0))
print("  polynomial:", v.polynomial.primitive())
print("  roots in [-1, 0]:", [f"{float(r):.6f}" for r in roots])
print("  status:", v.status)

print("\nS^7 bundles over S^8, indexed by (k, l)")
for k, l in [(1, 1), (2, 1), (8, 4)]:
    verdicts = S8SphereBundle(k, l).verdicts()
    print(f"  ({k}, {l}):", {route: str(v.status) for route, v in verdicts.items()})

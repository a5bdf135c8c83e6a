"""Check exact invariant ratios against Haar sampling.

The exact side comes from the Weyl-sum formula. The sampled side averages
<Ad(g) y, x>^k over Haar-random g. The two are independent routes to the
same number, so agreement within a few standard errors is real evidence.

Run with ``python3 tutorials/monte_carlo_oracle.py``. It takes a few seconds.
"""

from fractions import Fraction

from fatcheck.haar_oracle import McConfig, mc_moments, ratio_validate
from fatcheck.weinstein import GroupSpec

so3 = GroupSpec("SO_odd", 1)
est = mc_moments(so3, [1], [1], [2, 4, 6], McConfig(400_000, 11))
print("SO(3) moments of a unit orbit")
for i, k in enumerate((1, 2, 3)):
    exact = Fraction(1, 2 * k + 1)
    print(f"  degree {2 * k}: sampled {est.means[i]:.5f} +- {est.std_error(i):.5f}, exact {exact}")

report = ratio_validate(GroupSpec("U", 2), [1, 0], [1, 0], 4, 2, McConfig(400_000, 12))
print("\nU(2) degree 4 over degree 2 squared")
print(f"  exact {report.symbolic_ratio}, sampled {report.mc_ratio:.5f}, deviation {report.deviation:.2f} sigma")

# a deliberately wrong exact value must be rejected
bad = ratio_validate(so3, [1], [1], 4, 2, McConfig(400_000, 13), corrupt=Fraction(11, 10))
print("\ncorrupted exact value rejected:", not bad.passed, f"({bad.deviation:.1f} sigma)")

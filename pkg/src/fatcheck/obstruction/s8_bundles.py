"""7-sphere bundles over the 8-sphere, indexed by the gluing exponents ``(k, l)``.

The bundle glued by ``(u, v) -> (u, u^k v u^l)`` has ``p2 = 6(k - l)`` and
``e = k + l``; every lower class vanishes on the sphere. Which structure
group reductions exist is taken as a rule on ``(k, l)``: a complex structure
iff ``k = 2l`` with ``l`` even, a quaternionic one iff moreover ``4 | l``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..weinstein import GroupSpec
from .bundle import BundleData
from .checks import complex_sphere_check, quaternionic_sphere_check, real_sphere_check
from .verdict import Status, Verdict

__all__ = ["S8SphereBundle"]

M = 4


@dataclass(frozen=True)
class S8SphereBundle:
    k: int
    l: int

    @property
    def p2(self) -> int:
        return 6 * (self.k - self.l)

    @property
    def euler(self) -> int:
        return self.k + self.l

    @property
    def has_complex_structure(self) -> bool:
        return self.k == 2 * self.l and self.l % 2 == 0

    @property
    def has_quaternionic_structure(self) -> bool:
        return self.has_complex_structure and self.l % 4 == 0

    def real_bundle(self) -> BundleData:
        return BundleData.from_text_numbers(
            GroupSpec("SO_even", 4), M, {"p1^2": 0, "p2": self.p2, "e": self.euler}
        )

    def complex_bundle(self) -> BundleData:
        """U(4) data: only ``c4 = e`` survives on the sphere."""
        nums = {"c1^4": 0, "c1^2*c2": 0, "c1*c3": 0, "c2^2": 0, "c4": self.euler}
        return BundleData.from_text_numbers(GroupSpec("U", 4), M, nums)

    def quaternionic_bundle(self) -> BundleData:
        return BundleData.from_text_numbers(GroupSpec("Sp", 2), M, {"p1^2": 0, "p2": self.euler})

    def verdicts(self) -> dict[str, Verdict]:
        """One verdict per structure group the bundle admits."""
        out = {"real": real_sphere_check(self.real_bundle())}
        if self.has_complex_structure:
            out["complex"] = complex_sphere_check(self.complex_bundle())
        if self.has_quaternionic_structure:
            out["quaternionic"] = quaternionic_sphere_check(self.quaternionic_bundle())
        return out

    def fatness_excluded(self) -> bool:
        return any(not v.passed for v in self.verdicts().values())

    def consistent(self) -> bool:
        """``p2 = 2 c4`` must hold whenever a complex structure is claimed."""
        return not self.has_complex_structure or Fraction(self.p2) == 2 * self.euler

"""One-parameter families of torus points along which invariants are tested."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import UnsupportedGroup, ZeroVector
from ..symfun.unipoly import UniPoly
from ..weinstein.groups import GroupSpec
from .sturm import Domain, RootInterval

__all__ = ["OrbitCurve", "normalize_orbit_point"]

IDENTIFICATIONS = (None, "negate", "reciprocal")


@dataclass(frozen=True)
class OrbitCurve:
    """``y(t) = a + b t`` on a domain, optionally with the limit orbit ``y = b``.

    Parameters
    ----------
    base, slope : tuple of Fraction
        The affine coefficients ``a`` and ``b``.
    domain : Domain
    includes_infinity_orbit : bool
        Whether the normalized limit ``t -> infinity`` (the orbit of ``b``)
        belongs to the tested set.
    identification : {None, "negate", "reciprocal"}
        Parameter values known to give the same orbit: ``t ~ -t`` for the
        symmetric rank-2 curve, ``t ~ 1/t`` for the rank-3 trace-zero curve.
    name : str
    """

    base: tuple[Fraction, ...]
    slope: tuple[Fraction, ...]
    domain: Domain
    includes_infinity_orbit: bool = False
    identification: str | None = None
    name: str = ""

    def __post_init__(self):
        base = tuple(Fraction(v) for v in self.base)
        slope = tuple(Fraction(v) for v in self.slope)
        if len(base) != len(slope):
            raise ValueError("base and slope need the same length")
        if not any(base) and not any(slope):
            raise ZeroVector("curve is identically zero")
        if self.identification not in IDENTIFICATIONS:
            raise ValueError(f"identification must be one of {IDENTIFICATIONS}")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "slope", slope)

    # constructors ---------------------------------------------------------------
    @classmethod
    def rank2(cls, domain: Domain | None = None, infinity: bool = True) -> "OrbitCurve":
        """``y = (1+t, 1-t)``, which meets every rank-2 orbit up to scale."""
        return cls((1, 1), (1, -1), domain or Domain.real_line(), infinity, "negate", "rank2")

    @classmethod
    def su3(cls) -> "OrbitCurve":
        """``y = (1, t, -1-t)`` for ``0 <= t <= 1``: a chamber of the SU(3) torus up to scale."""
        return cls((1, 0, -1), (0, 1, -1), Domain.closed(0, 1), False, "reciprocal", "su3")

    @classmethod
    def point(cls, y: Sequence) -> "OrbitCurve":
        """A single orbit, parametrized constantly at ``t = 0``."""
        y = tuple(Fraction(v) for v in y)
        return cls(y, (0,) * len(y), Domain.closed(0, 0), False, None, "point")

    @classmethod
    def e1_plus_te2(cls, n: int, domain: Domain) -> "OrbitCurve":
        base = [1] + [0] * (n - 1)
        slope = [0, 1] + [0] * (n - 2)
        return cls(tuple(base), tuple(slope), domain, False, None, "e1+te2")

    # evaluation -----------------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.base)

    def coordinates(self) -> list[UniPoly]:
        return [UniPoly.affine(a, b) for a, b in zip(self.base, self.slope)]

    def at(self, t) -> tuple[Fraction, ...]:
        t = Fraction(t)
        return tuple(a + b * t for a, b in zip(self.base, self.slope))

    def canonical_interval(self, root: RootInterval) -> tuple[Fraction, Fraction]:
        """Image of a root enclosure under the orbit identification."""
        lo, hi = root.lo, root.hi
        if self.identification == "negate":
            if hi <= 0:
                return -hi, -lo
            if lo < 0:
                return Fraction(0), max(-lo, hi)
        elif self.identification == "reciprocal" and lo > 0:
            if lo >= 1:
                return 1 / hi, 1 / lo
            if hi > 1:
                return min(lo, 1 / hi), Fraction(1)
        return lo, hi


def _weyl_images(group: GroupSpec, y: tuple[Fraction, ...]):
    fam = group.family
    if fam == "Torus":
        yield y
        return
    if fam in ("O_even", "O_odd"):
        # O(n) conjugation contains the full signed permutation group
        fam_group = GroupSpec("SO_odd", group.rank)
    else:
        fam_group = group
    for perm, signs in fam_group.weyl_group():
        yield tuple(s * y[p] for p, s in zip(perm, signs))


def normalize_orbit_point(group: GroupSpec | None, y: Sequence) -> tuple[Fraction, ...]:
    """Canonical representative of the ray of orbits through ``y``.

    Chooses the Weyl image whose first coordinate is the smallest positive
    value and scales it to 1. Falls back to scaling the first nonzero
    coordinate when no image has a positive first coordinate.
    """
    y = tuple(Fraction(v) for v in y)
    if not any(y):
        raise ZeroVector("orbit point must be nonzero")
    best = None
    if group is not None:
        try:
            for img in _weyl_images(group, y):
                if img[0] > 0 and (best is None or img[0] < best[0] or (img[0] == best[0] and img > best)):
                    best = img
        except UnsupportedGroup:
            best = None
    if best is None:
        lead = next(v for v in y if v)
        return tuple(v / abs(lead) for v in y)
    return tuple(v / best[0] for v in best)

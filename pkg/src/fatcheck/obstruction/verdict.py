"""Verdicts returned by the fatness checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from ..symfun.unipoly import UniPoly
from .sturm import RootInterval

__all__ = ["Status", "VanishingOrbit", "Verdict"]


class Status(str, Enum):
    NONVANISHING = "NonvanishingEverywhere"
    VANISHES = "VanishesOnOrbits"
    VIOLATED = "ObstructionViolated"
    FORBIDDEN = "DimensionForbidden"

    def __str__(self) -> str:
        return self.value

    @property
    def exit_code(self) -> int:
        return 0 if self is Status.NONVANISHING else 1


@dataclass(frozen=True)
class VanishingOrbit:
    """One adjoint orbit on which the invariant vanishes.

    ``parameter`` is a certified root of the curve parameter, or None for the
    limit orbit ``t -> infinity``. ``representative`` is a normalized torus
    point (exact when the root is rational, approximate otherwise).
    """

    parameter: RootInterval | None
    multiplicity: int
    representative: tuple[Fraction, ...] | None = None
    label: str = ""

    @property
    def at_infinity(self) -> bool:
        return self.parameter is None

    def __str__(self) -> str:
        where = "t = infinity" if self.parameter is None else f"t = {self.parameter}"
        rep = ""
        if self.representative is not None:
            exact = self.parameter is None or self.parameter.exact is not None
            vals = ", ".join(str(v) if exact else f"{float(v):.10g}" for v in self.representative)
            rep = f"  y ~ ({vals})"
        tag = f" [{self.label}]" if self.label else ""
        return f"{where}{rep}{tag}"


@dataclass
class Verdict:
    """Outcome of an obstruction check.

    ``vanishing_orbits`` is nonempty exactly for the vanishing and violated
    statuses (an identically vanishing invariant carries one orbit entry
    labelled ``all``).
    """

    status: Status
    vanishing_orbits: list[VanishingOrbit] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    polynomial: UniPoly | None = None
    identically_zero: bool = False
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        failing = self.status in (Status.VANISHES, Status.VIOLATED)
        if failing != bool(self.vanishing_orbits):
            raise ValueError(f"status {self.status} inconsistent with {len(self.vanishing_orbits)} orbits")

    @property
    def orbit_count(self) -> int:
        """Distinct vanishing orbits; -1 when the invariant vanishes identically."""
        return -1 if self.identically_zero else len(self.vanishing_orbits)

    @property
    def passed(self) -> bool:
        return self.status is Status.NONVANISHING

    @property
    def exit_code(self) -> int:
        return self.status.exit_code

    def report(self) -> str:
        lines = [f"status: {self.status}"]
        if self.polynomial is not None:
            lines.append(f"polynomial: {self.polynomial.primitive() if self.polynomial else 0}")
        if self.identically_zero:
            lines.append("the invariant vanishes identically on the orbit family")
        elif self.vanishing_orbits:
            lines.append(f"vanishing orbits: {self.orbit_count}")
            lines += [f"  {o}" for o in self.vanishing_orbits]
        lines += [f"note: {n}" for n in self.notes]
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.report()

"""Compact groups supported by the invariant synthesis, with their torus data."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator

from ..errors import UnsupportedGroup
from ..symfun import (
    Family,
    MultiPoly,
    chern_family,
    g2_family,
    pontrjagin_euler_family,
    pontrjagin_family,
    torus_family,
)
from ..symfun.symmetric import perm_sign

__all__ = ["GroupSpec", "FAMILIES", "parse_group", "WeylElement"]

FAMILIES = ("Torus", "U", "SU", "SO_even", "SO_odd", "O_even", "O_odd", "Sp", "G2")

_ALIASES = {
    "t": "Torus",
    "torus": "Torus",
    "u": "U",
    "su": "SU",
    "so": "SO_even",
    "so_even": "SO_even",
    "so_odd": "SO_odd",
    "o": "O_even",
    "o_even": "O_even",
    "o_odd": "O_odd",
    "sp": "Sp",
    "g2": "G2",
}

# (perm, signs): (w x)_i = signs[i] * x[perm[i]]
WeylElement = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class GroupSpec:
    """A compact group by family and rank.

    ``rank`` is the torus rank ``n``: ``SO_even`` with rank 2 is SO(4),
    ``SO_odd`` with rank 2 is SO(5). For ``SU`` the torus coordinates are the
    ``n`` diagonal entries constrained to sum to zero. ``G2`` always has
    rank 2 and is modelled on the plane ``s1 + s2 + s3 = 0``.
    """

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnsupportedGroup(f"unknown group family {self.family!r}; expected one of {FAMILIES}")
        if self.rank < 1:
            raise UnsupportedGroup("rank must be positive")
        if self.family == "SU" and self.rank < 2:
            raise UnsupportedGroup("SU(n) needs n >= 2")
        if self.family == "G2" and self.rank != 2:
            raise UnsupportedGroup("G2 has rank 2")

    # derived data -----------------------------------------------------------
    @property
    def label(self) -> str:
        n = self.rank
        return {
            "Torus": f"T^{n}",
            "U": f"U({n})",
            "SU": f"SU({n})",
            "SO_even": f"SO({2 * n})",
            "SO_odd": f"SO({2 * n + 1})",
            "O_even": f"O({2 * n})",
            "O_odd": f"O({2 * n + 1})",
            "Sp": f"Sp({n})",
            "G2": "G2",
        }[self.family]

    @property
    def r(self) -> int:
        """Number of positive roots."""
        n = self.rank
        if self.family == "Torus":
            return 0
        if self.family in ("U", "SU"):
            return n * (n - 1) // 2
        if self.family in ("SO_even", "O_even"):
            return n * (n - 1)
        if self.family == "G2":
            return 6
        return n * n

    @property
    def epsilon(self) -> int | None:
        """0 for O(2n), 1 for O(2n+1), SO(2n+1) and Sp(n), None otherwise."""
        if self.family == "O_even":
            return 0
        if self.family in ("O_odd", "SO_odd", "Sp"):
            return 1
        return None

    @property
    def is_pontrjagin(self) -> bool:
        return self.family in ("SO_even", "SO_odd", "O_even", "O_odd", "Sp")

    @property
    def torus_dim(self) -> int:
        """Number of torus coordinates (3 for G2, n for SU(n))."""
        return 3 if self.family == "G2" else self.rank

    @property
    def trace_zero(self) -> bool:
        return self.family in ("SU", "G2")

    @property
    def lie_dim(self) -> int:
        n = self.rank
        return {
            "Torus": n,
            "U": n * n,
            "SU": n * n - 1,
            "SO_even": n * (2 * n - 1),
            "O_even": n * (2 * n - 1),
            "SO_odd": n * (2 * n + 1),
            "O_odd": n * (2 * n + 1),
            "Sp": n * (2 * n + 1),
            "G2": 14,
        }[self.family]

    def class_family(self) -> Family:
        """Characteristic-class generators for this group."""
        n = self.rank
        if self.family == "Torus":
            return torus_family(n)
        if self.family == "U":
            return chern_family(n)
        if self.family == "SU":
            return chern_family(n, su=True)
        if self.family == "SO_even":
            return pontrjagin_euler_family(n)
        if self.family == "G2":
            return g2_family()
        return pontrjagin_family(n)

    # Weyl group and roots ---------------------------------------------------
    def weyl_group(self) -> Iterator[WeylElement]:
        """Elements ``(perm, signs)`` acting by ``(w x)_i = signs[i] x[perm[i]]``.

        O(n) families have no Weyl group in the connected sense and are
        rejected, as is the torus.
        """
        n = self.torus_dim
        fam = self.family
        if fam in ("Torus", "O_even", "O_odd"):
            raise UnsupportedGroup(f"no Weyl-sum route for {self.label}")
        if fam in ("U", "SU"):
            sign_sets = [(1,) * n]
        elif fam == "G2":
            sign_sets = [(1,) * n, (-1,) * n]
        else:
            sign_sets = list(product((1, -1), repeat=n))
            if fam == "SO_even":
                sign_sets = [s for s in sign_sets if s.count(-1) % 2 == 0]
        for perm in permutations(range(n)):
            for signs in sign_sets:
                yield perm, signs

    def weyl_det(self, w: WeylElement) -> int:
        """Determinant of ``w`` on the torus (the G2 plane for G2)."""
        perm, signs = w
        d = perm_sign(perm)
        if self.family == "G2":
            # -1 acts on the two-dimensional plane with determinant +1
            return d
        for s in signs:
            d *= s
        return d

    def positive_root_factors(self, nvars: int, offset: int = 0) -> list[MultiPoly]:
        """Linear or quadratic factors whose product is the positive-root product.

        Factors live in a ring of ``nvars`` variables with the torus
        coordinates starting at ``offset``. Pairs of roots ``x_i +- x_j`` are
        merged into ``x_i^2 - x_j^2``.
        """
        n = self.torus_dim
        x = [MultiPoly.var(offset + i, nvars) for i in range(n)]
        out: list[MultiPoly] = []
        fam = self.family
        if fam in ("U", "SU", "G2"):
            out += [x[i] - x[j] for i in range(n) for j in range(i + 1, n)]
        else:
            out += [x[i] * x[i] - x[j] * x[j] for i in range(n) for j in range(i + 1, n)]
        if fam in ("SO_odd", "G2"):
            out += x
        elif fam == "Sp":
            out += [xi * 2 for xi in x]
        return out


_PAREN = re.compile(r"^\s*([A-Za-z]+)\s*\(\s*(\d+)\s*\)\s*$")
_TORUS = re.compile(r"^\s*T\s*\^?\s*(\d+)\s*$", re.IGNORECASE)


def parse_group(text: str, rank: int | None = None) -> GroupSpec:
    """Parse ``U(2)``, ``SO(5)``, ``Sp(1)``, ``G2``, ``T^2`` or a family name plus rank.

    ``SO(k)`` and ``O(k)`` choose the even or odd family from ``k``. A bare
    ``SO`` or ``O`` with ``rank`` means the even family ``SO(2 rank)``.

    Raises
    ------
    UnsupportedGroup
        If the text does not name a supported group.
    """
    t = text.strip()
    m = _PAREN.match(t)
    if m:
        name, k = m.group(1).upper(), int(m.group(2))
        if name in ("SO", "O"):
            if k < 2:
                raise UnsupportedGroup(f"{t} has trivial torus")
            fam = ("SO" if name == "SO" else "O") + ("_even" if k % 2 == 0 else "_odd")
            return GroupSpec(fam, k // 2)
        if name in ("U", "SU"):
            return GroupSpec(name, k)
        if name == "SP":
            return GroupSpec("Sp", k)
        raise UnsupportedGroup(f"unknown group {t!r}")
    m = _TORUS.match(t)
    if m and rank is None:
        return GroupSpec("Torus", int(m.group(1)))
    key = t.lower()
    if key not in _ALIASES:
        raise UnsupportedGroup(f"unknown group {t!r}; expected one of {FAMILIES} or forms like SO(4)")
    fam = _ALIASES[key]
    if fam == "G2":
        return GroupSpec("G2", 2)
    if rank is None:
        raise UnsupportedGroup(f"group {t!r} needs a rank")
    return GroupSpec(fam, rank)

"""Characteristic numbers of a principal bundle, and the bundle file format.

File format (line oriented, ``#`` starts a comment)::

    group=U
    rank=2
    m=4
    su=false
    c1^4 = 625
    c1^2*c2 = 250
    c2^2 = 100

``group`` also accepts forms such as ``SO(4)`` or ``Sp(1)``, in which case
``rank`` may be omitted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Mapping

from ..errors import BundleFormatError, DegreeMismatch, MissingClassNumber, UnsupportedGroup
from ..symfun import Family, SymExpr, format_monomial, parse_monomial, product_family
from ..weinstein.groups import GroupSpec, parse_group

__all__ = ["BundleData", "parse_bundle", "load_bundle"]


@dataclass(frozen=True)
class BundleData:
    """Top-degree characteristic numbers of a bundle over a ``2m``-dimensional base.

    Parameters
    ----------
    group : GroupSpec or tuple of GroupSpec
        Structure group; a pair means a product group.
    m : int
        Half the base dimension.
    numbers : mapping
        Canonical class monomial (exponent tuple) to rational number.
    family : Family, optional
        Defaults to the group's class family (or the product family).

    Raises
    ------
    DegreeMismatch
        If a monomial does not have class degree ``m``.
    """

    group: object
    m: int
    numbers: Mapping[tuple[int, ...], Fraction]
    family: Family | None = field(default=None)

    def __post_init__(self):
        fam = self.family
        if fam is None:
            if isinstance(self.group, tuple):
                left, right = self.group
                fam = product_family(left.class_family(), right.class_family())
            else:
                fam = self.group.class_family()
            object.__setattr__(self, "family", fam)
        clean = {}
        for e, v in self.numbers.items():
            e = tuple(e)
            if len(e) != fam.size:
                raise BundleFormatError(f"monomial {e} does not fit {fam.label}")
            if fam.euler is not None and e[fam.euler] > 1:
                raise BundleFormatError(f"{format_monomial(e, fam)} is not reduced")
            if fam.weight(e) != self.m:
                raise DegreeMismatch(
                    f"{format_monomial(e, fam)} has degree {fam.weight(e)}, expected {self.m}"
                )
            clean[e] = Fraction(v)
        object.__setattr__(self, "numbers", clean)

    @classmethod
    def from_text_numbers(cls, group, m: int, numbers: Mapping[str, object], family: Family | None = None) -> "BundleData":
        """Build from ``{"c1^2": 9, "c2": 1}`` style keys."""
        if family is None:
            if isinstance(group, tuple):
                family = product_family(group[0].class_family(), group[1].class_family())
            else:
                family = group.class_family()
        parsed = {}
        for k, v in numbers.items():
            try:
                parsed[parse_monomial(k, family)] = Fraction(v)
            except ValueError as exc:
                raise BundleFormatError(str(exc)) from None
        return cls(group, m, parsed, family)

    @property
    def label(self) -> str:
        if isinstance(self.group, tuple):
            return " x ".join(g.label for g in self.group)
        return self.group.label

    def number(self, monomial) -> Fraction:
        """Number for one monomial (text or exponent tuple).

        Raises
        ------
        MissingClassNumber
            If the monomial has no stored value. Zero must be stored explicitly.
        """
        e = parse_monomial(monomial, self.family) if isinstance(monomial, str) else tuple(monomial)
        if e not in self.numbers:
            raise MissingClassNumber(format_monomial(e, self.family))
        return self.numbers[e]

    def pair(self, expr: SymExpr) -> Fraction:
        """Evaluate a class expression of degree ``m`` on the fundamental cycle."""
        if expr.family != self.family:
            raise ValueError(f"expression over {expr.family.label}, bundle over {self.family.label}")
        try:
            return expr.pair(self.numbers)
        except KeyError as exc:
            raise MissingClassNumber(exc.args[0]) from None

    def with_numbers(self, numbers: Mapping[tuple[int, ...], Fraction]) -> "BundleData":
        return BundleData(self.group, self.m, numbers, self.family)

    def to_text(self) -> str:
        g = self.group
        if isinstance(g, tuple):
            raise BundleFormatError("product bundles have no file form")
        fam = g.family
        su = fam == "SU"
        lines = [f"group={'U' if su else fam}", f"rank={g.rank}", f"m={self.m}"]
        if su:
            lines.append("su=true")
        for e in sorted(self.numbers, key=lambda v: v, reverse=True):
            lines.append(f"{format_monomial(e, self.family)} = {self.numbers[e]}")
        return "\n".join(lines) + "\n"


def parse_bundle(text: str) -> BundleData:
    """Parse the line-oriented bundle format.

    Raises
    ------
    BundleFormatError
        On missing headers, unknown generators, non-reduced monomials or
        malformed numbers.
    """
    headers: dict[str, str] = {}
    entries: list[tuple[int, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise BundleFormatError(f"line {lineno}: expected 'key=value' or 'monomial = number'")
        key, value = (s.strip() for s in line.split("=", 1))
        if key.lower() in ("group", "rank", "m", "su"):
            headers[key.lower()] = value
        else:
            entries.append((lineno, key, value))
    if "group" not in headers or "m" not in headers:
        raise BundleFormatError("bundle file needs group= and m= headers")
    try:
        rank = int(headers["rank"]) if "rank" in headers else None
        m = int(headers["m"])
    except ValueError:
        raise BundleFormatError("rank and m must be integers") from None
    su = headers.get("su", "false").lower() in ("true", "1", "yes")
    try:
        group = parse_group(headers["group"], rank)
    except UnsupportedGroup as exc:
        raise BundleFormatError(str(exc)) from None
    if su:
        if group.family not in ("U", "SU"):
            raise BundleFormatError("su=true only applies to unitary groups")
        group = GroupSpec("SU", group.rank)
    fam = group.class_family()
    numbers: dict[tuple[int, ...], Fraction] = {}
    for lineno, mono, value in entries:
        if su and any(f.strip().split("^")[0] == "c1" for f in mono.split("*")):
            raise BundleFormatError(f"line {lineno}: c1 vanishes under su=true")
        try:
            e = parse_monomial(mono, fam)
        except ValueError as exc:
            raise BundleFormatError(f"line {lineno}: {exc}") from None
        try:
            v = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise BundleFormatError(f"line {lineno}: {value!r} is not a rational number") from None
        if e in numbers:
            raise BundleFormatError(f"line {lineno}: duplicate monomial {mono}")
        numbers[e] = v
    try:
        return BundleData(group, m, numbers)
    except DegreeMismatch as exc:
        raise BundleFormatError(str(exc)) from None


def load_bundle(path: str | Path) -> BundleData:
    return parse_bundle(Path(path).read_text())

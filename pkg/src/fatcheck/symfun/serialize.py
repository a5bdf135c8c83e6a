"""Canonical line-oriented serialization of polynomials.

One record per term, ``num/den e1 e2 ... ek``, terms in descending
graded-lex order of their exponent vectors. The empty polynomial is the
empty string. Integral coefficients are still written with ``/1`` so every
record has the same shape.
"""

from __future__ import annotations

from fractions import Fraction

from .multipoly import MultiPoly

__all__ = ["to_records", "from_records"]


def to_records(p: MultiPoly) -> str:
    lines = []
    for e, c in p.sorted_terms():
        c = Fraction(c)
        exps = " ".join(str(k) for k in e)
        lines.append(f"{c.numerator}/{c.denominator} {exps}".rstrip())
    return "\n".join(lines)


def from_records(text: str, nvars: int | None = None) -> MultiPoly:
    """Inverse of :func:`to_records`.

    Raises
    ------
    ValueError
        On malformed records or inconsistent exponent lengths.
    """
    terms: dict[tuple[int, ...], Fraction] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            coeff = Fraction(fields[0])
            exps = tuple(int(f) for f in fields[1:])
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"line {lineno}: cannot parse record {line!r}") from exc
        if any(k < 0 for k in exps):
            raise ValueError(f"line {lineno}: negative exponent")
        if nvars is None:
            nvars = len(exps)
        elif len(exps) != nvars:
            raise ValueError(f"line {lineno}: expected {nvars} exponents, got {len(exps)}")
        if exps in terms:
            raise ValueError(f"line {lineno}: repeated monomial {exps}")
        terms[exps] = coeff
    return MultiPoly(nvars or 0, terms)

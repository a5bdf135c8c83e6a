"""Integer partitions with a fixed number of parts.

A partition here is a plain tuple of non-negative integers in non-increasing
order, padded with explicit trailing zeros to a fixed context length. All
functions are pure.
"""

from __future__ import annotations

from math import factorial
from typing import Iterator, Sequence

Partition = tuple[int, ...]

__all__ = [
    "Partition",
    "is_partition",
    "degree",
    "enumerate_Km",
    "enumerate_Km_conjugate",
    "conjugate",
    "rho",
    "shifted_factorial",
    "complement_reversed",
]


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def degree(parts: Sequence[int]) -> int:
    return sum(parts)


def _bounded(m: int, n: int, cap: int) -> Iterator[Partition]:
    # reverse-lexicographic: largest first part first
    if n == 0:
        if m == 0:
            yield ()
        return
    if m > n * cap:
        return
    for first in range(min(m, cap), -1, -1):
        rest = m - first
        if rest > first * (n - 1):
            break
        for tail in _bounded(rest, n - 1, first):
            yield (first,) + tail


def enumerate_Km(m: int, n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``m`` into exactly ``n`` (possibly zero) parts.

    Parameters
    ----------
    m : int
        Degree. Negative degrees give the empty list.
    n : int
        Number of parts, ``n >= 1``.
    max_part : int, optional
        Upper bound for the largest part.

    Returns
    -------
    list of tuple
        Partitions in reverse-lexicographic order, zero padded to length ``n``.
    """
    if n < 1:
        raise ValueError("need at least one part")
    if not isinstance(m, int) or m < 0:
        return []
    cap = m if max_part is None else max_part
    return list(_bounded(m, n, cap))


def enumerate_Km_conjugate(m: int, n: int) -> list[Partition]:
    """Partitions of ``m`` into ``m`` parts, each part at most ``n``.

    These are exactly the conjugates of ``enumerate_Km(m, n)``.
    """
    if not isinstance(m, int) or m < 0:
        return []
    if m == 0:
        return [()]
    return enumerate_Km(m, m, max_part=n)


def conjugate(parts: Sequence[int], target_length: int) -> Partition:
    """Conjugate partition, padded to ``target_length`` parts.

    Raises
    ------
    ValueError
        If ``target_length`` is smaller than the largest part.
    """
    top = parts[0] if len(parts) else 0
    if target_length < top:
        raise ValueError(
            f"conjugate of {tuple(parts)} needs {top} parts, got {target_length}"
        )
    return tuple(sum(1 for p in parts if p >= i) for i in range(1, target_length + 1))


def rho(n: int) -> Partition:
    if n < 1:
        raise ValueError("rho needs n >= 1")
    return tuple(range(n - 1, -1, -1))


def shifted_factorial(parts: Sequence[int], scale: int = 1, offset: int = 0) -> int:
    """Exact product of ``(scale * (parts + rho)_i + offset)!`` over all parts."""
    r = rho(len(parts))
    out = 1
    for p, s in zip(parts, r):
        v = scale * (p + s) + offset
        if v < 0:
            raise ValueError("negative factorial argument")
        out *= factorial(v)
    return out


def complement_reversed(parts: Sequence[int], n: int) -> Partition:
    """``(n - parts[-1], ..., n - parts[0])`` for a partition with parts <= n."""
    return tuple(n - p for p in reversed(parts))

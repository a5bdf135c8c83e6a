"""Monte Carlo averages of ``<Ad_g y, x>^k`` over compact groups.

Used only as an oracle: ratios of two moments are compared with ratios of
the symbolic invariants, so no normalization of Haar measure is needed.

Torus coordinates follow the standard models: ``i diag(y)`` for U(n),
``diag(y_1 J, ..., y_n J)`` (plus a zero row for odd size) for SO(n), and
``i diag(y)`` as a quaternionic matrix for Sp(n), embedded in U(2n). The
inner products ``Re tr(A* B)``, ``tr(A^T B)/2`` and ``Re tr(A* B)/2`` make
those coordinates orthonormal.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DegenerateDenominator, UnsupportedGroup
from .weinstein import GroupSpec, weinstein_form

__all__ = [
    "McConfig",
    "McEstimate",
    "RatioReport",
    "haar_sample",
    "torus_element",
    "adjoint_pairing",
    "mc_q",
    "mc_moments",
    "ratio_validate",
    "symbolic_value",
]

SUPPORTED = ("U", "SO_even", "SO_odd", "Sp")
MAX_RANK = 4


@dataclass(frozen=True)
class McConfig:
    """Sampling parameters.

    Results depend only on ``(seed, chunk_size, sample_count)``; ``workers``
    changes the wall time but not a single bit of the estimate.
    """

    sample_count: int = 1_000_000
    seed: int = 0
    chunk_size: int = 20_000
    workers: int = 1

    def __post_init__(self):
        if self.sample_count < 1 or self.chunk_size < 1:
            raise ValueError("sample_count and chunk_size must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")

    def chunks(self) -> list[tuple[np.random.SeedSequence, int]]:
        n_full, rest = divmod(self.sample_count, self.chunk_size)
        sizes = [self.chunk_size] * n_full + ([rest] if rest else [])
        seqs = np.random.SeedSequence(self.seed).spawn(len(sizes))
        return list(zip(seqs, sizes))


def _check(group: GroupSpec):
    if group.family not in SUPPORTED:
        raise UnsupportedGroup(f"no Haar sampler for {group.label}; supported: {SUPPORTED}")
    if group.rank > MAX_RANK:
        raise UnsupportedGroup(f"Haar oracle supports rank <= {MAX_RANK}")


def _matrix_size(group: GroupSpec) -> int:
    n = group.rank
    return {"U": n, "SO_even": 2 * n, "SO_odd": 2 * n + 1, "Sp": 2 * n}[group.family]


def _complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / math.sqrt(2)


def _unitary(rng, count: int, n: int) -> np.ndarray:
    q, r = np.linalg.qr(_complex_gaussian(rng, (count, n, n)))
    d = np.diagonal(r, axis1=1, axis2=2)
    return q * (d / np.abs(d))[:, None, :]


def _special_orthogonal(rng, count: int, n: int) -> np.ndarray:
    q, r = np.linalg.qr(rng.standard_normal((count, n, n)))
    q = q * np.sign(np.diagonal(r, axis1=1, axis2=2))[:, None, :]
    # right multiplication by a fixed reflection maps the other coset onto SO(n)
    neg = np.linalg.det(q) < 0
    q[neg, :, 0] *= -1
    return q


def _quaternionic_j(v: np.ndarray, n: int) -> np.ndarray:
    """``J (a; b) = (-conj(b); conj(a))`` on stacked complex 2n-vectors."""
    return np.concatenate([-np.conj(v[:, n:]), np.conj(v[:, :n])], axis=1)


def _symplectic(rng, count: int, n: int) -> np.ndarray:
    """Gram-Schmidt over the quaternions, in the complex 2n embedding."""
    g = _complex_gaussian(rng, (count, 2 * n, n))
    basis: list[np.ndarray] = []
    first, second = [], []
    for k in range(n):
        v = g[:, :, k]
        for u in basis:
            v = v - u * np.sum(np.conj(u) * v, axis=1, keepdims=True)
        v = v / np.linalg.norm(v, axis=1, keepdims=True)
        jv = _quaternionic_j(v, n)
        basis += [v, jv]
        first.append(v)
        second.append(jv)
    return np.stack(first + second, axis=2)


def haar_sample(group: GroupSpec, rng: np.random.Generator, count: int = 1) -> np.ndarray:
    """``count`` Haar-distributed elements as a ``(count, N, N)`` array.

    SO(n) samples are real; U(n) and Sp(n) samples are complex (Sp(n) in
    its ``2n``-dimensional complex form).
    """
    _check(group)
    n, size = group.rank, _matrix_size(group)
    if group.family == "U":
        return _unitary(rng, count, n)
    if group.family == "Sp":
        return _symplectic(rng, count, n)
    return _special_orthogonal(rng, count, size)


def torus_element(group: GroupSpec, y: Sequence[float]) -> np.ndarray:
    """The Lie algebra element with torus coordinates ``y``."""
    _check(group)
    n = group.rank
    y = [float(v) for v in y]
    if len(y) != n:
        raise ValueError(f"{group.label} needs {n} coordinates")
    if group.family == "U":
        return np.diag(1j * np.array(y))
    if group.family == "Sp":
        return np.diag(1j * np.array(y + [-v for v in y]))
    size = _matrix_size(group)
    out = np.zeros((size, size))
    for i, v in enumerate(y):
        out[2 * i + 1, 2 * i] = v
        out[2 * i, 2 * i + 1] = -v
    return out


def _pairing_scale(group: GroupSpec) -> float:
    return 1.0 if group.family == "U" else 0.5


def adjoint_pairing(group: GroupSpec, g: np.ndarray, Y: np.ndarray, X: np.ndarray) -> np.ndarray:
    """``<g Y g^-1, X>`` for a stack of group elements."""
    gh = np.conj(np.swapaxes(g, 1, 2))
    M = g @ Y @ gh
    return _pairing_scale(group) * np.real(np.sum(np.conj(M) * X, axis=(1, 2)))


def _chunk_sums(group, Y, X, ks, seq, size):
    rng = np.random.default_rng(seq)
    g = haar_sample(group, rng, size)
    v = adjoint_pairing(group, g, Y, X)
    powers = [v**k for k in ks]
    sums = [float(np.sum(p)) for p in powers]
    cross = [[float(np.sum(a * b)) for b in powers] for a in powers]
    return sums, cross


@dataclass(frozen=True)
class McEstimate:
    """Sample means of ``<Ad_g y, x>^k`` for several ``k`` with their covariance."""

    ks: tuple[int, ...]
    means: tuple[float, ...]
    cov: tuple[tuple[float, ...], ...]
    n: int

    def std_error(self, i: int) -> float:
        return math.sqrt(max(self.cov[i][i], 0.0) / self.n)


def mc_moments(group: GroupSpec, y, x, ks: Sequence[int], config: McConfig) -> McEstimate:
    """Joint moment estimates from one sample stream (chunks reduced in index order)."""
    _check(group)
    Y, X = torus_element(group, y), torus_element(group, x)
    ks = tuple(int(k) for k in ks)
    jobs = config.chunks()
    if config.workers > 1:
        with ThreadPoolExecutor(config.workers) as pool:
            parts = list(pool.map(lambda job: _chunk_sums(group, Y, X, ks, *job), jobs))
    else:
        parts = [_chunk_sums(group, Y, X, ks, *job) for job in jobs]
    N = config.sample_count
    K = len(ks)
    S = [0.0] * K
    C = [[0.0] * K for _ in range(K)]
    for sums, cross in parts:
        for i in range(K):
            S[i] += sums[i]
            for j in range(K):
                C[i][j] += cross[i][j]
    means = [s / N for s in S]
    denom = max(N - 1, 1)
    cov = tuple(tuple((C[i][j] - N * means[i] * means[j]) / denom for j in range(K)) for i in range(K))
    return McEstimate(ks, tuple(means), cov, N)


def mc_q(group: GroupSpec, y, x, k: int, config: McConfig) -> tuple[float, float]:
    """Estimate of ``E <Ad_g y, x>^k`` and its standard error."""
    est = mc_moments(group, y, x, [k], config)
    return est.means[0], est.std_error(0)


def symbolic_value(group: GroupSpec, y, x, k: int) -> Fraction:
    """The normalized invariant of degree ``k`` at torus points ``y``, ``x``."""
    form = weinstein_form(group, k)
    return form.value([Fraction(v) for v in y], [Fraction(v) for v in x])


@dataclass(frozen=True)
class RatioReport:
    passed: bool
    symbolic_ratio: Fraction
    mc_ratio: float
    std_error: float
    deviation: float
    note: str = ""

    def __str__(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (
            f"{verdict}: symbolic {self.symbolic_ratio} ({float(self.symbolic_ratio):.6g}), "
            f"Monte Carlo {self.mc_ratio:.6g} +- {self.std_error:.3g} "
            f"({self.deviation:.2f} sigma){' ' + self.note if self.note else ''}"
        )


def ratio_validate(
    group: GroupSpec,
    y,
    x,
    k1: int,
    k2: int,
    config: McConfig,
    sigmas: float = 4.0,
    corrupt: Fraction | None = None,
) -> RatioReport:
    """Compare ``E[v^k1] / E[v^k2]`` with ``q^k1(y,x) / q^k2(y,x)``.

    Parameters
    ----------
    corrupt : rational, optional
        Multiplies the symbolic ratio; a negative control that must fail.

    Raises
    ------
    DegenerateDenominator
        If the symbolic invariant of degree ``k2`` vanishes at ``(y, x)``.
    """
    s1 = symbolic_value(group, y, x, k1)
    s2 = symbolic_value(group, y, x, k2)
    if s2 == 0:
        raise DegenerateDenominator(f"symbolic invariant of degree {k2} vanishes at y={y}, x={x}")
    sym = s1 / s2
    if corrupt is not None:
        sym *= Fraction(corrupt)
    est = mc_moments(group, y, x, [k1, k2], config)
    m1, m2 = est.means
    # roundoff floor for zero-variance cases such as central y
    floor = 1e-9 * max(1.0, abs(float(sym)))
    if sym == 0:
        se = est.std_error(0) / abs(m2)
        ratio = m1 / m2
        dev = 0.0 if abs(ratio) <= floor else (abs(ratio) / se if se > 0 else math.inf)
        return RatioReport(abs(ratio) <= sigmas * se + floor, sym, ratio, se, dev, "zero numerator")
    ratio = m1 / m2
    c = est.cov
    var_z = c[0][0] - 2 * ratio * c[0][1] + ratio * ratio * c[1][1]
    se = math.sqrt(max(var_z, 0.0) / est.n) / abs(m2)
    diff = abs(ratio - float(sym))
    dev = 0.0 if diff <= floor else (diff / se if se > 0 else math.inf)
    return RatioReport(diff <= sigmas * se + floor, sym, ratio, se, dev)

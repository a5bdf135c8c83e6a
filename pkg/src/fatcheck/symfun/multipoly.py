"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

import heapq
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Iterator, Mapping, Sequence

Exponent = tuple[int, ...]

__all__ = ["MultiPoly", "DivisionNotExact", "exact_divide", "grlex_key"]


def _norm(c):
    # keep integers as int (fast path); collapse integral Fractions
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def grlex_key(e: Exponent) -> tuple:
    return (sum(e), e)


class MultiPoly:
    """Polynomial in ``nvars`` variables stored as ``{exponent: coefficient}``.

    Coefficients are Python ints or :class:`fractions.Fraction`; zero
    coefficients are never stored. Instances should be treated as immutable.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, Rational] | None = None):
        self.nvars = nvars
        self.terms: dict[Exponent, Rational] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
                if c:
                    self.terms[tuple(e)] = _norm(c)

    # constructors -------------------------------------------------------
    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "MultiPoly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, c: Rational, nvars: int) -> "MultiPoly":
        return cls._raw(nvars, {(0,) * nvars: _norm(c)} if c else {})

    @classmethod
    def one(cls, nvars: int) -> "MultiPoly":
        return cls.constant(1, nvars)

    @classmethod
    def var(cls, i: int, nvars: int) -> "MultiPoly":
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff: Rational = 1) -> "MultiPoly":
        return cls._raw(len(exponent), {tuple(exponent): _norm(coeff)} if coeff else {})

    @classmethod
    def gens(cls, nvars: int) -> list["MultiPoly"]:
        return [cls.var(i, nvars) for i in range(nvars)]

    # basic protocol ------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Exponent, Rational]]:
        return iter(self.terms.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self.to_str()})"

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            c = Fraction(c)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # arithmetic --------------------------------------------------------
    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch {self.nvars} != {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _norm(v)
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Rational) -> "MultiPoly":
        if not c:
            return MultiPoly.zero(self.nvars)
        return MultiPoly._raw(self.nvars, {e: _norm(v * c) for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other.terms) == 1:
            ((e2, c2),) = other.terms.items()
            return MultiPoly._raw(
                self.nvars,
                {tuple(a + b for a, b in zip(e1, e2)): _norm(c1 * c2) for e1, c1 in self.terms.items()},
            )
        out: dict[Exponent, Rational] = {}
        get = out.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = get(e, 0) + c1 * c2
        return MultiPoly._raw(self.nvars, {e: _norm(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(Fraction(1) / c)
        return NotImplemented

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # queries -----------------------------------------------------------
    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=0)

    def sorted_terms(self) -> list[tuple[Exponent, Rational]]:
        """Terms in decreasing graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[Exponent, Rational]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def coefficient(self, exponent: Sequence[int]) -> Rational:
        return self.terms.get(tuple(exponent), 0)

    def constant_term(self) -> Rational:
        return self.terms.get((0,) * self.nvars, 0)

    # structural maps ---------------------------------------------------
    def evaluate(self, values: Sequence, one=None):
        """Substitute ``values[i]`` for variable ``i``.

        ``values`` may hold numbers or any ring elements supporting ``+``,
        ``*`` and multiplication by a rational. ``one`` is the ring unit
        used for constant terms when the values are not plain numbers.
        """
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        cache: list[dict[int, object]] = [{} for _ in range(self.nvars)]

        def power(i: int, k: int):
            d = cache[i]
            if k not in d:
                d[k] = values[i] if k == 1 else power(i, k - 1) * values[i]
            return d[k]

        total = None
        for e, c in self.terms.items():
            term = None
            for i, k in enumerate(e):
                if k:
                    term = power(i, k) if term is None else term * power(i, k)
            if term is None:
                term = c if one is None else one * c
            else:
                term = term * c
            total = term if total is None else total + term
        if total is None:
            return 0 if one is None else one * 0
        return total

    def substitute(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """Compose with polynomial images of each variable."""
        if not images:
            raise ValueError("need images")
        target = images[0].nvars
        return self.evaluate(list(images), one=MultiPoly.one(target))

    def embed(self, nvars: int, positions: Sequence[int]) -> "MultiPoly":
        """Move variable ``i`` to slot ``positions[i]`` of a ``nvars`` ring."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * nvars
            for i, k in enumerate(e):
                ne[positions[i]] += k
            out[tuple(ne)] = c
        return MultiPoly._raw(nvars, out)

    def permute(self, perm: Sequence[int]) -> "MultiPoly":
        """Polynomial ``p(x_perm[0], ..., x_perm[n-1])``."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.nvars
            for i, k in enumerate(e):
                ne[perm[i]] += k
            out[tuple(ne)] = c
        return MultiPoly._raw(self.nvars, out)

    def map_coefficients(self, f: Callable) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: f(c) for e, c in self.terms.items()})

    def restrict(self, fixed: Mapping[int, Rational]) -> "MultiPoly":
        """Set some variables to constants and drop them from the ring."""
        keep = [i for i in range(self.nvars) if i not in fixed]
        out: dict[Exponent, Rational] = {}
        for e, c in self.terms.items():
            v = c
            for i, val in fixed.items():
                if e[i]:
                    v = v * Fraction(val) ** e[i]
            if not v:
                continue
            ne = tuple(e[i] for i in keep)
            out[ne] = out.get(ne, 0) + v
        return MultiPoly(len(keep), out)

    def homogeneous_part(self, d: int) -> "MultiPoly":
        return MultiPoly._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})


class DivisionNotExact(ArithmeticError):
    """Polynomial division left a nonzero remainder."""

    def __init__(self, remainder: MultiPoly, quotient: MultiPoly | None = None):
        self.remainder = remainder
        self.quotient = quotient
        super().__init__(f"division not exact; remainder has {len(remainder)} terms")


def exact_divide(p: MultiPoly, d: MultiPoly) -> MultiPoly:
    """Quotient ``q`` with ``p == q * d``.

    Division by leading terms in graded-lex order. Raises
    :class:`DivisionNotExact` carrying the full remainder otherwise.
    """
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    if p.nvars != d.nvars:
        raise ValueError("variable count mismatch")
    lead_e, lead_c = d.leading_term()
    lead_c = Fraction(lead_c)
    rest = [(e, c) for e, c in d.terms.items() if e != lead_e]
    work = dict(p.terms)
    heap = [(-sum(e), tuple(-k for k in e)) for e in work]
    heapq.heapify(heap)
    quotient: dict[Exponent, Rational] = {}
    remainder: dict[Exponent, Rational] = {}
    while heap:
        _, neg = heapq.heappop(heap)
        e = tuple(-k for k in neg)
        c = work.pop(e, 0)
        if not c:
            continue
        if all(a >= b for a, b in zip(e, lead_e)):
            qe = tuple(a - b for a, b in zip(e, lead_e))
            qc = _norm(c / lead_c)
            quotient[qe] = qc
            for de, dc in rest:
                ne = tuple(a + b for a, b in zip(qe, de))
                old = work.get(ne)
                v = (old or 0) - qc * dc
                if v:
                    if old is None:
                        heapq.heappush(heap, (-sum(ne), tuple(-k for k in ne)))
                    work[ne] = _norm(v)
                else:
                    work.pop(ne, None)
        else:
            remainder[e] = c
    q = MultiPoly._raw(p.nvars, quotient)
    if remainder:
        raise DivisionNotExact(MultiPoly._raw(p.nvars, remainder), q)
    return q


def product(polys: Iterable[MultiPoly], nvars: int) -> MultiPoly:
    out = MultiPoly.one(nvars)
    for p in polys:
        out = out * p
    return out

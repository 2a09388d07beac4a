"""Scalar backends for the reflection representation.

Two backends share one small interface.  ``ExactArithmetic`` works in the
multiquadratic field Q(sqrt2, sqrt3, sqrt5), which contains cos(pi/m) for every
m in {2, 3, 4, 5, 6}.  Rational values are kept as ``int`` or ``Fraction`` and
only genuinely irrational values become :class:`Surd` objects, so equal numbers
always have equal hashes.  ``IntervalArithmetic`` uses binary floats with a
symmetric tolerance.
"""

from __future__ import annotations

import math
import os
from decimal import Decimal, localcontext
from fractions import Fraction
from itertools import combinations
from typing import Any, Iterable, Union

from .errors import ArithmeticModeUnavailable

INF = math.inf
EXACT_LABELS = frozenset({2, 3, 4, 5, 6})
EPSILON = 1e-9

_PRIMES = (2, 3, 5)


def _radicand_primes(r: int) -> tuple[int, ...]:
    return tuple(p for p in _PRIMES if r % p == 0)


def _mul_radicands(a: int, b: int) -> tuple[int, int]:
    """Return (c, r) with sqrt(a) * sqrt(b) = c * sqrt(r), r squarefree."""
    g = math.gcd(a, b)
    return g, (a // g) * (b // g)


Rational = Union[int, Fraction]


def _norm_rational(q: Fraction) -> Rational:
    return q.numerator if q.denominator == 1 else q


class Surd:
    """An irrational element of Q(sqrt2, sqrt3, sqrt5).

    Stored as a sorted tuple of (squarefree radicand, nonzero Fraction) pairs.
    Construct through :func:`surd`, which collapses rational results.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: tuple[tuple[int, Fraction], ...]) -> None:
        self.terms = terms
        self._hash = hash(terms)

    # -- construction helpers -------------------------------------------------
    @staticmethod
    def _terms_of(x: Any) -> dict[int, Fraction]:
        if isinstance(x, Surd):
            return dict(x.terms)
        if isinstance(x, (int, Fraction)):
            return {1: Fraction(x)} if x != 0 else {}
        return NotImplemented  # type: ignore[return-value]

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other: Any) -> Any:
        t = self._terms_of(other)
        if t is NotImplemented:
            return NotImplemented
        acc = dict(self.terms)
        for r, c in t.items():
            acc[r] = acc.get(r, Fraction(0)) + c
        return surd(acc)

    __radd__ = __add__

    def __neg__(self) -> "Surd":
        return Surd(tuple((r, -c) for r, c in self.terms))

    def __sub__(self, other: Any) -> Any:
        t = self._terms_of(other)
        if t is NotImplemented:
            return NotImplemented
        acc = dict(self.terms)
        for r, c in t.items():
            acc[r] = acc.get(r, Fraction(0)) - c
        return surd(acc)

    def __rsub__(self, other: Any) -> Any:
        return (-self) + other

    def __mul__(self, other: Any) -> Any:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return 0
            return Surd(tuple((r, c * other) for r, c in self.terms))
        if not isinstance(other, Surd):
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for ra, ca in self.terms:
            for rb, cb in other.terms:
                k, r = _mul_radicands(ra, rb)
                acc[r] = acc.get(r, Fraction(0)) + ca * cb * k
        return surd(acc)

    __rmul__ = __mul__

    def conjugate(self, flip: Iterable[int]) -> "Surd":
        """Apply the field automorphism negating sqrt(p) for p in ``flip``."""
        flip = tuple(flip)
        out = []
        for r, c in self.terms:
            odd = sum(1 for p in flip if r % p == 0) % 2
            out.append((r, -c if odd else c))
        return Surd(tuple(out))

    def inverse(self) -> Any:
        primes = sorted({p for r, _ in self.terms for p in _radicand_primes(r)})
        prod: Any = 1
        for k in range(1, len(primes) + 1):
            for flip in combinations(primes, k):
                prod = prod * self.conjugate(flip)
        norm = self * prod
        if isinstance(norm, Surd):  # pragma: no cover - impossible by Galois theory
            raise ArithmeticError("norm of a surd is not rational")
        return prod * (Fraction(1) / Fraction(norm))

    def __truediv__(self, other: Any) -> Any:
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, Surd):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other: Any) -> Any:
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    # -- comparisons ----------------------------------------------------------
    def __eq__(self, other: Any) -> bool:
        if isinstance(other, Surd):
            return self.terms == other.terms
        return False  # a Surd is never rational

    def __hash__(self) -> int:
        return self._hash

    def sign(self) -> int:
        prec = 40
        while True:
            with localcontext() as ctx:
                ctx.prec = prec
                total = Decimal(0)
                for r, c in self.terms:
                    total += (Decimal(c.numerator) / Decimal(c.denominator)) * Decimal(r).sqrt()
                bound = Decimal(10) ** (-(prec - 10))
                if abs(total) > bound:
                    return 1 if total > 0 else -1
            prec *= 2
            if prec > 2000:  # pragma: no cover - nonzero algebraic numbers are not this small
                raise ArithmeticError("could not decide the sign of a surd")

    def __float__(self) -> float:
        return float(sum(float(c) * math.sqrt(r) for r, c in self.terms))

    def __repr__(self) -> str:
        parts = []
        for r, c in self.terms:
            parts.append(f"{c}" if r == 1 else f"{c}*sqrt({r})")
        return "(" + " + ".join(parts) + ")"


def surd(terms: dict[int, Fraction]) -> Any:
    """Canonical constructor: drops zeros and collapses rationals."""
    items = tuple(sorted((r, c) for r, c in terms.items() if c != 0))
    if not items:
        return 0
    if len(items) == 1 and items[0][0] == 1:
        return _norm_rational(items[0][1])
    return Surd(items)


def _minus_cos_pi_over(m: int) -> Any:
    """-cos(pi/m) for m in {1..6}, exactly."""
    half = Fraction(1, 2)
    if m == 1:
        return -1
    if m == 2:
        return 0
    if m == 3:
        return -half
    if m == 4:
        return surd({2: -half})
    if m == 5:
        return surd({1: Fraction(-1, 4), 5: Fraction(-1, 4)})
    if m == 6:
        return surd({3: -half})
    raise ArithmeticModeUnavailable(f"label {m} is outside the exact field")


class ExactArithmetic:
    """Exact arithmetic over Q(sqrt2, sqrt3, sqrt5)."""

    name = "exact"
    exact = True

    def form_entry(self, m: float) -> Any:
        if m == INF:
            return -1
        return _minus_cos_pi_over(int(m))

    @staticmethod
    def norm(x: Any) -> Any:
        if isinstance(x, Fraction):
            return _norm_rational(x)
        return x

    @staticmethod
    def sign(x: Any) -> int:
        if isinstance(x, Surd):
            return x.sign()
        return (x > 0) - (x < 0)

    @staticmethod
    def is_zero(x: Any) -> bool:
        return not isinstance(x, Surd) and x == 0

    @staticmethod
    def eq(x: Any, y: Any) -> bool:
        return ExactArithmetic.is_zero(x - y)

    @staticmethod
    def key(x: Any) -> Any:
        return x

    @staticmethod
    def div(x: Any, y: Any) -> Any:
        if isinstance(x, (int, Fraction)) and isinstance(y, (int, Fraction)):
            return _norm_rational(Fraction(x) / Fraction(y))
        return x / y

    @staticmethod
    def to_float(x: Any) -> float:
        return float(x)

    def __repr__(self) -> str:
        return "ExactArithmetic()"


class IntervalArithmetic:
    """Binary floating point with a symmetric equality tolerance."""

    name = "interval"
    exact = False

    def __init__(self, eps: float = EPSILON) -> None:
        self.eps = eps

    def form_entry(self, m: float) -> float:
        if m == INF:
            return -1.0
        return -math.cos(math.pi / m)

    @staticmethod
    def norm(x: Any) -> float:
        return float(x)

    def sign(self, x: float) -> int:
        if abs(x) <= self.eps:
            return 0
        return 1 if x > 0 else -1

    def is_zero(self, x: float) -> bool:
        return abs(x) <= self.eps

    def eq(self, x: float, y: float) -> bool:
        return abs(x - y) <= self.eps

    @staticmethod
    def key(x: float) -> float:
        r = round(x, 12)
        return 0.0 if r == 0 else r

    @staticmethod
    def div(x: float, y: float) -> float:
        return x / y

    @staticmethod
    def to_float(x: float) -> float:
        return float(x)

    def __repr__(self) -> str:
        return f"IntervalArithmetic(eps={self.eps})"


Arithmetic = Union[ExactArithmetic, IntervalArithmetic]


def exact_supported(labels: Iterable[float]) -> bool:
    return all(m == INF or m == 1 or m in EXACT_LABELS for m in labels)


def select_arithmetic(labels: Iterable[float], mode: str | None = None) -> Arithmetic:
    """Pick a backend from an explicit mode, the COXCELL_ARITH variable, or the labels."""
    labels = list(labels)
    if mode is None:
        mode = os.environ.get("COXCELL_ARITH") or None
    if mode is not None:
        mode = mode.strip().lower()
        if mode not in ("exact", "interval"):
            raise ArithmeticModeUnavailable(f"unknown arithmetic mode {mode!r}")
    if mode == "interval":
        return IntervalArithmetic()
    supported = exact_supported(labels)
    if mode == "exact" and not supported:
        bad = sorted({int(m) for m in labels if m != INF and m != 1 and m not in EXACT_LABELS})
        raise ArithmeticModeUnavailable(f"labels {bad} need interval arithmetic")
    return ExactArithmetic() if supported else IntervalArithmetic()

"""Exact rationals, elementary number theory and the two sawtooth functions.

Rationals are :class:`fractions.Fraction` throughout; this module only adds
the canonical string form and the integer helpers the rest of the package
needs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[int, Fraction]


def to_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"expected int or Fraction, got {type(x).__name__}")
    return Fraction(x)


def format_rational(x: RationalLike) -> str:
    """Canonical ``p/q`` string, with ``/q`` omitted when q == 1."""
    x = to_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


def gcd_ext(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)`` and g >= 1."""
    if a == 0 and b == 0:
        raise ValueError("gcd undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def mod_inverse(a: int, c: int) -> int:
    if c < 2:
        raise ValueError("modulus must be at least 2")
    g, x, _ = gcd_ext(a % c, c)
    if g != 1:
        raise ValueError(f"not invertible: gcd({a}, {c}) = {g}")
    return x % c


def sawtooth(x: RationalLike) -> Fraction:
    """x - floor(x) - 1/2; note the value -1/2 at integers."""
    x = to_rational(x)
    return x - math.floor(x) - Fraction(1, 2)


def sawtooth_classical(x: RationalLike) -> Fraction:
    """The sawtooth of the classical Dedekind sum: 0 at integers."""
    x = to_rational(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


def _check_positive(c: int) -> None:
    if c <= 0:
        raise ValueError(f"expected a positive integer, got {c}")


@lru_cache(maxsize=None)
def factorize(c: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization as ``((p, e), ...)`` by trial division."""
    _check_positive(c)
    out = []
    p = 2
    while p * p <= c:
        if c % p == 0:
            e = 0
            while c % p == 0:
                c //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if c > 1:
        out.append((c, 1))
    return tuple(out)


@lru_cache(maxsize=None)
def divisors(c: int) -> tuple[int, ...]:
    _check_positive(c)
    divs = [1]
    for p, e in factorize(c):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def euler_phi(c: int) -> int:
    result = c
    for p, _ in factorize(c):
        result = result // p * (p - 1)
    return result


def moebius(c: int) -> int:
    fac = factorize(c)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def trace_root_of_unity(k: int, d: int) -> int:
    """Sum of zeta**k over the primitive d-th roots of unity zeta (a Ramanujan sum)."""
    _check_positive(d)
    g = math.gcd(k % d, d)
    m = d // g
    return moebius(m) * euler_phi(d) // euler_phi(m)


def gcd_all(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = math.gcd(g, v)
    return g


@dataclass(frozen=True)
class Instance:
    """An ordered tuple of positive integer parts (a_1, ..., a_n)."""

    parts: tuple[int, ...]
    pairwise_coprime: bool = field(init=False)

    def __init__(self, parts: Sequence[int]):
        parts = tuple(int(a) for a in parts)
        if not parts:
            raise ValueError("an instance needs at least one part")
        if any(a < 1 for a in parts):
            raise ValueError(f"parts must be positive integers, got {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(
            self,
            "pairwise_coprime",
            all(math.gcd(a, b) == 1 for a, b in combinations(parts, 2)),
        )

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def gcd(self) -> int:
        return gcd_all(self.parts)

    def sorted(self) -> "Instance":
        return Instance(sorted(self.parts))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


def as_instance(parts: Union[Instance, Sequence[int]]) -> Instance:
    return parts if isinstance(parts, Instance) else Instance(parts)

"""Dense univariate polynomials with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class PolyQ:
    """Immutable dense polynomial; ``coeffs[i]`` multiplies ``x**i``.

    Trailing zeros are trimmed, so the zero polynomial has no coefficients
    and degree ``-1`` (used as the minus-infinity sentinel).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        c = [Fraction(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def monomial(cls, k: int, coeff: Scalar = 1) -> "PolyQ":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [coeff])

    @classmethod
    def constant(cls, c: Scalar) -> "PolyQ":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def _coerce(self, other) -> "PolyQ":
        if isinstance(other, PolyQ):
            return other
        if isinstance(other, (int, Fraction)):
            return PolyQ([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return PolyQ(out)

    __radd__ = __add__

    def __neg__(self):
        return PolyQ([-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PolyQ([a * other for a in self.coeffs])
        if not isinstance(other, PolyQ):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return PolyQ()
        # convolve integer numerators over a common denominator; Fraction
        # arithmetic inside the double loop is far slower
        na, da = _integer_form(self.coeffs)
        nb, db = _integer_form(other.coeffs)
        out = [0] * (len(na) + len(nb) - 1)
        for i, a in enumerate(na):
            if a == 0:
                continue
            for j, b in enumerate(nb):
                out[i + j] += a * b
        den = da * db
        return PolyQ([Fraction(v, den) for v in out])

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "PolyQ":
        other = Fraction(other)
        return PolyQ([a / other for a in self.coeffs])

    def __pow__(self, k: int) -> "PolyQ":
        if k < 0:
            raise ValueError("negative power")
        result, base = PolyQ([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "PolyQ") -> tuple["PolyQ", "PolyQ"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if other.leading() == 1 and all(c.denominator == 1 for c in other.coeffs):
            return self._divmod_monic_integer(other)
        rem = list(self.coeffs)
        dd = other.degree
        lead = other.leading()
        if len(rem) - 1 < dd:
            return PolyQ(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            q = rem[i] / lead
            if q == 0:
                continue
            quot[i - dd] = q
            for j, b in enumerate(other.coeffs):
                rem[i - dd + j] -= q * b
        return PolyQ(quot), PolyQ(rem[:dd])

    def _divmod_monic_integer(self, other: "PolyQ") -> tuple["PolyQ", "PolyQ"]:
        dd = other.degree
        if self.degree < dd:
            return PolyQ(), self
        rem, den = _integer_form(self.coeffs)
        div = [c.numerator for c in other.coeffs]
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            q = rem[i]
            if q == 0:
                continue
            quot[i - dd] = q
            base = i - dd
            for j in range(dd + 1):
                if div[j]:
                    rem[base + j] -= q * div[j]
        return (
            PolyQ([Fraction(v, den) for v in quot]),
            PolyQ([Fraction(v, den) for v in rem[:dd]]),
        )

    def __floordiv__(self, other: "PolyQ") -> "PolyQ":
        return divmod(self, other)[0]

    def __mod__(self, other: "PolyQ") -> "PolyQ":
        return divmod(self, other)[1]

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def monic(self) -> "PolyQ":
        return self / self.leading() if self.coeffs else self

    def __repr__(self) -> str:
        if not self.coeffs:
            return "PolyQ(0)"
        terms = []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            terms.append(f"{a}" if i == 0 else f"{a}*x^{i}")
        return "PolyQ(" + " + ".join(terms) + ")"


def _integer_form(coeffs: tuple[Fraction, ...]) -> tuple[list[int], int]:
    """Integer numerators over the lcm of the denominators."""
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def poly_gcdex(a: PolyQ, b: PolyQ) -> tuple[PolyQ, PolyQ, PolyQ]:
    """Extended Euclid over Q[x]: ``(g, s, t)`` with ``s*a + t*b == g``, g monic."""
    old_r, r = a, b
    old_s, s = PolyQ([1]), PolyQ()
    old_t, t = PolyQ(), PolyQ([1])
    while not r.is_zero():
        q, rem = divmod(old_r, r)
        old_r, r = r, rem
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r.is_zero():
        return old_r, old_s, old_t
    lead = old_r.leading()
    return old_r / lead, old_s / lead, old_t / lead

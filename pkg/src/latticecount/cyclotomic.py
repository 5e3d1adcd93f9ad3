"""Arithmetic in the cyclotomic fields Q(zeta_d) = Q[x] / Phi_d(x)."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

from .exact_arith import divisors, trace_root_of_unity
from .polynomial import PolyQ, poly_gcdex


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> PolyQ:
    """Phi_d, obtained by dividing x^d - 1 by Phi_e for every proper divisor e of d."""
    if d < 1:
        raise ValueError("order must be positive")
    num = PolyQ.monomial(d) - 1
    for e in divisors(d)[:-1]:
        num, rem = divmod(num, cyclotomic_poly(e))
        assert rem.is_zero()
    return num


class CycloElem:
    """An element of Q[x]/Phi_d, kept reduced (deg rep < phi(d))."""

    __slots__ = ("order", "rep")

    def __init__(self, rep: PolyQ, order: int):
        if order < 1:
            raise ValueError("order must be positive")
        phi = cyclotomic_poly(order)
        if rep.degree >= phi.degree:
            rep = rep % phi
        self.order = order
        self.rep = rep

    @classmethod
    def power(cls, k: int, order: int) -> "CycloElem":
        """zeta**k, with any integer k."""
        return cls(PolyQ.monomial(k % order), order)

    @classmethod
    def scalar(cls, c, order: int) -> "CycloElem":
        return cls(PolyQ([c]), order)

    def _same_field(self, other: "CycloElem") -> None:
        if other.order != self.order:
            raise ValueError(f"mixing Q(zeta_{self.order}) and Q(zeta_{other.order})")

    def __add__(self, other: "CycloElem") -> "CycloElem":
        self._same_field(other)
        return CycloElem(self.rep + other.rep, self.order)

    def __sub__(self, other: "CycloElem") -> "CycloElem":
        self._same_field(other)
        return CycloElem(self.rep - other.rep, self.order)

    def __neg__(self) -> "CycloElem":
        return CycloElem(-self.rep, self.order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloElem(self.rep * other, self.order)
        self._same_field(other)
        return CycloElem(self.rep * other.rep, self.order)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def inverse(self) -> "CycloElem":
        return inverse(self)

    def trace(self) -> Fraction:
        return trace(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycloElem):
            return NotImplemented
        return self.order == other.order and self.rep == other.rep

    def __hash__(self) -> int:
        return hash((self.order, self.rep))

    def __repr__(self) -> str:
        return f"CycloElem({self.rep!r} mod Phi_{self.order})"


def reduce(p: PolyQ, d: int) -> CycloElem:
    return CycloElem(p, d)


def inverse(e: CycloElem) -> CycloElem:
    g, s, _ = poly_gcdex(e.rep, cyclotomic_poly(e.order))
    if e.is_zero() or g.degree != 0:
        raise ZeroDivisionError("not invertible in cyclotomic ring")
    return CycloElem(s, e.order)


def trace(e: CycloElem, shift: int = 0) -> Fraction:
    """Galois trace of ``zeta**shift * e`` down to Q.

    Summing ``rep_k * T(k + shift)`` with T the Ramanujan sum avoids reducing
    the shifted product modulo Phi_d.
    """
    d = e.order
    total = Fraction(0)
    for k, c in enumerate(e.rep.coeffs):
        if c:
            total += c * trace_root_of_unity(k + shift, d)
    return total

"""Truncated Laurent series in w whose coefficients are polynomials in t."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .polynomial import PolyQ


@lru_cache(maxsize=None)
def bernoulli(m: int) -> Fraction:
    """B_m with B_1 = -1/2, i.e. the coefficients of w/(e^w - 1)."""
    if m < 0:
        raise ValueError("negative index")
    if m == 0:
        return Fraction(1)
    return -sum((comb(m + 1, k) * bernoulli(k) for k in range(m)), Fraction(0)) / (m + 1)


class LaurentBlock:
    """sum_i coeffs[i] * w**(lead + i), known exactly for exponents <= order."""

    __slots__ = ("lead", "coeffs", "order")

    def __init__(self, lead: int, coeffs, order: int):
        self.lead = lead
        self.order = order
        keep = max(order - lead + 1, 0)
        coeffs = [c if isinstance(c, PolyQ) else PolyQ([c]) for c in coeffs][:keep]
        coeffs += [PolyQ()] * (keep - len(coeffs))
        self.coeffs = coeffs

    def coefficient(self, k: int) -> PolyQ:
        if k > self.order:
            raise ValueError(f"coefficient of w^{k} is beyond truncation order {self.order}")
        i = k - self.lead
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else PolyQ()

    def __mul__(self, other: "LaurentBlock") -> "LaurentBlock":
        lead = self.lead + other.lead
        order = min(self.order + other.lead, other.order + self.lead)
        out = [PolyQ()] * max(order - lead + 1, 0)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= len(out):
                    break
                out[i + j] = out[i + j] + a * b
        return LaurentBlock(lead, out, order)

    def __neg__(self) -> "LaurentBlock":
        return LaurentBlock(self.lead, [-c for c in self.coeffs], self.order)

    def residue(self) -> PolyQ:
        """Coefficient of w^-1."""
        return self.coefficient(-1)

    def __repr__(self) -> str:
        return f"LaurentBlock(lead={self.lead}, order={self.order}, coeffs={self.coeffs!r})"


def exp_linear_in_t(sign: int, order: int) -> LaurentBlock:
    """e^{sign * t * w} = sum_k (sign t)^k / k! w^k."""
    return LaurentBlock(
        0,
        [PolyQ.monomial(k, Fraction(sign**k, factorial(k))) for k in range(order + 1)],
        order,
    )


def reciprocal_expm1(a: int, order: int) -> LaurentBlock:
    """1/(e^{a w} - 1) = (1/(a w)) * sum_k B_k (a w)^k / k!."""
    return LaurentBlock(
        -1,
        [bernoulli(k) * Fraction(a) ** (k - 1) / factorial(k) for k in range(order + 2)],
        order,
    )

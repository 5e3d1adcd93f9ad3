"""Fourier-Dedekind sums

    sigma_t(c_1, ..., c_n; c) = 1/c * sum over lambda^c = 1 != lambda of
                                lambda^t / prod_j (lambda^{c_j} - 1)

computed exactly (Galois traces in Q(zeta_d) for each d | c), numerically,
and through the sawtooth closed forms available for n = 1 and n = 2.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import cyclotomic
from .cyclotomic import CycloElem
from .exact_arith import divisors, mod_inverse, sawtooth
from .polynomial import PolyQ


@dataclass(frozen=True)
class FDSumSpec:
    t: int
    args: tuple[int, ...]
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(int(a) for a in self.args))
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        for a in self.args:
            if math.gcd(a, self.modulus) != 1:
                raise ValueError(
                    f"argument {a} is not relatively prime to modulus {self.modulus}"
                )

    def exact(self) -> Fraction:
        return _sigma_exact(self.t % self.modulus, _canonical_args(self.args, self.modulus), self.modulus)

    def numeric(self) -> float:
        return sigma_numeric(self.t, self.args, self.modulus)


def _canonical_args(args: Sequence[int], c: int) -> tuple[int, ...]:
    # sigma is symmetric in its arguments and periodic mod c in each of them
    return tuple(sorted(a % c for a in args))


@lru_cache(maxsize=4096)
def _inverse_xk_minus_1(k: int, d: int) -> CycloElem:
    """1/(zeta^k - 1) = (1/d) sum_{j<d} j zeta^{kj} for zeta^k a nontrivial d-th root of unity.

    Agrees with ``cyclotomic.inverse`` (extended Euclid) but skips the
    rational gcd computation, which dominates for large prime d.
    """
    if math.gcd(k, d) != 1 or d < 2:
        raise ZeroDivisionError("not invertible in cyclotomic ring")
    coeffs = [Fraction(0)] * d
    for j in range(1, d):
        coeffs[(k * j) % d] = Fraction(j, d)
    return CycloElem(PolyQ(coeffs), d)


@lru_cache(maxsize=4096)
def _inverse_product(args: tuple[int, ...], d: int) -> CycloElem:
    """prod_j 1/(zeta_d^{c_j} - 1) in Q(zeta_d); needs d > 1 and gcd(c_j, d) = 1."""
    acc = CycloElem.scalar(1, d)
    for a in args:
        acc = acc * _inverse_xk_minus_1(a % d, d)
    return acc


@lru_cache(maxsize=65536)
def _sigma_exact(t: int, args: tuple[int, ...], c: int) -> Fraction:
    total = Fraction(0)
    for d in divisors(c)[1:]:
        total += cyclotomic.trace(_inverse_product(args, d), shift=t % d)
    return total / c


def sigma_exact(t: int, args: Sequence[int], c: int) -> Fraction:
    """Exact value of sigma_t(args; c) as a Fraction."""
    return FDSumSpec(t, tuple(args), c).exact()


def sigma_numeric(t: int, args: Sequence[int], c: int) -> float:
    """Direct floating-point summation over the nontrivial c-th roots of unity."""
    FDSumSpec(t, tuple(args), c)
    total = 0j
    for k in range(1, c):
        term = cmath.exp(2j * math.pi * ((k * t) % c) / c)
        for a in args:
            term /= cmath.exp(2j * math.pi * ((k * a) % c) / c) - 1
        total += term
    return (total / c).real


def sigma_closed_n1(t: int, a: int, c: int) -> Fraction:
    """sigma_t(a; c) = ((-a^{-1} t / c)) + 1/(2c)."""
    FDSumSpec(t, (a,), c)
    if c == 1:
        return Fraction(0)
    return sawtooth(Fraction(-mod_inverse(a, c) * t, c)) + Fraction(1, 2 * c)


def sigma_closed_n2(t: int, a: int, b: int, c: int) -> Fraction:
    """sigma_t(a, b; c) as a Dedekind-Rademacher type sawtooth sum (no roots of unity)."""
    FDSumSpec(t, (a, b), c)
    if c == 1:
        return Fraction(0)
    a_inv = mod_inverse(a, c)
    # ((k/c)) = (2 (k mod c) - c) / (2c); accumulate the numerators as integers
    total = 0
    for m in range(c):
        total += (2 * ((-a_inv * (b * m + t)) % c) - c) * (2 * m - c)
    return Fraction(total, 4 * c * c) - Fraction(1, 4 * c)


def dedekind_sum(h: int, k: int) -> Fraction:
    """Classical Dedekind sum s(h, k), using the sawtooth that vanishes at integers."""
    if k < 1:
        raise ValueError("k must be positive")
    if math.gcd(h, k) != 1:
        raise ValueError(f"gcd({h}, {k}) != 1")
    # for 0 < m < k both m/k and hm/k are non-integers, so the classical
    # sawtooth is (2 (x mod k) - k) / (2k) at every term
    total = 0
    for m in range(1, k):
        total += (2 * m - k) * (2 * ((h * m) % k) - k)
    return Fraction(total, 4 * k * k)


def rademacher_lower_bound(c: int) -> Fraction:
    """-c/12 - 1/(12c), a lower bound for every sigma_t(a, b; c)."""
    if c < 1:
        raise ValueError("c must be positive")
    return Fraction(-c, 12) - Fraction(1, 12 * c)

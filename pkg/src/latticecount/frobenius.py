"""Frobenius numbers of numerical semigroups and upper bounds for them.

Two conventions: ``g`` is the largest t with no representation in
nonnegative integers, ``f`` the largest with no representation in positive
integers; f = g + sum(parts).
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .exact_arith import Instance, as_instance, gcd_all

InstanceLike = Union[Instance, Sequence[int]]

SQRT_DENOMINATOR = 10**6


class NotCoprime(ValueError):
    pass


def _validate(inst: Instance) -> None:
    if inst.n < 2:
        raise ValueError("the Frobenius problem needs at least two parts")
    if inst.gcd != 1:
        raise NotCoprime(
            f"infinitely many non-representable values: gcd{inst.parts} = {inst.gcd}"
        )


def representable_sieve(parts: Sequence[int], limit: int) -> list[bool]:
    """rep[s] is True iff s = sum m_k a_k with m_k >= 0, for 0 <= s <= limit."""
    rep = [False] * (limit + 1)
    rep[0] = True
    for a in sorted(set(parts)):
        for s in range(a, limit + 1):
            if rep[s - a]:
                rep[s] = True
    return rep


def _initial_limit(parts: Sequence[int]) -> int:
    # Schur: g <= (a_min - 1)(a_max - 1) - 1; tighter when some pair is coprime
    ps = sorted(parts)
    limit = (ps[0] - 1) * (ps[-1] - 1)
    for i, a in enumerate(ps):
        for b in ps[i + 1:]:
            if math.gcd(a, b) == 1:
                limit = min(limit, (a - 1) * (b - 1))
    return max(limit, 0) + ps[0]


def _largest_gap(parts: Sequence[int]) -> int:
    # once a_min consecutive values are representable, every larger one is too;
    # the sieve is extended until such a run follows the last gap
    a_min = min(parts)
    limit = _initial_limit(parts)
    while True:
        rep = representable_sieve(parts, limit)
        gaps = [s for s, ok in enumerate(rep) if not ok]
        last = gaps[-1] if gaps else -1
        if limit - last >= a_min:
            return last
        limit *= 2


def frobenius_g(instance: InstanceLike) -> int:
    """Largest t with no nonnegative representation; -1 if there is none."""
    inst = as_instance(instance)
    _validate(inst)
    return _largest_gap(inst.parts)


def frobenius_f(instance: InstanceLike) -> int:
    """Largest t with no representation using every part at least once."""
    inst = as_instance(instance)
    return frobenius_g(inst) + sum(inst.parts)


def non_representable(instance: InstanceLike) -> list[int]:
    """All t >= 0 without a nonnegative representation (the semigroup gaps)."""
    inst = as_instance(instance)
    g = frobenius_g(inst)
    if g < 0:
        return []
    rep = representable_sieve(inst.parts, g)
    return [s for s, ok in enumerate(rep) if not ok]


def johnson_reduce(a1: int, a2: int, a3: int) -> tuple[tuple[int, int, int], int]:
    """Divide out common factors of pairs: f(a1, a2, a3) = multiplier * f(reduced).

    Each step takes a pair with d = gcd > 1, divides both by d and multiplies
    the running multiplier by d, until the triple is pairwise coprime.
    """
    triple = [a1, a2, a3]
    if gcd_all(triple) != 1:
        raise NotCoprime(f"gcd({a1}, {a2}, {a3}) > 1")
    multiplier = 1
    while True:
        for i, j in ((0, 1), (0, 2), (1, 2)):
            d = math.gcd(triple[i], triple[j])
            if d > 1:
                triple[i] //= d
                triple[j] //= d
                multiplier *= d
                break
        else:
            return (triple[0], triple[1], triple[2]), multiplier


def reduce_to_three(instance: InstanceLike) -> Fraction:
    """f(a1, a2, a3) + a4 + ... + an for sorted parts, an upper bound on f.

    If the three smallest parts share a factor, f(a1, a2, a3) is infinite;
    the exact f of the whole instance is returned instead, with a warning.
    """
    inst = as_instance(instance)
    _validate(inst)
    if inst.n < 3:
        raise ValueError("reduce_to_three needs at least three parts")
    ps = sorted(inst.parts)
    head, tail = ps[:3], ps[3:]
    if gcd_all(head) != 1:
        warnings.warn(
            f"gcd{tuple(head)} > 1: falling back to the exact sieve on the whole instance",
            RuntimeWarning,
            stacklevel=2,
        )
        return Fraction(frobenius_f(ps))
    reduced, multiplier = johnson_reduce(*head)
    return Fraction(multiplier * frobenius_f(reduced) + sum(tail))


def sqrt_upper(x: Fraction, denominator: int = SQRT_DENOMINATOR) -> Fraction:
    """Smallest k/denominator strictly greater than sqrt(x), for x >= 0."""
    if x < 0:
        raise ValueError("negative radicand")
    scaled = x * denominator * denominator
    k = math.isqrt(scaled.numerator // scaled.denominator)
    while Fraction(k * k) <= scaled:
        k += 1
    return Fraction(k, denominator)


def bound_estimate(instance: InstanceLike) -> Fraction:
    """(sqrt(a1 a2 a3 (a1 + a2 + a3)) + a1 + a2 + a3) / 2 + a4 + ... + an.

    Parts are sorted internally.  The square root is replaced by a rational
    upper enclosure with denominator 10**6.  For two parts a1*a2 is exact.
    """
    inst = as_instance(instance)
    _validate(inst)
    ps = sorted(inst.parts)
    if inst.n == 2:
        return Fraction(ps[0] * ps[1])
    a, b, c = ps[:3]
    s = a + b + c
    return (sqrt_upper(Fraction(a * b * c * s)) + s) / 2 + sum(ps[3:])


def bound_erdos_graham(instance: InstanceLike) -> Fraction:
    """2 a_n floor(a_1/n) - a_1, as a bound on g."""
    inst = as_instance(instance)
    _validate(inst)
    ps, n = sorted(inst.parts), inst.n
    return Fraction(2 * ps[-1] * (ps[0] // n) - ps[0])


def bound_selmer(instance: InstanceLike) -> Fraction:
    """2 a_{n-1} floor(a_n/n) - a_n, as a bound on g."""
    inst = as_instance(instance)
    _validate(inst)
    ps, n = sorted(inst.parts), inst.n
    return Fraction(2 * ps[-2] * (ps[-1] // n) - ps[-1])


def bound_vitek(instance: InstanceLike) -> Fraction:
    """floor((a_2 - 1)(a_n - 2)/2) - 1, as a bound on g."""
    inst = as_instance(instance)
    _validate(inst)
    ps = sorted(inst.parts)
    return Fraction((ps[1] - 1) * (ps[-1] - 2) // 2 - 1)


G_BOUNDS = {
    "erdos_graham": bound_erdos_graham,
    "selmer": bound_selmer,
    "vitek": bound_vitek,
}


@dataclass
class FrobeniusReport:
    instance: Instance
    f: int
    g: int
    bounds: dict[str, Fraction] = field(default_factory=dict)
    witnesses: Optional[list[int]] = None

    def violations(self) -> dict[str, Fraction]:
        """Bounds that fall below the exact number they are supposed to dominate."""
        out = {}
        for name, value in self.bounds.items():
            exact = self.f if name in ("theorem_f", "reduce_to_three_f") else self.g
            if value < exact:
                out[name] = value
        return out


def frobenius_report(instance: InstanceLike, with_witnesses: bool = False) -> FrobeniusReport:
    """Exact f and g together with every applicable bound.

    Keys ending in ``_f`` bound f; the remaining keys bound g.
    """
    inst = as_instance(instance)
    g = frobenius_g(inst)
    report = FrobeniusReport(instance=inst, f=g + sum(inst.parts), g=g)
    report.bounds["theorem_f"] = bound_estimate(inst)
    if inst.n >= 3:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RuntimeWarning)
            report.bounds["reduce_to_three_f"] = reduce_to_three(inst)
    for name, fn in G_BOUNDS.items():
        report.bounds[name] = fn(inst)
    if with_witnesses:
        report.witnesses = non_representable(inst)
    return report

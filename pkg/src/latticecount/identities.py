"""Exact verification of the reciprocity laws over enumerated input families."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator, Sequence, Union

from .ehrhart import closed_formula, interior_formula, residue_Rprime
from .exact_arith import Instance, as_instance, format_rational
from .fourier_dedekind import dedekind_sum, sigma_exact

InstanceLike = Union[Instance, Sequence[int]]


class HypothesisViolated(ValueError):
    pass


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    params: dict
    lhs: Fraction
    rhs: Fraction

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {
            "identity": self.name,
            "params": self.params,
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "passed": self.passed,
        }


def _coprime_instance(instance: InstanceLike, min_parts: int) -> Instance:
    inst = as_instance(instance)
    if inst.n < min_parts:
        raise HypothesisViolated(f"need at least {min_parts} parts")
    if not inst.pairwise_coprime:
        raise HypothesisViolated(f"parts {inst.parts} are not pairwise coprime")
    return inst


def _sigma_sum(parts: tuple[int, ...], t: int) -> Fraction:
    # sum_j sigma_t(a_1, ..., a_j omitted, ..., a_n; a_j)
    return sum(
        (sigma_exact(t, parts[:j] + parts[j + 1:], a) for j, a in enumerate(parts)),
        Fraction(0),
    )


def verify_zagier(instance: InstanceLike, signed: bool = False) -> IdentityCheck:
    """sum_j sigma_0(a without a_j; a_j) against 1 - R'_0(a).

    With ``signed=True`` the constant 1 is replaced by (-1)^(n-1), the Euler
    characteristic of the open (n-1)-simplex whose dilates p'_A counts.  The
    unsigned statement only holds for odd n.
    """
    inst = _coprime_instance(instance, 2)
    euler = (-1) ** (inst.n - 1) if signed else 1
    return IdentityCheck(
        "zagier-signed" if signed else "zagier",
        {"parts": list(inst.parts)},
        _sigma_sum(inst.parts, 0),
        euler - residue_Rprime(inst)(0),
    )


def verify_gessel_general(instance: InstanceLike, t: int) -> IdentityCheck:
    inst = _coprime_instance(instance, 2)
    if not 0 < t < sum(inst.parts):
        raise HypothesisViolated(f"hypothesis violated: need 0 < t < {sum(inst.parts)}, got t = {t}")
    return IdentityCheck(
        "gessel",
        {"parts": list(inst.parts), "t": t},
        _sigma_sum(inst.parts, t),
        -residue_Rprime(inst)(t),
    )


def gessel_rhs(m: int, n: int, r: int) -> Fraction:
    m, n = Fraction(m), Fraction(n)
    return (
        -Fraction(1, 12) * (m / n + n / m + 1 / (m * n))
        + Fraction(1, 4) * (1 / m + 1 / n - 1)
        + Fraction(r, 2) * (1 / m + 1 / n - 1 / (m * n))
        - r * r / (2 * m * n)
    )


def verify_gessel_2d(m: int, n: int, r: int) -> IdentityCheck:
    """Gessel's two-variable law; the left side is sigma_{r+1}(n, 1; m) + sigma_{r+1}(m, 1; n)."""
    if m < 1 or n < 1 or math.gcd(m, n) != 1:
        raise HypothesisViolated(f"need coprime positive m, n; got {m}, {n}")
    if not 0 <= r < m + n:
        raise HypothesisViolated(f"hypothesis violated: need 0 <= r < {m + n}, got r = {r}")
    lhs = sigma_exact(r + 1, (n, 1), m) + sigma_exact(r + 1, (m, 1), n)
    return IdentityCheck("gessel2d", {"m": m, "n": n, "r": r}, lhs, gessel_rhs(m, n, r))


def verify_ehrhart_macdonald(instance: InstanceLike, t: int) -> IdentityCheck:
    inst = _coprime_instance(instance, 1)
    if t < 1:
        raise HypothesisViolated("t must be positive")
    return IdentityCheck(
        "ehrhart-macdonald",
        {"parts": list(inst.parts), "t": t},
        interior_formula(inst, -t),
        (-1) ** inst.n * closed_formula(inst, t),
    )


def verify_dedekind_reciprocity(a: int, b: int) -> IdentityCheck:
    """s(a, b) + s(b, a) = -1/4 + (a/b + b/a + 1/(ab))/12, the case (a, b, 1) of the Zagier law."""
    if math.gcd(a, b) != 1:
        raise HypothesisViolated(f"gcd({a}, {b}) != 1")
    lhs = dedekind_sum(a, b) + dedekind_sum(b, a)
    rhs = Fraction(-1, 4) + Fraction(1, 12) * (Fraction(a, b) + Fraction(b, a) + Fraction(1, a * b))
    return IdentityCheck("dedekind", {"a": a, "b": b}, lhs, rhs)


# --- families ----------------------------------------------------------------


def pairwise_coprime_tuples(n: int, max_part: int, min_part: int = 1) -> Iterator[tuple[int, ...]]:
    """Strictly increasing pairwise-coprime n-tuples with parts in [min_part, max_part]."""
    for combo in combinations(range(min_part, max_part + 1), n):
        if all(math.gcd(x, y) == 1 for x, y in combinations(combo, 2)):
            yield combo


def _zagier_family(max_part: int, signed: bool = False):
    for n in (2, 3, 4):
        for parts in pairwise_coprime_tuples(n, max_part):
            yield verify_zagier(parts, signed=signed)


def _zagier_signed_family(max_part: int):
    return _zagier_family(max_part, signed=True)


def _gessel_family(max_part: int):
    for n in (2, 3, 4):
        for parts in pairwise_coprime_tuples(n, max_part):
            for t in range(1, sum(parts)):
                yield verify_gessel_general(parts, t)


def _gessel2d_family(max_part: int):
    for m in range(1, max_part + 1):
        for n in range(1, max_part + 1):
            if math.gcd(m, n) == 1:
                for r in range(m + n):
                    yield verify_gessel_2d(m, n, r)


def _ehrhart_macdonald_family(max_part: int, max_t: int = 100):
    for n in (1, 2, 3):
        for parts in pairwise_coprime_tuples(n, max_part):
            for t in range(1, max_t + 1):
                yield verify_ehrhart_macdonald(parts, t)


SUITES: dict[str, tuple[Callable, int]] = {
    "zagier": (_zagier_family, 12),
    "zagier-signed": (_zagier_signed_family, 12),
    "gessel": (_gessel_family, 12),
    "gessel2d": (_gessel2d_family, 12),
    "ehrhart-macdonald": (_ehrhart_macdonald_family, 15),
}


@dataclass
class SuiteSummary:
    suite: str
    checked: int = 0
    passed: int = 0
    failures: list[IdentityCheck] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return len(self.failures)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "failures": [c.to_dict() for c in self.failures],
        }


def run_suite(name: str, max_part: int | None = None) -> SuiteSummary:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    family, default_max = SUITES[name]
    summary = SuiteSummary(name)
    for check in family(default_max if max_part is None else max_part):
        summary.checked += 1
        if check.passed:
            summary.passed += 1
        else:
            summary.failures.append(check)
    return summary

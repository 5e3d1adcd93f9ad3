"""Lattice-point counts for the simplex {x >= 0 : sum a_k x_k <= 1} and its facet.

The counts come from the residue theorem: a polynomial part (residue at
z = 1, obtained from a truncated series in w after z = e^w) plus one
Fourier-Dedekind sum per part.  Brute-force enumerations serve as oracles.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .exact_arith import Instance, as_instance
from .fourier_dedekind import sigma_closed_n2, sigma_exact
from .polynomial import PolyQ
from .series import exp_linear_in_t, reciprocal_expm1

InstanceLike = Union[Instance, Sequence[int]]

DEFAULT_BUDGET = 5_000_000


class UnsupportedInstance(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class ResiduePolynomial:
    """A polynomial in t with rational coefficients, ``coefficients[k]`` for t^k."""

    coefficients: tuple[Fraction, ...]

    @classmethod
    def from_poly(cls, p: PolyQ) -> "ResiduePolynomial":
        return cls(p.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def as_poly(self) -> PolyQ:
        return PolyQ(self.coefficients)


def _series_residue(parts: tuple[int, ...], t_sign: int, extra_unit: bool) -> PolyQ:
    # all factors are 1/(e^{a w} - 1); signs are fixed by the callers
    factors = list(parts) + ([1] if extra_unit else [])
    order = len(factors) + 2
    block = exp_linear_in_t(t_sign, order)
    for a in factors:
        block = block * reciprocal_expm1(a, order)
    return block.residue()


@lru_cache(maxsize=1024)
def _residue_R(parts: tuple[int, ...]) -> ResiduePolynomial:
    res = _series_residue(parts, -1, extra_unit=True)
    # 1/(1 - e^{aw}) = -1/(e^{aw} - 1) for each of the n + 1 factors, then R = -Res
    sign = -1 if len(parts) % 2 else 1
    return ResiduePolynomial.from_poly(res * sign)


def residue_R(instance: InstanceLike) -> ResiduePolynomial:
    """R_{-t}(a_1, ..., a_n) as a polynomial in t (minus the residue at z = 1)."""
    return _residue_R(as_instance(instance).parts)


@lru_cache(maxsize=1024)
def _residue_Rprime(parts: tuple[int, ...]) -> ResiduePolynomial:
    return ResiduePolynomial.from_poly(_series_residue(parts, 1, extra_unit=False))


def residue_Rprime(instance: InstanceLike) -> ResiduePolynomial:
    """R'_t(a_1, ..., a_n): residue of z^{t-1}/prod(z^{a_k} - 1) at z = 1."""
    inst = as_instance(instance)
    if inst.n < 2:
        raise ValueError("R' needs at least two parts")
    return _residue_Rprime(inst.parts)


def _require_coprime(inst: Instance) -> None:
    if not inst.pairwise_coprime:
        raise UnsupportedInstance(
            f"unsupported: non-simple poles (parts {inst.parts} are not pairwise coprime)"
        )


def _omit(parts: tuple[int, ...], j: int) -> list[int]:
    return list(parts[:j] + parts[j + 1:])


def _as_count(value: Fraction) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"counting formula returned non-integer {value}")
    return value.numerator


def closed_formula(instance: InstanceLike, t: int) -> Fraction:
    """R_{-t} + (-1)^n sum_j sigma_{-t}(a without a_j, 1; a_j), for any integer t."""
    inst = as_instance(instance)
    _require_coprime(inst)
    parts = inst.parts
    corr = sum((sigma_exact(-t, _omit(parts, j) + [1], a) for j, a in enumerate(parts)), Fraction(0))
    return residue_R(inst)(t) + (-1) ** inst.n * corr


def interior_formula(instance: InstanceLike, t: int) -> Fraction:
    """(-1)^n R_t + sum_j sigma_t(a without a_j, 1; a_j), for any integer t."""
    inst = as_instance(instance)
    _require_coprime(inst)
    parts = inst.parts
    corr = sum((sigma_exact(t, _omit(parts, j) + [1], a) for j, a in enumerate(parts)), Fraction(0))
    # residue_R is R_{-s} as a polynomial in s, so R_t is its value at s = -t
    return (-1) ** inst.n * residue_R(inst)(-t) + corr


def facet_formula(instance: InstanceLike, t: int) -> Fraction:
    """R'_t + sum_j sigma_t(a without a_j; a_j), for any integer t."""
    inst = as_instance(instance)
    _require_coprime(inst)
    parts = inst.parts
    corr = sum((sigma_exact(t, _omit(parts, j), a) for j, a in enumerate(parts)), Fraction(0))
    return residue_Rprime(inst)(t) + corr


def count_closed(instance: InstanceLike, t: int) -> int:
    """Number of lattice points in t*P (closed simplex)."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    return _as_count(closed_formula(instance, t))


def count_interior(instance: InstanceLike, t: int) -> int:
    """Number of lattice points in the interior of t*P.

    Negative t is accepted and evaluates the same formula; the result is then
    the reciprocity partner (-1)^n * count_closed(-t), not a count.
    """
    return _as_count(interior_formula(instance, t))


def count_restricted_partitions(instance: InstanceLike, t: int) -> int:
    """p'_A(t): solutions of sum m_k a_k = t with every m_k >= 1."""
    inst = as_instance(instance)
    if inst.n < 2:
        raise ValueError("restricted partitions need at least two parts")
    _require_coprime(inst)
    if t <= 0:
        return 0
    return _as_count(facet_formula(inst, t))


def count_partitions(instance: InstanceLike, t: int) -> int:
    """p_A(t): solutions of sum m_k a_k = t with every m_k >= 0."""
    inst = as_instance(instance)
    if t < 0:
        return 0
    return count_restricted_partitions(inst, t + sum(inst.parts))


def fourier_section_closed_form(a: int, b: int, t: int) -> Fraction:
    """Explicit n = 2 expression for L(P, t) written with the printed R_{-t}(a, b).

    The two root-of-unity corrections (1/a) sum_r xi_a^{-rt} / ((1 - xi_a^{rb})(1 - xi_a^r))
    equal sigma_{-t}(b, 1; a); they are evaluated with the sawtooth closed form so
    that nothing here goes through the cyclotomic engine or the series residues.
    """
    a, b = Fraction(a), Fraction(b)
    poly = (
        t * t / (2 * a * b)
        + Fraction(t, 2) * (1 / a + 1 / b + 1 / (a * b))
        + Fraction(1, 4) * (1 + 1 / a + 1 / b)
        + Fraction(1, 12) * (a / b + b / a + 1 / (a * b))
    )
    a, b = int(a), int(b)
    return poly + sigma_closed_n2(-t, b, 1, a) + sigma_closed_n2(-t, a, 1, b)


# --- oracles -----------------------------------------------------------------


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self, k: int = 1) -> None:
        self.used += k
        if self.used > self.limit:
            raise BudgetExceeded(f"enumeration budget of {self.limit} steps exceeded")


def _enumerate(parts, t, lower, on_last):
    """Walk m_1..m_{n-1} >= lower with prefix sums, delegating the last coordinate."""
    n = len(parts)

    def rec(k, rest, prefix_has_zero):
        if k == n - 1:
            return on_last(rest, prefix_has_zero)
        total = 0
        m = lower
        while True:
            r = rest - m * parts[k]
            if r < 0:
                break
            total += rec(k + 1, r, prefix_has_zero or m == 0)
            m += 1
        return total

    return rec(0, t, False)


def brute_force_closed(instance: InstanceLike, t: int, budget: int = DEFAULT_BUDGET) -> int:
    """#{m in Z^n : m >= 0, sum m_k a_k <= t} by enumeration."""
    parts = as_instance(instance).parts
    if t < 0:
        return 0
    bud = _Budget(budget)
    last = parts[-1]

    def on_last(rest, _):
        bud.spend()
        return rest // last + 1

    return _enumerate(parts, t, 0, on_last)


def brute_force_interior(instance: InstanceLike, t: int, budget: int = DEFAULT_BUDGET) -> int:
    """#{m in Z^n : m >= 1, sum m_k a_k < t} by enumeration."""
    parts = as_instance(instance).parts
    bud = _Budget(budget)
    last = parts[-1]

    def on_last(rest, _):
        bud.spend()
        # m_n >= 1 and m_n * last < rest
        return max((rest - 1) // last, 0) if rest > 0 else 0

    return _enumerate(parts, t, 1, on_last)


def brute_force_facet(instance: InstanceLike, t: int, budget: int = DEFAULT_BUDGET) -> int:
    """#{m in Z^n : m >= 1, sum m_k a_k = t} by enumeration."""
    parts = as_instance(instance).parts
    bud = _Budget(budget)
    last = parts[-1]

    def on_last(rest, _):
        bud.spend()
        return 1 if rest > 0 and rest % last == 0 else 0

    return _enumerate(parts, t, 1, on_last)


def brute_force_boundary(instance: InstanceLike, t: int, budget: int = DEFAULT_BUDGET) -> int:
    """Points of t*P with some coordinate 0 or on the skewed facet."""
    parts = as_instance(instance).parts
    if t < 0:
        return 0
    bud = _Budget(budget)
    last = parts[-1]

    def on_last(rest, prefix_has_zero):
        bud.spend()
        if prefix_has_zero:
            return rest // last + 1
        # m_n = 0, plus m_n >= 1 landing exactly on the facet
        return 1 + (1 if rest > 0 and rest % last == 0 else 0)

    return _enumerate(parts, t, 0, on_last)


def denumerant_table(parts: Sequence[int], limit: int) -> list[int]:
    """p_A(s) for s = 0..limit by the coin-change recurrence (series multiplication)."""
    table = [0] * (limit + 1)
    if limit >= 0:
        table[0] = 1
    for a in parts:
        for s in range(a, limit + 1):
            table[s] += table[s - a]
    return table

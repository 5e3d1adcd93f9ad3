"""Exit criteria, run exhaustively on the stated families.

Each test records a single verdict line that is printed at the end of the run.
"""
import math
import random
import time
from fractions import Fraction
from itertools import combinations

import pytest

from latticecount.ehrhart import (
    count_closed,
    count_interior,
    count_restricted_partitions,
    denumerant_table,
    fourier_section_closed_form,
    residue_R,
    residue_Rprime,
)
from latticecount.fourier_dedekind import (
    rademacher_lower_bound,
    sigma_closed_n1,
    sigma_closed_n2,
    sigma_exact,
    sigma_numeric,
)
from latticecount.frobenius import frobenius_f, frobenius_report
from latticecount.identities import pairwise_coprime_tuples, run_suite
from latticecount.polynomial import PolyQ

from printed_tables import RPRIME_TABLE, R_TABLE

pytestmark = pytest.mark.acceptance


def coprime_pairs(lo, hi):
    return [(a, b) for a in range(lo, hi + 1) for b in range(a + 1, hi + 1) if math.gcd(a, b) == 1]


def units(c):
    return [a for a in range(1, c + 1) if math.gcd(a, c) == 1]


def pair_restricted_partitions(a, b, t):
    # m*a + k*b = t with m, k >= 1
    return sum(1 for m in range(1, t // a + 1) if t - a * m > 0 and (t - a * m) % b == 0)


def interpolate(points):
    """Lagrange interpolation through (x, y) pairs, as a PolyQ."""
    total = PolyQ()
    for i, (xi, yi) in enumerate(points):
        term = PolyQ([Fraction(yi)])
        for j, (xj, _) in enumerate(points):
            if j != i:
                term = term * PolyQ([Fraction(-xj, xi - xj), Fraction(1, xi - xj)])
        total = total + term
    return total


def test_partition_formula_pairs(record_criterion):
    start = time.perf_counter()
    checked, bad = 0, []
    for a, b in coprime_pairs(2, 30):
        for t in range(1, 2 * a * b + 1):
            checked += 1
            if count_restricted_partitions((a, b), t) != pair_restricted_partitions(a, b, t):
                bad.append((a, b, t))
    record_criterion(1, not bad, f"{checked} pair values, {len(bad)} mismatches", time.perf_counter() - start)
    assert not bad, bad[:5]


def test_triple_counts(record_criterion):
    start = time.perf_counter()
    checked, bad = 0, []
    for parts in pairwise_coprime_tuples(3, 15):
        with_unit = denumerant_table(parts + (1,), 300)
        plain = denumerant_table(parts, 300)
        total = sum(parts)
        for t in range(1, 301):
            # strictly positive multiplicities: shift by the sum of the parts
            expected = (
                with_unit[t],
                with_unit[t - total - 1] if t > total else 0,
                plain[t - total] if t >= total else 0,
            )
            got = (
                count_closed(parts, t),
                count_interior(parts, t),
                count_restricted_partitions(parts, t),
            )
            checked += 3
            if got != expected:
                bad.append((parts, t, got, expected))
    record_criterion(2, not bad, f"{checked} triple values, {len(bad)} mismatches", time.perf_counter() - start)
    assert not bad, bad[:5]


def test_two_part_frobenius(record_criterion):
    start = time.perf_counter()
    pairs = coprime_pairs(1, 50)
    bad = [(a, b) for a, b in pairs if frobenius_f((a, b)) != a * b]
    record_criterion(3, not bad, f"{len(pairs)} pairs, {len(bad)} mismatches", time.perf_counter() - start)
    assert not bad, bad[:5]


def test_zagier_reciprocity(record_criterion):
    start = time.perf_counter()
    summary = run_suite("zagier", 12)
    signed = run_suite("zagier-signed", 12)
    even = sum(1 for c in summary.failures if len(c.params["parts"]) % 2 == 0)
    detail = (
        f"{summary.checked} tuples, {summary.failed} failures ({even} with even n); "
        f"with sign (-1)^(n-1): {signed.failed} failures"
    )
    record_criterion(4, summary.failed == 0, detail, time.perf_counter() - start)
    assert signed.failed == 0
    assert summary.failed == 0, [c.params for c in summary.failures[:5]]


def test_gessel_identities(record_criterion):
    start = time.perf_counter()
    general = run_suite("gessel", 12)
    planar = run_suite("gessel2d", 12)
    ok = general.failed == 0 and planar.failed == 0
    detail = (
        f"general: {general.checked} checks, {general.failed} failures; "
        f"closed planar form: {planar.checked} checks, {planar.failed} failures"
    )
    record_criterion(5, ok, detail, time.perf_counter() - start)
    assert ok


def test_ehrhart_macdonald(record_criterion):
    start = time.perf_counter()
    summary = run_suite("ehrhart-macdonald", 15)
    record_criterion(
        6,
        summary.failed == 0,
        f"{summary.checked} checks, {summary.failed} failures",
        time.perf_counter() - start,
    )
    assert summary.failed == 0


def test_rademacher_bound(record_criterion):
    start = time.perf_counter()
    checked, bad = 0, []
    for c in range(1, 21):
        floor = rademacher_lower_bound(c)
        for a in units(c):
            for b in units(c):
                for t in range(c):
                    checked += 1
                    value = sigma_exact(t, (a, b), c)
                    if value < floor:
                        bad.append((t, a, b, c, value))
    record_criterion(7, not bad, f"{checked} sums, {len(bad)} below the bound", time.perf_counter() - start)
    assert not bad, bad[:5]


def _random_pairwise_coprime(rng, n, low, high):
    while True:
        parts = tuple(rng.randint(low, high) for _ in range(n))
        if all(math.gcd(x, y) == 1 for x, y in combinations(parts, 2)):
            return parts


def test_printed_residue_tables(record_criterion):
    start = time.perf_counter()
    rng = random.Random(20240601)
    checked, bad = 0, []
    jobs = [(n, R_TABLE[n], residue_R, 1) for n in (1, 2, 3)]
    jobs += [(n, RPRIME_TABLE[n], residue_Rprime, 1) for n in (2, 3, 4)]
    for n, printed, computed, low in jobs:
        for _ in range(20):
            parts = _random_pairwise_coprime(rng, n, low, 40)
            poly = computed(parts)
            # one point beyond the degree also pins down the printed degree
            ts = range(-1, poly.degree + 2)
            expected = interpolate([(t, printed(*parts, t)) for t in ts])
            checked += 1
            if poly.as_poly() != expected:
                bad.append((computed.__name__, parts))
    record_criterion(8, not bad, f"{checked} instantiations, {len(bad)} mismatches", time.perf_counter() - start)
    assert not bad, bad


def _triples(max_part):
    for triple in combinations(range(1, max_part + 1), 3):
        if math.gcd(*triple) == 1:
            yield triple


def test_bound_dominance(record_criterion):
    start = time.perf_counter()
    checked = 0
    failures: dict[str, list] = {}
    coprime_only: dict[str, int] = {}
    for triple in _triples(30):
        checked += 1
        report = frobenius_report(triple)
        pairwise = all(math.gcd(x, y) == 1 for x, y in combinations(triple, 2))
        for name in report.violations():
            if name == "reduce_to_three_f":
                continue
            failures.setdefault(name, []).append(triple)
            if pairwise:
                coprime_only[name] = coprime_only.get(name, 0) + 1
    parts = [
        f"{name}: {len(v)} violations ({coprime_only.get(name, 0)} pairwise coprime)"
        for name, v in sorted(failures.items())
    ]
    detail = f"{checked} triples; " + ("; ".join(parts) if parts else "no violations")
    record_criterion(9, not failures, detail, time.perf_counter() - start)
    assert not failures, {k: v[:3] for k, v in failures.items()}


def test_exact_numeric_agreement(record_criterion):
    start = time.perf_counter()
    rng = random.Random(7)
    worst, bad = 0.0, []
    for _ in range(1000):
        c = rng.randint(1, 200)
        n = rng.randint(1, 3)
        args = tuple(rng.choice(units(c)) + c * rng.randint(0, 2) for _ in range(n))
        t = rng.randint(-3 * c, 3 * c)
        err = abs(float(sigma_exact(t, args, c)) - sigma_numeric(t, args, c))
        worst = max(worst, err)
        if err > 1e-9:
            bad.append((t, args, c, err))
    closed_checked, closed_bad = 0, []
    for c in range(1, 21):
        us = units(c)
        for t in range(c):
            for a in us:
                closed_checked += 1
                if sigma_closed_n1(t, a, c) != sigma_exact(t, (a,), c):
                    closed_bad.append((t, a, c))
                for b in us:
                    closed_checked += 1
                    if sigma_closed_n2(t, a, b, c) != sigma_exact(t, (a, b), c):
                        closed_bad.append((t, a, b, c))
    ok = not bad and not closed_bad
    detail = (
        f"1000 random specs, max abs error {worst:.1e}; "
        f"{closed_checked} closed-form checks, {len(closed_bad)} mismatches"
    )
    record_criterion(10, ok, detail, time.perf_counter() - start)
    assert ok, (bad[:3], closed_bad[:3])


def test_two_dimensional_closed_form(record_criterion):
    start = time.perf_counter()
    checked, bad = 0, []
    for a in range(1, 16):
        for b in range(1, 16):
            if math.gcd(a, b) != 1:
                continue
            for t in range(0, 101):
                checked += 1
                if fourier_section_closed_form(a, b, t) != count_closed((a, b), t):
                    bad.append((a, b, t))
    record_criterion(11, not bad, f"{checked} values, {len(bad)} mismatches", time.perf_counter() - start)
    assert not bad, bad[:5]

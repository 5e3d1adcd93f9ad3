import cmath
import math
import random
from fractions import Fraction

import pytest

from latticecount.cyclotomic import CycloElem, cyclotomic_poly, inverse, reduce, trace
from latticecount.exact_arith import divisors, euler_phi
from latticecount.polynomial import PolyQ, poly_gcdex

X = PolyQ.monomial(1)


def random_elem(rng, d, lo=-5, hi=5):
    coeffs = [Fraction(rng.randint(lo, hi), rng.randint(1, 4)) for _ in range(euler_phi(d))]
    return CycloElem(PolyQ(coeffs), d)


def evaluate(p: PolyQ, z: complex) -> complex:
    return sum(float(c) * z**k for k, c in enumerate(p.coeffs))


def test_polyq_basics():
    p = PolyQ([1, 2, 0, 0])
    assert p.coeffs == (1, 2) and p.degree == 1
    assert PolyQ().degree == -1
    q, r = divmod(X**5 + 1, X**2 + 1)
    assert q * (X**2 + 1) + r == X**5 + 1
    assert r.degree < 2
    g, s, t = poly_gcdex(X**2 - 1, X**2 - 3 * X + 2)
    assert g == X - 1
    assert s * (X**2 - 1) + t * (X**2 - 3 * X + 2) == g


def test_cyclotomic_small():
    assert cyclotomic_poly(1) == X - 1
    assert cyclotomic_poly(2) == X + 1
    # x^6 - 1 divided by Phi_1 Phi_2 Phi_3 = (x - 1)(x + 1)(x^2 + x + 1)
    q, r = divmod(X**6 - 1, (X - 1) * (X + 1) * (X**2 + X + 1))
    assert r.is_zero()
    assert cyclotomic_poly(6) == q == X**2 - X + 1


@pytest.mark.parametrize("d", range(1, 61))
def test_cyclotomic_product_identity(d):
    prod = PolyQ([1])
    for e in divisors(d):
        prod = prod * cyclotomic_poly(e)
    assert prod == X**d - 1
    phi = cyclotomic_poly(d)
    assert phi.degree == euler_phi(d)
    assert phi.leading() == 1 and all(c.denominator == 1 for c in phi.coeffs)


def test_reduce_examples():
    assert reduce(X**2, 4).rep == PolyQ([-1])
    assert reduce(X**3, 3).rep == PolyQ([1])
    assert reduce(X + 1, 5).rep == X + 1


def test_inverse_examples():
    assert inverse(reduce(X, 4)).rep == -X
    inv = inverse(reduce(X - 1, 3))
    assert inv.rep == PolyQ([Fraction(-2, 3), Fraction(-1, 3)])
    assert (inv * reduce(X - 1, 3)).rep == PolyQ([1])
    with pytest.raises(ZeroDivisionError, match="not invertible"):
        inverse(reduce(X + 1, 2))
    with pytest.raises(ZeroDivisionError):
        inverse(CycloElem(PolyQ(), 7))


def test_inverse_is_involution():
    rng = random.Random(7)
    for d in range(2, 31):
        for _ in range(3):
            e = random_elem(rng, d)
            if e.is_zero():
                continue
            inv = inverse(e)
            assert (e * inv).rep == PolyQ([1])
            assert inverse(inv) == e


def test_x_power_minus_one_invertible_for_coprime_exponent():
    for d in range(2, 40):
        for c in range(1, d):
            if math.gcd(c, d) == 1:
                inverse(reduce(X**c - 1, d))


def test_trace_examples(roots):
    for d in range(1, 20):
        assert trace(CycloElem.scalar(1, d)) == euler_phi(d)
    for p in (2, 3, 5, 7):
        assert trace(reduce(X, p)) == -1
    e = CycloElem(PolyQ([Fraction(-2, 3), Fraction(-1, 3)]), 3)
    assert trace(e) == -1
    direct = sum(1 / (z - 1) for z in roots(3))
    assert abs(direct - (-1)) < 1e-12


def test_trace_linear_and_matches_complex_sum(roots):
    rng = random.Random(11)
    for d in range(1, 31):
        e, f = random_elem(rng, d), random_elem(rng, d)
        alpha, beta = Fraction(rng.randint(-9, 9), 7), Fraction(rng.randint(-9, 9), 5)
        assert trace(e * alpha + f * beta) == alpha * trace(e) + beta * trace(f)
        direct = sum(evaluate(e.rep, z) for z in roots(d))
        assert abs(direct - float(trace(e))) < 1e-9
        shifted = sum(z**3 * evaluate(e.rep, z) for z in roots(d))
        assert abs(shifted - float(trace(e, shift=3))) < 1e-9

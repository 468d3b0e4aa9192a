"""Exact multivariate polynomial arithmetic."""

import random
from fractions import Fraction

import pytest

from schrodist.mpoly import (
    MPoly,
    NotDivisibleError,
    ONE,
    Q,
    V,
    ZERO,
    divexact,
    first_difference,
    poly_sum,
)


def random_poly(rng, nterms=4, maxdeg=3, maxc=5):
    terms = {}
    for _ in range(rng.randint(1, nterms)):
        exp = tuple(rng.randint(0, maxdeg) for _ in range(4))
        c = rng.randint(-maxc, maxc)
        if c:
            terms[exp] = terms.get(exp, 0) + c
    return MPoly({k: c for k, c in terms.items() if c})


def test_constants_and_render():
    assert ZERO.render() == "0"
    assert ONE.render() == "1"
    assert (Q * V).render() == "q*v"
    assert (ONE + Q + Q).render() == "1 + 2*q"
    assert (V - V).is_zero()


def test_monomial_constructor():
    m = MPoly.monomial(3, q=1, v=2)
    assert m.render() == "3*q*v^2"
    assert MPoly.monomial(1) == ONE


def test_ring_axioms_seeded():
    rng = random.Random(2024)
    for _ in range(40):
        a, b, c = (random_poly(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a - a).is_zero()
        assert a * ONE == a
        assert (a * ZERO).is_zero()


def test_divexact_roundtrip_seeded():
    rng = random.Random(7)
    for _ in range(40):
        a = random_poly(rng)
        b = random_poly(rng)
        if b.is_zero():
            continue
        assert divexact(a * b, b) == a


def test_divexact_rejects_non_multiple():
    num = Q * V + ONE
    with pytest.raises(NotDivisibleError):
        divexact(num, Q + ONE)


def test_divexact_zero_divisor():
    with pytest.raises(ZeroDivisionError):
        divexact(ONE, ZERO)


def test_subst():
    p = Q * Q * V + V + ONE
    assert p.subst("q", 1) == 2 * V + ONE
    assert p.subst("v", 0) == ONE
    assert p.subst("q", Fraction(1, 2)).subst("v", 4) == MPoly.const(6)


def test_poly_sum_matches_fold():
    rng = random.Random(99)
    polys = [random_poly(rng) for _ in range(10)]
    acc = ZERO
    for p in polys:
        acc = acc + p
    assert poly_sum(polys) == acc


def test_first_difference():
    assert first_difference(Q, Q) is None
    exp, ca, cb = first_difference(Q, Q + V)
    assert (exp, ca, cb) == ((0, 1, 0, 0), 0, 1)

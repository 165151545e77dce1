import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fermat_mld.cyclotomic import (
    NEG_INF,
    CyclotomicOrder,
    IntegerPolynomial,
    cyclotomic_polynomial,
    divisors,
    poly_divexact,
    poly_divmod,
    poly_mul,
    vanishing_sum_test,
)
from fermat_mld.counting import iter_multisets
from fermat_mld.errors import NonMonicDivisor, NonzeroRemainder

from oracles import root_sum, sympy_cyclotomic, totient

P = IntegerPolynomial
polys = st.lists(st.integers(-50, 50), max_size=8).map(P)


def test_normalisation_strips_trailing_zeros():
    assert P((1, 2, 0, 0)).coeffs == (1, 2)
    assert P((0, 0)).coeffs == ()
    assert P(()).degree == NEG_INF
    assert P((5,)).degree == 0


@pytest.mark.parametrize("a, b, expected", [
    ((-1, 1), (1, 1), (-1, 0, 1)),
    ((), (2, 0, 0, 1), ()),
    ((1, 1), (1, -1, 1), (1, 0, 0, 1)),
])
def test_poly_mul_examples(a, b, expected):
    assert poly_mul(P(a), P(b)) == P(expected)


@given(polys, polys)
def test_mul_degree_adds(a, b):
    prod = poly_mul(a, b)
    if a.is_zero() or b.is_zero():
        assert prod.is_zero()
    else:
        assert prod.degree == a.degree + b.degree


@pytest.mark.parametrize("num, den, expected", [
    ((-1, 0, 1), (-1, 1), (1, 1)),
    ((-1, 0, 0, 0, 1), (1, 0, 1), (-1, 0, 1)),
])
def test_divexact_examples(num, den, expected):
    assert poly_divexact(P(num), P(den)) == P(expected)


def test_divexact_remainder():
    with pytest.raises(NonzeroRemainder):
        poly_divexact(P((1, 0, 1)), P((1, 1)))


def test_divexact_non_monic():
    with pytest.raises(NonMonicDivisor):
        poly_divexact(P((1, 0, 2)), P((1, 2)))
    with pytest.raises(NonMonicDivisor):
        poly_divmod(P((1,)), P(()))


@given(polys, st.lists(st.integers(-9, 9), max_size=5))
def test_divmod_roundtrip(num, lower):
    den = P(tuple(lower) + (1,))
    q, r = poly_divmod(num, den)
    assert q * den + r == num
    assert r.degree < den.degree


@given(polys, st.lists(st.integers(-9, 9), max_size=5))
def test_divexact_inverts_mul(a, lower):
    den = P(tuple(lower) + (1,))
    assert poly_divexact(a * den, den) == a


@pytest.mark.parametrize("nu, expected", [(1, (-1, 1)), (4, (1, 0, 1)), (6, (1, -1, 1))])
def test_cyclotomic_examples(nu, expected):
    assert cyclotomic_polynomial(CyclotomicOrder(nu)) == P(expected)


def test_cyclotomic_matches_sympy():
    for nu in range(1, 121):
        assert list(cyclotomic_polynomial(nu).coeffs) == sympy_cyclotomic(nu)


def test_cyclotomic_order_rejects_nonpositive():
    with pytest.raises(ValueError):
        CyclotomicOrder(0)


def test_divisor_product_is_x_nu_minus_one():
    for nu in range(1, 61):
        prod = P((1,))
        for d in divisors(nu):
            prod = prod * cyclotomic_polynomial(d)
        assert prod == P.monomial(nu) - P((1,))
        assert cyclotomic_polynomial(nu).degree == totient(nu)


def test_value_at_one():
    for nu in range(2, 61):
        primes = [p for p in range(2, nu + 1) if nu % p == 0 and all(p % q for q in range(2, p))]
        expected = primes[0] if len(primes) == 1 else 1
        assert cyclotomic_polynomial(nu)(1) == expected


@pytest.mark.parametrize("nu, counts, add_one, expected", [
    (2, (0, 1), True, True),
    (3, (0, 1, 1), True, True),
    (4, (1, 0, 0, 0), True, False),
    (6, (1, 0, 0, 1, 0, 0), False, True),
    (1, (3,), True, False),
])
def test_vanishing_examples(nu, counts, add_one, expected):
    assert vanishing_sum_test(counts, add_one) is expected


def test_vanishing_agrees_with_float():
    for nu in range(1, 9):
        for mu in range(6):
            for m in iter_multisets(mu, nu):
                exps = [i for i, c in enumerate(m.counts) for _ in range(c)]
                for add_one in (False, True):
                    z = root_sum(exps, nu, add_one)
                    assert vanishing_sum_test(m, add_one) == (abs(z) < 1e-6), (m, add_one)


@settings(max_examples=200)
@given(st.integers(1, 24).flatmap(
    lambda nu: st.tuples(st.just(nu), st.lists(st.integers(0, 3), min_size=nu, max_size=nu),
                         st.integers(1, nu), st.booleans())))
def test_galois_invariance(args):
    nu, counts, k, add_one = args
    if math.gcd(k, nu) != 1:
        return
    permuted = [0] * nu
    for i, c in enumerate(counts):
        permuted[k * i % nu] += c
    assert vanishing_sum_test(counts, add_one) == vanishing_sum_test(permuted, add_one)

import numpy as np
import pytest

from opucsum import Method, brick_G, build_polynomials, coefficient, make_explicit, reversed_poly
from opucsum.measures import bs_measure, inner_product
from opucsum.opuc_core import coefficient_bricks_variant
from opucsum.verblunsky import rho2

from .conftest import random_sequence
from .oracles import gram_schmidt_coefficients

METHODS = (Method.RECURSION, Method.BRICKS, Method.BETA_CHAIN, Method.GZ)


def test_free_case_is_monomial():
    polys = build_polynomials(make_explicit([]), 3)
    assert polys[3].coeffs == (0j, 0j, 0j, 1 + 0j)


def test_single_step():
    polys = build_polynomials(make_explicit([0.5]), 1)
    assert polys[1].coeffs == (-0.5 + 0j, 1 + 0j)


def test_reversed_examples():
    polys = build_polynomials(make_explicit([]), 3)
    assert reversed_poly(polys[3]) == [1 + 0j, 0j, 0j, 0j]
    p1 = build_polynomials(make_explicit([0.5]), 1)[1]
    assert reversed_poly(p1) == [1 + 0j, -0.5 + 0j]


def test_reversal_is_involution(seq_factory):
    s = seq_factory(5)
    poly = build_polynomials(s, 5)[5]
    twice = [c.conjugate() for c in reversed(reversed_poly(poly))]
    assert twice == list(poly.coeffs)


def test_constant_and_leading_coefficients(seq_factory):
    s = seq_factory(6)
    for n in range(1, 7):
        for method in METHODS:
            assert coefficient(s, n, n, method) == 1
            assert coefficient(s, n, 0, method) == pytest.approx(
                -s[n - 1].conjugate(), abs=1e-12
            )


def test_subleading_coefficient_formula(seq_factory):
    # a_{n,n-1} = sum_{j<n} conj(a_j) a_{j-1}
    s = seq_factory(6)
    for n in range(1, 7):
        expected = sum(s[j].conjugate() * s[j - 1] for j in range(n))
        for method in METHODS:
            assert coefficient(s, n, n - 1, method) == pytest.approx(expected, abs=1e-12)


def test_methods_agree(rng):
    for _ in range(6):
        s = random_sequence(rng, int(rng.integers(1, 9)), 0.7)
        for n in range(0, 9):
            for m in range(0, n + 1):
                base = coefficient(s, n, m, Method.RECURSION)
                for method in METHODS[1:]:
                    assert coefficient(s, n, m, method) == pytest.approx(base, abs=1e-10)
                assert coefficient_bricks_variant(s, n, m) == pytest.approx(
                    base, abs=1e-12
                )


def test_index_error():
    s = make_explicit([0.5])
    with pytest.raises(IndexError):
        coefficient(s, 2, 3)


def test_brick_examples(seq_factory):
    s = seq_factory(6)
    # G(k, 1) equals the subleading coefficient of the next degree
    for k in range(0, 5):
        assert brick_G(s, k, 1) == pytest.approx(
            coefficient(s, k + 1, k), abs=1e-12
        )
    z = make_explicit([])
    assert all(brick_G(z, k, l) == 0 for k in range(4) for l in range(1, 4))
    a = make_explicit([0.4 - 0.1j])
    for k in range(1, 4):
        assert brick_G(a, k, 1) == pytest.approx(-a[0].conjugate(), abs=0)


def test_empty_range_conventions():
    # the nested sums collapse to hand-unrolled values at tiny orders
    s = make_explicit([0.3 + 0.1j, -0.2j])
    # n = 1: a_{1,0} = -conj(a_0), no chain terms survive
    assert coefficient(s, 1, 0, Method.BRICKS) == pytest.approx(-s[0].conjugate())
    assert coefficient(s, 1, 0, Method.BETA_CHAIN) == pytest.approx(-s[0].conjugate())
    # n = 2, m = 1: single brick, hand value conj(a_1) a_0 - conj(a_0)
    hand = s[1].conjugate() * s[0] - s[0].conjugate()
    assert coefficient(s, 2, 1, Method.BRICKS) == pytest.approx(hand, abs=1e-15)
    assert coefficient(s, 2, 1, Method.GZ) == pytest.approx(hand, abs=1e-15)


def test_gram_schmidt_oracle(rng):
    s = random_sequence(rng, 5, 0.7)
    for n in range(1, 6):
        oracle = gram_schmidt_coefficients(s, n)
        mine = build_polynomials(s, n)[n].coeffs
        assert np.allclose(oracle, mine, atol=1e-9)


def test_orthogonality_under_quadrature(rng):
    s = random_sequence(rng, 4, 0.7)
    mu = bs_measure(s)
    polys = build_polynomials(s, 4)
    for m in range(5):
        for n in range(5):
            ip = inner_product(mu, polys[m].coeffs, polys[n].coeffs)
            if m == n:
                norm = 1.0
                for j in range(n):
                    norm *= rho2(s, j)
                assert ip == pytest.approx(norm, abs=1e-9)
            else:
                assert abs(ip) < 1e-9

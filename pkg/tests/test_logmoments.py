import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from opucsum import (
    LogMomentTable,
    UnsupportedOrder,
    bs_measure,
    d_direct,
    d_from_w,
    fourier_log,
    make_explicit,
    single_index_property,
    w0_closed,
    w_closed,
    w_from_d,
)
from opucsum.logmoments import interchange_residual, self_interchange_residual

from .conftest import random_sequence


def test_d1_examples():
    z = make_explicit([])
    for m in range(1, 5):
        assert d_direct(z, m) == 0
    s = make_explicit([0.5])
    assert d_direct(s, 1) == pytest.approx(-0.5, abs=0)


def test_d1_is_lag_one_sum(seq_factory):
    s = seq_factory()
    expected = sum(s[j] * s[j - 1].conjugate() for j in range(s.support_length + 1))
    assert d_direct(s, 1) == pytest.approx(expected, abs=1e-14)


def test_d_equals_coefficient_limit(rng):
    # d_m is the settled value of conj(a_{n, n-m}) once n passes the support
    from opucsum import Method, coefficient

    s = random_sequence(rng, 4, 0.8)
    for m in range(1, 5):
        n = s.support_length + m + 1
        assert d_direct(s, m) == pytest.approx(
            coefficient(s, n, n - m, Method.RECURSION).conjugate(), abs=1e-12
        )


def test_clip_window_loses_nothing(rng):
    s = random_sequence(rng, 5, 0.85)
    for m in range(1, 6):
        assert d_direct(s, m) == pytest.approx(
            d_direct(s, m, extra_window=2 * m), abs=1e-13
        )


def test_w_closed_examples(rng):
    assert w_closed(make_explicit([0.5]), 1) == pytest.approx(0.5, abs=0)
    assert w_closed(make_explicit([]), 2) == 0
    s = random_sequence(rng, 5, 0.8)
    mu = bs_measure(s)
    for m in (3, 4):
        assert w_closed(s, m) == pytest.approx(fourier_log(mu, m), abs=1e-8)
    with pytest.raises(UnsupportedOrder):
        w_closed(s, 5)


def test_w_reality_for_real_sequences(rng):
    vals = 0.8 * (rng.random(5) - 0.5)
    s = make_explicit(list(vals))
    for m in range(1, 5):
        assert abs(w_closed(s, m).imag) < 1e-12


def test_composition_low_orders():
    d = [0j, 0.3 + 0.1j, -0.2j, 0.05]
    assert w_from_d(d, 1) == pytest.approx(-d[1], abs=0)
    assert w_from_d(d, 2) == pytest.approx(-d[2] + 0.5 * d[1] ** 2, abs=1e-15)
    w = [0j, 0.4, -0.1 + 0.2j]
    assert d_from_w(w, 1) == pytest.approx(-w[1], abs=0)
    assert d_from_w(w, 2) == pytest.approx(-w[2] + 0.5 * w[1] ** 2, abs=1e-15)


@settings(max_examples=40, deadline=None)
@given(
    st.lists(
        st.complex_numbers(max_magnitude=0.9, allow_nan=False, allow_infinity=False),
        min_size=8,
        max_size=8,
    )
)
def test_composition_round_trip(dvals):
    d = [0j] + dvals
    w = [0j] + [w_from_d(d, k) for k in range(1, 9)]
    for k in range(1, 9):
        assert d_from_w(w, k) == pytest.approx(d[k], abs=1e-12)


def test_single_index_property(rng):
    assert single_index_property(make_explicit([]), 3) == 0
    assert single_index_property(make_explicit([0.5]), 2) < 1e-12
    s = random_sequence(rng, 5, 0.8)
    for m in range(1, 5):
        assert single_index_property(s, m) < 1e-10


def test_rearrangement_identities(rng):
    a = list(0.5 * (rng.random(9) - 0.5 + 1j * (rng.random(9) - 0.5)))
    b = list(0.5 * (rng.random(7) - 0.5 + 1j * (rng.random(7) - 0.5)))
    assert interchange_residual(a, b) < 1e-12
    assert self_interchange_residual(a) < 1e-12


def test_log_moment_table(rng):
    s = random_sequence(rng, 4, 0.8)
    closed = LogMomentTable.closed_form(s, 4)
    general = LogMomentTable.general_formula(s, 4)
    quad = LogMomentTable.quadrature(s, 4)
    assert closed.round_trip_residual() < 1e-12
    for k in range(5):
        assert closed.w[k] == pytest.approx(general.w[k], abs=1e-10)
        assert closed.w[k] == pytest.approx(quad.w[k], abs=1e-8)
    assert quad.provenance["w"] == "quadrature"


def test_w0_closed_free():
    assert w0_closed(make_explicit([])) == 0.0

import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from opucsum import OutOfDisk, make_explicit, make_geometric, rho
from opucsum.errors import BadDecay
from opucsum.verblunsky import from_spec, to_spec


def test_empty_sequence_conventions():
    s = make_explicit([])
    assert s.support_length == 0
    assert s[-1] == -1
    assert s[0] == 0
    assert s[17] == 0


def test_single_entry_rho():
    s = make_explicit([0.5])
    assert s.support_length == 1
    assert rho(s, 0) == pytest.approx(math.sqrt(0.75), abs=0)


def test_boundary_rejected():
    with pytest.raises(OutOfDisk) as err:
        make_explicit([1.0])
    assert err.value.index == 0
    with pytest.raises(OutOfDisk):
        make_explicit([0.2, 0.9999999999999999])


def test_trailing_zeros_trimmed():
    s = make_explicit([0.3, 0.0, 0.0])
    assert s.support_length == 1


def test_geometric_basic():
    s = make_geometric(0.5, 0.5, 3)
    assert list(s) == [0.5, 0.25, 0.125]
    assert make_geometric(0.3, 0.5, 0).support_length == 0
    with pytest.raises(BadDecay):
        make_geometric(0.5, 1.0, 4)
    with pytest.raises(OutOfDisk):
        make_geometric(1.2, 0.5, 4)


def test_geometric_l2_norm_closed_form():
    a, lam, n = 0.9, 0.99, 200
    s = make_geometric(a, lam, n)
    direct = sum(abs(v) ** 2 for v in s)
    closed = a**2 * (1 - lam ** (2 * n)) / (1 - lam**2)
    assert direct == pytest.approx(closed, rel=1e-13)


def test_rho_beyond_support_is_one():
    s = make_explicit([0.6])
    assert rho(s, 5) == 1.0
    assert rho(s, 0) == pytest.approx(0.8)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.complex_numbers(max_magnitude=0.95, allow_nan=False, allow_infinity=False),
        max_size=8,
    )
)
def test_rho_identity_and_accessors(values):
    s = make_explicit(values)
    assert s[-1] == -1
    assert s[s.support_length + 3] == 0
    for j in range(s.support_length):
        assert abs(s[j]) < 1
        assert rho(s, j) ** 2 + abs(s[j]) ** 2 == pytest.approx(1.0, abs=5e-16)


def test_spec_round_trip():
    s = make_explicit([0.1 + 0.2j, -0.3])
    assert from_spec(to_spec(s)) == s
    assert from_spec(json.dumps(to_spec(s))) == s


def test_spec_geometric_and_rejects():
    s = from_spec({"kind": "geometric", "a": [0.5, 0.0], "lambda": 0.5, "n": 3})
    assert list(s) == [0.5, 0.25, 0.125]
    with pytest.raises(ValueError):
        from_spec({"kind": "explicit", "values": [[float("nan"), 0.0]]})
    with pytest.raises(ValueError):
        from_spec({"kind": "geometric", "a": [0.5, 0.0], "lambda": float("inf"), "n": 3})
    with pytest.raises(ValueError):
        from_spec({"kind": "mystery"})

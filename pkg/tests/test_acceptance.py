"""Acceptance gate: each criterion runs at its stated tolerance and prints
one pass/fail line (visible with `pytest tests/test_acceptance.py -s`)."""

import math
import time
from fractions import Fraction

import numpy as np
import pytest

import opucsum as oc
from opucsum import Method
from opucsum.general_wm import enumerated_series_count, signed_coeff_sum
from opucsum.logmoments import d_direct, w0_closed, w_closed, w_from_d, d_from_w
from opucsum.measures import bs_measure, fourier_log, szego_taylor
from opucsum.moments import _b_dot_a, kappa_inv2
from opucsum.sumrules import WEIGHTS

from .conftest import random_sequence
from .oracles import gram_schmidt_coefficients

METHODS = (Method.RECURSION, Method.BRICKS, Method.BETA_CHAIN, Method.GZ)


def _report(label, elapsed, limit, worst, tol, extra=""):
    ok = worst < tol and elapsed < limit
    status = "PASS" if ok else "FAIL"
    print(
        f"ACCEPTANCE {label}: {status} "
        f"(worst {worst:.3e} < {tol:.0e}, {elapsed:.1f}s < {limit:.0f}s){extra}"
    )
    assert worst < tol
    assert elapsed < limit


def test_acceptance_1_coefficient_cross_equivalence():
    rng = np.random.default_rng(101)
    t0 = time.monotonic()
    worst_pair = 0.0
    worst_oracle = 0.0
    for trial in range(50):
        N = int(rng.integers(1, 13))
        s = random_sequence(rng, N, 0.7)
        for n in range(N + 1):
            for m in range(n + 1):
                vals = [oc.coefficient(s, n, m, meth) for meth in METHODS]
                spread = max(
                    abs(a - b) for i, a in enumerate(vals) for b in vals[i + 1 :]
                )
                worst_pair = max(worst_pair, spread)
        n_oracle = min(N, 6) if trial % 5 else N
        oracle = gram_schmidt_coefficients(s, n_oracle)
        mine = oc.build_polynomials(s, n_oracle)[n_oracle].coeffs
        worst_oracle = max(worst_oracle, max(abs(a - b) for a, b in zip(oracle, mine)))
    elapsed = time.monotonic() - t0
    _report("1 (four-method equivalence)", elapsed, 30, worst_pair, 1e-10)
    assert worst_oracle < 1e-9, worst_oracle


def test_acceptance_2_moment_duality():
    rng = np.random.default_rng(102)
    t0 = time.monotonic()
    worst_mom = worst_43 = worst_29 = 0.0
    for _ in range(50):
        N = int(rng.integers(1, 6))
        s = random_sequence(rng, N, 0.8)
        mu = bs_measure(s)
        for n in range(1, 2 * N + 1):
            worst_mom = max(
                worst_mom, abs(oc.moment_c(s, n) - oc.moment_oracle(mu, n, 1e-11))
            )
        for n in range(0, 13, 3):
            worst_43 = max(worst_43, abs(kappa_inv2(s, n) - _b_dot_a(s, n, 0)))
        for n in range(0, 11, 2):
            for m in range(n + 1):
                worst_29 = max(worst_29, oc.verblunsky_identity_residual(s, n, m))
    elapsed = time.monotonic() - t0
    _report("2 (moment duality)", elapsed, 30, worst_mom, 1e-9)
    assert worst_43 < 1e-10
    assert worst_29 < 1e-10


def test_acceptance_3_log_moment_closed_forms():
    rng = np.random.default_rng(103)
    t0 = time.monotonic()
    worst = 0.0
    for _ in range(50):
        s = random_sequence(rng, int(rng.integers(1, 7)), 0.8)
        mu = bs_measure(s)
        worst = max(worst, abs(w0_closed(s) - fourier_log(mu, 0, 1e-10).real))
        for m in range(1, 5):
            worst = max(worst, abs(w_closed(s, m) - fourier_log(mu, m, 1e-10)))
    elapsed = time.monotonic() - t0
    _report("3 (closed-form log moments)", elapsed, 60, worst, 1e-8)


def test_acceptance_4_d_expansion_and_round_trip():
    rng = np.random.default_rng(104)
    t0 = time.monotonic()
    worst_d = 0.0
    for _ in range(50):
        s = random_sequence(rng, int(rng.integers(1, 6)), 0.8)
        taylor = szego_taylor(bs_measure(s), 6, 1e-10)
        for m in range(1, 7):
            worst_d = max(worst_d, abs(d_direct(s, m) - taylor[m - 1]))
    worst_rt = 0.0
    for _ in range(50):
        d = [0j] + list(rng.random(8) - 0.5 + 1j * (rng.random(8) - 0.5))
        w = [0j] + [w_from_d(d, k) for k in range(1, 9)]
        worst_rt = max(
            worst_rt, max(abs(d_from_w(w, k) - d[k]) for k in range(1, 9))
        )
    elapsed = time.monotonic() - t0
    _report("4 (d-expansion)", elapsed, 60, worst_d, 1e-8)
    assert worst_rt < 1e-12, worst_rt


def test_acceptance_5_ten_sum_rules():
    rng = np.random.default_rng(105)
    t0 = time.monotonic()
    worst = {rid: 0.0 for rid in oc.RULE_IDS}
    for _ in range(20):
        s = random_sequence(rng, int(rng.integers(1, 7)), 0.8)
        for rid in oc.RULE_IDS:
            worst[rid] = max(worst[rid], oc.sum_rule(s, rid, 1e-10).residual)
    elapsed = time.monotonic() - t0
    overall = max(worst.values())
    lines = " ".join(f"{rid}:{w:.1e}" for rid, w in worst.items())
    _report("5 (ten sum rules)", elapsed, 300, overall, 1e-7, "\n    " + lines)


def test_acceptance_6_general_formula():
    rng = np.random.default_rng(106)
    t0 = time.monotonic()
    worst_low = worst_high = 0.0
    for _ in range(10):
        s = random_sequence(rng, int(rng.integers(1, 6)), 0.8)
        for m in range(1, 5):
            worst_low = max(worst_low, abs(oc.w_general(s, m) - w_closed(s, m)))
        mu = bs_measure(s)
        for m in (5, 6):
            worst_high = max(
                worst_high, abs(oc.w_general(s, m) - fourier_log(mu, m, 1e-10))
            )
    elapsed = time.monotonic() - t0
    _report("6 (general formula, m <= 4)", elapsed, 300, worst_low, 1e-10)
    assert worst_high < 1e-7, worst_high


def test_acceptance_7_combinatorics():
    t0 = time.monotonic()
    for n in range(1, 11):
        assert len(oc.partitions(tuple([1] * n))) == 2 ** (n - 1)

    def tuples_up_to(total):
        def rec(prefix, remaining):
            if remaining == 0 and prefix:
                yield tuple(prefix)
            for r in range(1, remaining + 1):
                yield from rec(prefix + [r], remaining - r)

        yield from rec([], total)

    for total in range(1, 8):
        for tup in tuples_up_to(total):
            assert oc.series_count(tup) == enumerated_series_count(None, tup)
    for m in range(1, 9):
        assert oc.coeff_sum(m, 1) == 1
    for m in range(2, 9):
        stated = Fraction(m // 2) * (m + 1) if m % 2 else Fraction(m * m - 1, 2)
        assert oc.coeff_sum(m, 2) == stated
    elapsed = time.monotonic() - t0
    _report("7 (combinatorics)", elapsed, 10, 0.0, 1.0)


def test_acceptance_8_shift_identities():
    rng = np.random.default_rng(108)
    t0 = time.monotonic()
    worst = 0.0
    for _ in range(100):
        s = random_sequence(rng, int(rng.integers(1, 8)), 0.9)
        k = int(rng.integers(1, 5))
        m = int(rng.integers(1, 5))
        poly = list(rng.standard_normal(int(rng.integers(2, 6))))
        worst = max(worst, oc.shift_identity_residual(s, "5.1", k=k, poly=poly))
        worst = max(worst, oc.shift_identity_residual(s, "5.2_both", m=m, k=k))
        idx = [int(rng.integers(0, 5)) for _ in range(4)]
        worst = max(
            worst,
            oc.shift_identity_residual(s, "5.16", m=idx[0], n=idx[1], p=idx[2], q=idx[3]),
        )
        rid = oc.RULE_IDS[int(rng.integers(0, 10))]
        worst = max(worst, oc.shift_identity_residual(s, "5.18", P=WEIGHTS[rid]))
    elapsed = time.monotonic() - t0
    _report("8 (shift-operator identities)", elapsed, 30, worst, 1e-11)


def test_acceptance_9_fejer_riesz():
    rng = np.random.default_rng(109)
    t0 = time.monotonic()
    theta = np.linspace(0.0, 2.0 * np.pi, 4096, endpoint=False)

    def residual(P):
        b = oc.fejer_riesz(P)
        z = np.exp(1j * theta)
        q = np.zeros_like(z)
        for c in reversed(b):
            q = q * z + c
        return float(np.max(np.abs(np.abs(q) ** 2 - P(theta))))

    worst = 0.0
    cases = [oc.TrigWeightPoly([1.0, -1.0])] + list(WEIGHTS.values())
    while len(cases) < 20:
        k = int(rng.integers(1, 7))
        b = rng.standard_normal(k + 1)
        coeffs = [float(np.dot(b, b))] + [
            2.0 * float(np.dot(b[: k - j + 1], b[j:])) for j in range(1, k + 1)
        ]
        cases.append(oc.TrigWeightPoly(coeffs))
    for P in cases:
        worst = max(worst, residual(P))
    # the worked example pins the shape of the degree-one factor
    b = oc.fejer_riesz(oc.TrigWeightPoly([1.0, -1.0]))
    assert abs(abs(b[0]) - 1 / math.sqrt(2)) < 1e-12 and abs(b[0] + b[1]) < 1e-12
    elapsed = time.monotonic() - t0
    _report("9 (spectral factorization)", elapsed, 10, worst, 1e-10)


def test_acceptance_10_conjecture_evidence():
    t0 = time.monotonic()
    worst = 0.0
    for n in range(1, 5):
        rep = oc.check_conjecture_519(n)
        worst = max(worst, max(r for _, r in rep["condition_residuals"]))
    evidence = []
    for n in range(5, 9):
        rep = oc.check_conjecture_519(n)
        evidence.append(
            f"n={n}: residuals {[r for _, r in rep['condition_residuals']]}"
        )
    elapsed = time.monotonic() - t0
    _report(
        "10 (coefficient condition)",
        elapsed,
        30,
        worst,
        1e-12,
        "\n    evidence (no assertion): " + "; ".join(evidence),
    )


def test_acceptance_11_inequality_suites():
    rng = np.random.default_rng(111)
    t0 = time.monotonic()
    violations = 0
    for _ in range(1000):
        n = int(rng.integers(2, 9))
        s = random_sequence(rng, n, 0.95)
        d1 = [s[j + 1] - s[j] for j in range(n)]
        d2 = [s[j + 2] - 2 * s[j + 1] + s[j] for j in range(n)]
        lhs = sum(abs(v) ** 3 for v in d1) ** (2.0 / 3.0)
        rhs = 2.0 * math.sqrt(sum(abs(v) ** 2 for v in d2)) * sum(
            abs(v) ** 6 for v in s
        ) ** (1.0 / 6.0)
        if lhs > rhs + 1e-12:
            violations += 1
    for _ in range(1000):
        n = int(rng.integers(2, 9))
        z = rng.random(n) * np.exp(2j * np.pi * rng.random(n))
        lhs = abs(np.mean(z**n) - np.prod(z))
        rhs = (n - 1) ** 2 * max(
            abs(z[i] - z[j]) ** 2 for i in range(n) for j in range(n)
        )
        if lhs > rhs + 1e-12:
            violations += 1
    elapsed = time.monotonic() - t0
    _report("11 (inequality suites)", elapsed, 10, float(violations), 1.0)

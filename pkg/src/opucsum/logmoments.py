"""Closed forms for logarithmic moments and the log/exp composition maps.

w_k denotes the k-th Fourier coefficient of log w(theta); d_m the Taylor
coefficients of the normalized reciprocal outer function.  Both families are
connected by composition sums over integer compositions, and for finitely
supported sequences every formula here terminates exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import UnsupportedOrder
from .opuc_core import _compositions, _descending_chains
from .verblunsky import VerblunskySequence, rho2

MAX_COMPOSITION_ORDER = 12


def w0_closed(seq: VerblunskySequence) -> float:
    """Classical identity: int log w dtheta/2pi = sum log(1 - |alpha_j|^2)."""
    return sum(math.log(rho2(seq, j)) for j in range(seq.support_length))


def d_direct(seq: VerblunskySequence, m: int, extra_window: int = 0) -> complex:
    """d_m by the multi-fold nested sum; exact for finite support.

    The outer index is clipped at the support length (every later term has a
    vanishing leading factor); `extra_window` widens the clip so tests can
    assert nothing is lost.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    N = seq.support_length
    K = N + extra_window

    def cb(s, t):  # alpha_s conj(alpha_t)
        return seq[s] * seq[t].conjugate()

    def inner(kp, lp):
        return sum((cb(j + lp - 1, j - 1) for j in range(kp + 1)), 0j)

    total = inner(K, m)
    for p in range(1, m):
        for ls in _descending_chains(p, m - 1, lambda s: p - s + 1, p):
            lchain = (m,) + ls
            for ks in _descending_chains(p - 1, K, lambda s: p - s, p):
                prod = 1 + 0j
                for s in range(p):
                    prod *= cb(ks[s] + lchain[s], ks[s] + lchain[s + 1])
                if prod != 0:
                    total += prod * inner(ks[-1], ls[-1])
    return total


def _sum_terms(seq, term, lo=0, hi=None):
    N = seq.support_length
    if hi is None:
        hi = N + 4
    return sum((term(j) for j in range(lo, hi + 1)), 0j)


def w_closed(seq: VerblunskySequence, m: int) -> complex:
    """w_m for 1 <= m <= 4 from the explicit single-infinite-index forms."""
    a = seq.__getitem__
    r2 = lambda j: rho2(seq, j)
    cj = lambda j: a(j).conjugate()

    if m == 1:
        return -_sum_terms(seq, lambda j: a(j) * cj(j - 1))
    if m == 2:
        return -_sum_terms(seq, lambda j: a(j + 1) * r2(j) * cj(j - 1)) + 0.5 * _sum_terms(
            seq, lambda j: a(j) ** 2 * cj(j - 1) ** 2
        )
    if m == 3:
        return (
            -_sum_terms(seq, lambda j: a(j + 2) * r2(j + 1) * r2(j) * cj(j - 1))
            + _sum_terms(seq, lambda j: a(j + 1) ** 2 * r2(j) * cj(j) * cj(j - 1))
            + _sum_terms(seq, lambda j: a(j + 1) * a(j) * r2(j) * cj(j - 1) ** 2)
            - Fraction(1, 3) * _sum_terms(seq, lambda j: a(j) ** 3 * cj(j - 1) ** 3)
        )
    if m == 4:
        return (
            -_sum_terms(
                seq, lambda j: a(j + 3) * r2(j + 2) * r2(j + 1) * r2(j) * cj(j - 1)
            )
            + _sum_terms(
                seq, lambda j: a(j + 2) ** 2 * r2(j + 1) * r2(j) * cj(j + 1) * cj(j - 1)
            )
            + 2
            * _sum_terms(
                seq,
                lambda j: a(j + 2) * a(j + 1) * r2(j + 1) * r2(j) * cj(j) * cj(j - 1),
            )
            + _sum_terms(
                seq, lambda j: a(j + 2) * a(j) * r2(j + 1) * r2(j) * cj(j - 1) ** 2
            )
            - _sum_terms(seq, lambda j: a(j + 1) ** 3 * r2(j) * cj(j) ** 2 * cj(j - 1))
            - _sum_terms(seq, lambda j: a(j + 1) * a(j) ** 2 * r2(j) * cj(j - 1) ** 3)
            - _sum_terms(seq, lambda j: a(j + 1) ** 2 * r2(j) * cj(j - 1) ** 2)
            + 1.5 * _sum_terms(seq, lambda j: a(j + 1) ** 2 * r2(j) ** 2 * cj(j - 1) ** 2)
            + 0.25 * _sum_terms(seq, lambda j: a(j) ** 4 * cj(j - 1) ** 4)
        )
    raise UnsupportedOrder(f"closed forms cover 1 <= m <= 4, got {m}; use the general formula")


def w_from_d(d, k: int) -> complex:
    """w_k = sum over compositions (b_1..b_j) of k of (-1)^j / j * prod d_{b_l}.

    `d` is indexed so that d[i] is the i-th coefficient (entry 0 unused).
    """
    if k > MAX_COMPOSITION_ORDER:
        raise UnsupportedOrder(f"composition sums supported up to k = {MAX_COMPOSITION_ORDER}")
    total = 0j
    for comp in _compositions(k):
        j = len(comp)
        prod = 1 + 0j
        for b in comp:
            prod *= d[b]
        total += float(Fraction((-1) ** j, j)) * prod
    return total


def d_from_w(w, k: int) -> complex:
    """d_k = sum over compositions (b_1..b_j) of k of (-1)^j / j! * prod w_{b_l}."""
    if k > MAX_COMPOSITION_ORDER:
        raise UnsupportedOrder(f"composition sums supported up to k = {MAX_COMPOSITION_ORDER}")
    total = 0j
    for comp in _compositions(k):
        j = len(comp)
        prod = 1 + 0j
        for b in comp:
            prod *= w[b]
        total += float(Fraction((-1) ** j, math.factorial(j))) * prod
    return total


def single_index_property(seq: VerblunskySequence, m: int) -> float:
    """|w_closed(m) - w_from_d(d_direct(1..m), m)|; zero up to round-off."""
    d = [0j] + [d_direct(seq, i) for i in range(1, m + 1)]
    return abs(w_closed(seq, m) - w_from_d(d, m))


def interchange_residual(a, b) -> float:
    """Defect of the double-sum rearrangement
    sum_n a_n sum_{k<=n} b_k + sum_n b_n sum_{k<=n} a_k
      = (sum a)(sum b) + sum a_n b_n."""
    a = [complex(x) for x in a]
    b = [complex(x) for x in b]
    n = max(len(a), len(b))
    a += [0j] * (n - len(a))
    b += [0j] * (n - len(b))
    lhs = sum(a[i] * sum(b[: i + 1]) for i in range(n)) + sum(
        b[i] * sum(a[: i + 1]) for i in range(n)
    )
    rhs = sum(a) * sum(b) + sum(x * y for x, y in zip(a, b))
    return abs(lhs - rhs)


def self_interchange_residual(a) -> float:
    """Defect of sum_n a_n sum_{k<=n} a_k = (sum a)^2 / 2 + (sum a^2) / 2."""
    a = [complex(x) for x in a]
    lhs = sum(a[i] * sum(a[: i + 1]) for i in range(len(a)))
    rhs = 0.5 * sum(a) ** 2 + 0.5 * sum(x * x for x in a)
    return abs(lhs - rhs)


@dataclass
class LogMomentTable:
    """w_0..w_M and d_1..d_M with a provenance tag per entry."""

    order: int
    w: list
    d: list
    provenance: dict = field(default_factory=dict)

    @classmethod
    def closed_form(cls, seq: VerblunskySequence, M: int) -> "LogMomentTable":
        if M > 4:
            raise UnsupportedOrder("closed forms stop at order 4")
        w = [complex(w0_closed(seq), 0.0)] + [w_closed(seq, m) for m in range(1, M + 1)]
        d = [d_direct(seq, m) for m in range(1, M + 1)]
        return cls(M, w, d, {"w": "closed_form", "d": "closed_form"})

    @classmethod
    def general_formula(cls, seq: VerblunskySequence, M: int) -> "LogMomentTable":
        from .general_wm import w_general

        w = [complex(w0_closed(seq), 0.0)] + [w_general(seq, m) for m in range(1, M + 1)]
        d = [d_direct(seq, m) for m in range(1, M + 1)]
        return cls(M, w, d, {"w": "general_formula", "d": "closed_form"})

    @classmethod
    def quadrature(cls, seq: VerblunskySequence, M: int, tol: float = 1e-10) -> "LogMomentTable":
        from .measures import bs_measure, fourier_log, szego_taylor

        mu = bs_measure(seq)
        w = [fourier_log(mu, k, tol) for k in range(M + 1)]
        d = szego_taylor(mu, M, tol) if M >= 1 else []
        return cls(M, w, d, {"w": "quadrature", "d": "quadrature"})

    def round_trip_residual(self) -> float:
        """Residual of the w <-> d composition identities on this table."""
        dvec = [0j] + list(self.d)
        wvec = list(self.w)
        res = 0.0
        for k in range(1, self.order + 1):
            res = max(res, abs(self.w[k] - w_from_d(dvec, k)))
            res = max(res, abs(self.d[k - 1] - d_from_w(wvec, k)))
        return res

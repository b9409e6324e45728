"""Combinatorics for logarithmic moments of arbitrary order.

The general formula expresses w_m through contractions of segment series
indexed by ordered tuples of positive integers.  Enumeration walks, for each
unordered decomposition of m, all distinct permutations and all partitions
into contiguous segments; only the canonical arrangement of each segment
multiset is evaluated (segments sorted by non-increasing length, ties broken
lexicographically), which is exactly the role of the "good" partitions; the
multiplicity factor (j-1)! / prod(l_nu!) then accounts for the orderings.
All combinatorial coefficients are exact rationals until the final series
evaluation.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import FactorizationUnstable, NotNonnegative, UnsupportedOrder
from .measures import TrigWeightPoly
from .verblunsky import VerblunskySequence

MAX_GENERAL_ORDER = 8


# ---------------------------------------------------------------------------
# decompositions, partitions
# ---------------------------------------------------------------------------

def decompositions(m: int, s: int) -> list:
    """Unordered s-tuples of positive integers summing to m, each in
    canonical non-increasing order."""
    out = []

    def rec(remaining, parts, prefix, cap):
        if parts == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        hi = min(cap, remaining - (parts - 1))
        for r in range(hi, 0, -1):
            rec(remaining - r, parts - 1, prefix + [r], r)

    if 1 <= s <= m:
        rec(m, s, [], m)
    return out


@dataclass(frozen=True)
class TuplePartition:
    """Contiguous split of an ordered tuple into segments."""

    parent: tuple
    boundaries: tuple  # indices after which a cut happens, strictly increasing

    @property
    def segments(self) -> tuple:
        segs = []
        prev = 0
        for b in self.boundaries:
            segs.append(self.parent[prev:b])
            prev = b
        segs.append(self.parent[prev:])
        return tuple(segs)

    @property
    def good(self) -> bool:
        lengths = [len(s) for s in self.segments]
        return all(lengths[i] >= lengths[i + 1] for i in range(len(lengths) - 1))

    @property
    def canonical(self) -> bool:
        """Good, and equal-length neighbours sorted non-increasing, so that
        every multiset of segments has exactly one canonical arrangement."""
        segs = self.segments
        for i in range(len(segs) - 1):
            x, y = segs[i], segs[i + 1]
            if len(x) < len(y) or (len(x) == len(y) and x < y):
                return False
        return True


def partitions(tup, j: int | None = None, good_only: bool = False) -> list:
    """All j-partitions of the ordered tuple (all j if j is None)."""
    tup = tuple(tup)
    n = len(tup)
    out = []
    counts = range(1, n + 1) if j is None else [j]
    for parts in counts:
        if not 1 <= parts <= n:
            continue
        for cuts in itertools.combinations(range(1, n), parts - 1):
            p = TuplePartition(tup, cuts)
            if good_only and not p.good:
                continue
            out.append(p)
    return out


# ---------------------------------------------------------------------------
# segment series
# ---------------------------------------------------------------------------

def _segment_l_tuples(segment):
    """Inner summation indices (l_1..l_{n-1}) of a segment series."""
    n = len(segment)
    if n == 1:
        yield ()
        return
    tuples = [(l1,) for l1 in range(1, segment[0] + 1)]
    for nu in range(2, n):
        tuples = [
            t + (l,)
            for t in tuples
            for l in range(1, t[-1] + segment[nu - 1] + 1)
        ]
    yield from tuples


def alpha_series_terms(seq: VerblunskySequence, segment, k_max: int | None = None):
    """Per-outer-index values of the segment series; their sum is the series.

    For segment (r_1..r_n) the k-th value is
      sum over inner indices of  a_{k+r_1-1} conj(a_{k-1})
        * prod_{nu=2..n} a_{k+l_{nu-1}+r_nu-1} conj(a_{k+l_{nu-1}-1}).
    """
    segment = tuple(segment)
    if not segment or any(r < 1 for r in segment):
        raise ValueError("segment must be a nonempty tuple of positive integers")
    if k_max is None:
        k_max = seq.support_length
    n = len(segment)
    ltuples = list(_segment_l_tuples(segment))
    values = []
    for k in range(k_max + 1):
        head = seq[k + segment[0] - 1] * seq[k - 1].conjugate()
        if head == 0:
            values.append(0j)
            continue
        acc = 0j
        for ls in ltuples:
            prod = head
            for nu in range(2, n + 1):
                l_prev = ls[nu - 2]
                prod *= seq[k + l_prev + segment[nu - 1] - 1] * seq[k + l_prev - 1].conjugate()
                if prod == 0:
                    break
            acc += prod
        values.append(acc)
    return values


def alpha_series(seq: VerblunskySequence, segment, k_max: int | None = None) -> complex:
    """Value of the segment series (the contraction of one segment is itself)."""
    return sum(alpha_series_terms(seq, segment, k_max), 0j)


def series_count(segment) -> int:
    """Number of distinct inner series the segment expands into.

    Evaluates the nested summation count
      sum_{l_1=1}^{r_1} sum_{l_2=1}^{l_1+r_2} ... sum_{l_{n-1}=1}^{l_{n-2}+r_{n-1}} 1
    exactly; it must equal the instrumented enumeration of the series terms.
    """
    segment = tuple(segment)
    n = len(segment)
    if n == 1:
        return 1

    @lru_cache(maxsize=None)
    def ways(nu, prev):
        # number of admissible (l_nu..l_{n-1}) given l_{nu-1} = prev
        if nu == n:
            return 1
        return sum(ways(nu + 1, l) for l in range(1, prev + segment[nu - 1] + 1))

    return sum(ways(2, l1) for l1 in range(1, segment[0] + 1))


def enumerated_series_count(seq_ignored, segment) -> int:
    """Instrumented count straight from the series enumeration."""
    return sum(1 for _ in _segment_l_tuples(segment))


# ---------------------------------------------------------------------------
# the general w_m formula
# ---------------------------------------------------------------------------

def _distinct_permutations(multiset):
    return sorted(set(itertools.permutations(multiset)))


def _segment_multiset_terms(m: int):
    """Yield (coefficient, segment_tuple_list) pairs for w_m.

    Coefficient is the exact rational (-1)^s (j-1)! / prod(l_nu!), where s is
    the total number of parts and l_nu are multiplicities of equal segments.
    """
    for s in range(1, m + 1):
        sign = (-1) ** s
        for r in decompositions(m, s):
            for sigma in _distinct_permutations(r):
                for part in partitions(sigma):
                    if not part.canonical:
                        continue
                    segs = part.segments
                    j = len(segs)
                    mult = Fraction(math.factorial(j - 1))
                    for _, group in itertools.groupby(segs):
                        mult /= math.factorial(sum(1 for _ in group))
                    yield sign * mult, segs


def w_general(seq: VerblunskySequence, m: int) -> complex:
    """w_m by the general contraction formula; finite support required."""
    if m < 1:
        raise ValueError("need m >= 1")
    if m > MAX_GENERAL_ORDER:
        raise UnsupportedOrder(f"general formula budgeted up to m = {MAX_GENERAL_ORDER}")
    k_max = seq.support_length
    term_cache: dict = {}

    def terms_of(segment):
        if segment not in term_cache:
            term_cache[segment] = alpha_series_terms(seq, segment, k_max)
        return term_cache[segment]

    total = 0j
    for coeff, segs in _segment_multiset_terms(m):
        streams = [terms_of(s) for s in segs]
        contraction = 0j
        for k in range(k_max + 1):
            prod = 1 + 0j
            for st in streams:
                prod *= st[k]
                if prod == 0:
                    break
            contraction += prod
        total += float(coeff) * contraction
    return total


@lru_cache(maxsize=None)
def signed_coeff_sum(m: int, s: int) -> Fraction:
    """Exact signed sum of coefficients of the series with 2s factors in w_m."""
    if not 1 <= s <= m:
        raise ValueError("need 1 <= s <= m")
    total = Fraction(0)
    sign = (-1) ** s
    for r in decompositions(m, s):
        for sigma in _distinct_permutations(r):
            for part in partitions(sigma):
                if not part.canonical:
                    continue
                segs = part.segments
                j = len(segs)
                mult = Fraction(math.factorial(j - 1))
                for _, group in itertools.groupby(segs):
                    mult /= math.factorial(sum(1 for _ in group))
                prod = 1
                for seg in segs:
                    prod *= series_count(seg)
                total += sign * mult * prod
    return total


def coeff_sum(m: int, s: int) -> Fraction:
    """Coefficient sums as stated: 1 for s = 1, the closed forms for s = 2,
    and the partition formula for s >= 3 (which carries the sign (-1)^s)."""
    if not 1 <= s <= m:
        raise ValueError("need 1 <= s <= m")
    if s == 1:
        return Fraction(1)
    if s == 2:
        if m % 2 == 1:
            return Fraction(m // 2) * (m + 1)
        return Fraction(m * m - 1, 2)
    return signed_coeff_sum(m, s)


# ---------------------------------------------------------------------------
# cosine powers
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _cos_power_fractions(n: int) -> tuple:
    """Exact cosine coefficients of cos^n theta via the two-step recursion."""
    if n < 0:
        raise ValueError("need n >= 0")
    if n == 0:
        return (Fraction(1),)
    prev = _cos_power_fractions(n - 1)
    half = Fraction(1, 2)
    out = [Fraction(0)] * (n + 1)
    # cos * cos(k theta) = (cos(k-1) + cos(k+1)) / 2; constant term doubles up.
    for k, c in enumerate(prev):
        if c == 0:
            continue
        if k == 0:
            out[1] += c
        else:
            out[k - 1] += half * c
            out[k + 1] += half * c
    return tuple(out)


def cos_power(n: int) -> TrigWeightPoly:
    """cos^n theta as a cosine polynomial."""
    return TrigWeightPoly([float(c) for c in _cos_power_fractions(n)])


def one_minus_cos_power_fractions(n: int) -> tuple:
    """Exact cosine coefficients of (1 - cos theta)^n."""
    out = [Fraction(0)] * (n + 1)
    for l in range(n + 1):
        binom = Fraction(math.comb(n, l))
        for k, c in enumerate(_cos_power_fractions(l)):
            out[k] += (-1) ** l * binom * c
    return tuple(out)


# ---------------------------------------------------------------------------
# Fejer-Riesz factorization
# ---------------------------------------------------------------------------

def _poly_derivative(coeffs):
    return [i * c for i, c in enumerate(coeffs)][1:]


def _horner(coeffs, z):
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _cluster_roots(roots, radius):
    clusters = []
    for r in sorted(roots, key=lambda z: (round(z.real, 12), round(z.imag, 12))):
        for c in clusters:
            if abs(r - c[0] / c[1]) < radius:
                c[0] += r
                c[1] += 1
                break
        else:
            clusters.append([r, 1])
    return [(c[0] / c[1], c[1]) for c in clusters]


def _polish_root(R, center, nu, iterations=60):
    """Newton for a root of multiplicity nu: iterate on the (nu-1)-th derivative."""
    g = list(R)
    for _ in range(nu - 1):
        g = _poly_derivative(g)
    gp = _poly_derivative(g)
    z = complex(center)
    for _ in range(iterations):
        denom = _horner(gp, z)
        if denom == 0:
            break
        step = _horner(g, z) / denom
        z -= step
        if abs(step) < 1e-15 * max(1.0, abs(z)):
            break
    return z


def _polish_circle_angle(P: TrigWeightPoly, theta, nu, iterations=40):
    """Newton on the (nu-1)-th theta-derivative of P for a circle zero of order nu."""

    def deriv(q, t):
        # d^q/dtheta^q sum a_l cos(l theta) = sum a_l l^q cos(l theta + q pi/2)
        return sum(
            a * l**q * math.cos(l * t + q * math.pi / 2.0)
            for l, a in enumerate(P.coeffs)
        )

    t = float(theta)
    for _ in range(iterations):
        denom = deriv(nu, t)
        if denom == 0:
            break
        step = deriv(nu - 1, t) / denom
        t -= step
        if abs(step) < 1e-15:
            break
    return t


def fejer_riesz(P: TrigWeightPoly, grid: int = 4096, tol: float = 1e-10) -> list:
    """Real coefficients b_0..b_k of Q with |Q(e^{i theta})|^2 = P(theta).

    Root-finding on the self-inversive lift of P, with inside-disk roots kept
    and unit-circle roots (necessarily of even multiplicity) halved; a
    pointwise residual gate rejects unstable factorizations.
    """
    coeffs = list(P.coeffs)
    while coeffs and abs(coeffs[-1]) < 1e-15:
        coeffs.pop()
    if not coeffs:
        return [0.0]
    theta_grid = np.linspace(0.0, 2.0 * math.pi, grid, endpoint=False)
    vals = P(theta_grid)
    if vals.min() < -1e-12:
        raise NotNonnegative(f"min P = {vals.min():.3e} on the verification grid")
    k = len(coeffs) - 1
    if k == 0:
        return [math.sqrt(max(coeffs[0], 0.0))]

    R = [0j] * (2 * k + 1)
    R[k] += coeffs[0]
    for l in range(1, k + 1):
        R[k - l] += 0.5 * coeffs[l]
        R[k + l] += 0.5 * coeffs[l]

    roots = np.roots(R[::-1])
    theta_star = float(theta_grid[int(np.argmax(vals))])
    z_star = complex(math.cos(theta_star), math.sin(theta_star))
    p_star = float(vals.max())

    last_err = None
    for radius in (1e-9, 1e-6, 1e-3, 2e-2, 8e-2):
        clusters = _cluster_roots(list(roots), radius)
        try:
            q = _build_factor(R, P, clusters, k)
        except FactorizationUnstable as err:
            last_err = err
            continue
        qs = _horner(q, z_star)
        if abs(qs) == 0:
            last_err = FactorizationUnstable("normalization point hit a root")
            continue
        gamma2 = p_star / abs(qs) ** 2
        b = [math.sqrt(gamma2) * c for c in q]
        z = np.exp(1j * theta_grid)
        qq = np.zeros_like(z)
        for c in reversed(b):
            qq = qq * z + c
        resid = float(np.max(np.abs(np.abs(qq) ** 2 - vals)))
        if resid <= tol:
            return b
        last_err = FactorizationUnstable(f"pointwise residual {resid:.3e} > {tol}")
    raise last_err or FactorizationUnstable("no clustering radius succeeded")


def _build_factor(R, P, clusters, k):
    chosen = []
    n_inside = n_circle = 0
    for center, nu in clusters:
        z = _polish_root(R, center, nu)
        dist = abs(abs(z) - 1.0)
        if dist < 1e-6:
            if nu % 2 != 0:
                raise FactorizationUnstable(
                    f"odd multiplicity {nu} at unit-circle root {z:.6f}"
                )
            t = _polish_circle_angle(P, math.atan2(z.imag, z.real), nu)
            z = complex(math.cos(t), math.sin(t))
            chosen.extend([z] * (nu // 2))
            n_circle += nu
        elif abs(z) < 1.0:
            chosen.extend([z] * nu)
            n_inside += nu
    if len(chosen) != k:
        raise FactorizationUnstable(
            f"selected {len(chosen)} roots for a degree-{k} factor"
        )
    q = [1 + 0j]
    for root in chosen:
        q = [0j] + q
        for i in range(len(q) - 1):
            q[i] -= root * q[i + 1]
    imag = max(abs(c.imag) for c in q)
    if imag > 1e-8 * max(1.0, max(abs(c) for c in q)):
        raise FactorizationUnstable(f"factor has imaginary residue {imag:.3e}")
    return [c.real for c in q]


# ---------------------------------------------------------------------------
# shift-operator norm identities
# ---------------------------------------------------------------------------

def _poly_mul(p, q):
    out = [0.0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _binom_power(sign, k):
    """(S + sign)^k as shift-polynomial coefficients, constant term first."""
    p = [1.0]
    for _ in range(k):
        p = _poly_mul(p, [sign, 1.0])
    return p


def _apply(seq, coeffs):
    n = seq.support_length
    return [sum(c * seq[j + l] for l, c in enumerate(coeffs)) for j in range(n)]


def _sq(vec):
    return sum(abs(v) ** 2 for v in vec)


def _mono(power):
    return [0.0] * power + [1.0]


def _mono_diff(p, q):
    out = [0.0] * (max(p, q) + 1)
    out[p] += 1.0
    out[q] -= 1.0
    return out


def shift_identity_residual(seq: VerblunskySequence, identity_id: str, **params) -> float:
    """|LHS - RHS| of a named norm identity on a finitely supported sequence.

    identity_id one of '5.1' (pure difference powers, parameter k),
    '5.2_both' (mixed (S-1)/(S+1) powers, parameters m and k),
    '5.16' (two-factor monomial differences, parameters m, n, p, q),
    '5.18' (factorized trig weights, parameter P).
    """
    if identity_id == "5.1":
        k = params["k"]
        res = []
        lhs = _sq(_apply(seq, _binom_power(-1.0, k)))
        rhs = sum(
            (-1) ** (l + lp - 1)
            * math.comb(k, l)
            * math.comb(k, lp)
            * _sq(_apply(seq, _mono_diff(k - l, k - lp)))
            for l in range(k + 1)
            for lp in range(l + 1, k + 1)
        )
        res.append(abs(lhs - rhs))
        lhs = _sq(_apply(seq, _binom_power(1.0, k)))
        rhs = 2**k * sum(
            math.comb(k, l) * _sq(_apply(seq, _mono(k - l))) for l in range(k + 1)
        ) - sum(
            math.comb(k, l)
            * math.comb(k, lp)
            * _sq(_apply(seq, _mono_diff(k - l, k - lp)))
            for l in range(k + 1)
            for lp in range(l + 1, k + 1)
        )
        res.append(abs(lhs - rhs))
        poly = params.get("poly")
        if poly is not None:
            # general shift polynomial P(S): constant term first, real coeffs
            coeffs = [float(c) for c in poly]
            lhs = _sq(_apply(seq, coeffs))
            rhs = sum(coeffs) * sum(
                c * _sq(_apply(seq, _mono(l))) for l, c in enumerate(coeffs)
            ) - sum(
                coeffs[l] * coeffs[lp] * _sq(_apply(seq, _mono_diff(l, lp)))
                for l in range(len(coeffs))
                for lp in range(l + 1, len(coeffs))
            )
            res.append(abs(lhs - rhs))
        return max(res)

    if identity_id == "5.2_both":
        m, k = params["m"], params["k"]
        if m == 0:
            # Both mixed-power displays collapse to the even-difference
            # identity; the alternating-signs form alone survives the limit.
            op = _poly_mul(_binom_power(-1.0, k), _binom_power(1.0, k))
            lhs = _sq(_apply(seq, op))
            rhs = sum(
                (-1) ** (l + lp - 1)
                * math.comb(k, l)
                * math.comb(k, lp)
                * _sq(_apply(seq, _mono_diff(2 * (k - l), 2 * (k - lp))))
                for l in range(k + 1)
                for lp in range(l + 1, k + 1)
            )
            return abs(lhs - rhs)
        res = []
        op = _poly_mul(_binom_power(-1.0, m + k), _binom_power(1.0, k))
        lhs = _sq(_apply(seq, op))
        rhs = 0.0
        for p in range(m + 1):
            for pp in range(p + 1, m + 1):
                for l in range(k + 1):
                    for lp in range(l + 1, k + 1):
                        op2 = _poly_mul(
                            _mono_diff(m - p, m - pp),
                            _mono_diff(2 * (k - l), 2 * (k - lp)),
                        )
                        rhs += (
                            (-1) ** (p + pp + l + lp)
                            * math.comb(m, p)
                            * math.comb(m, pp)
                            * math.comb(k, l)
                            * math.comb(k, lp)
                            * _sq(_apply(seq, op2))
                        )
        res.append(abs(lhs - rhs))
        op = _poly_mul(_binom_power(1.0, m + k), _binom_power(-1.0, k))
        lhs = _sq(_apply(seq, op))
        rhs = 0.0
        for p in range(m + 1):
            for l in range(k + 1):
                for lp in range(l + 1, k + 1):
                    op2 = _poly_mul(
                        _mono(m - p), _mono_diff(2 * (k - l), 2 * (k - lp))
                    )
                    rhs += (
                        2**m
                        * (-1) ** (l + lp - 1)
                        * math.comb(m, p)
                        * math.comb(k, l)
                        * math.comb(k, lp)
                        * _sq(_apply(seq, op2))
                    )
        for p in range(m + 1):
            for pp in range(p + 1, m + 1):
                for l in range(k + 1):
                    for lp in range(l + 1, k + 1):
                        op2 = _poly_mul(
                            _mono_diff(m - p, m - pp),
                            _mono_diff(2 * (k - l), 2 * (k - lp)),
                        )
                        rhs += (
                            (-1) ** (l + lp)
                            * math.comb(m, p)
                            * math.comb(m, pp)
                            * math.comb(k, l)
                            * math.comb(k, lp)
                            * _sq(_apply(seq, op2))
                        )
        res.append(abs(lhs - rhs))
        return max(res)

    if identity_id == "5.16":
        m, n, p, q = params["m"], params["n"], params["p"], params["q"]
        lhs = _sq(_apply(seq, _poly_mul(_mono_diff(m, n), _mono_diff(p, q))))
        rhs = (
            _sq(_apply(seq, _poly_mul(_mono(m), _mono_diff(p, q))))
            + _sq(_apply(seq, _poly_mul(_mono(n), _mono_diff(p, q))))
            + _sq(_apply(seq, _poly_mul(_mono_diff(m, n), _mono(p))))
            + _sq(_apply(seq, _poly_mul(_mono_diff(m, n), _mono(q))))
            - _sq(_apply(seq, _mono_diff(m + p, n + q)))
            - _sq(_apply(seq, _mono_diff(m + q, n + p)))
        )
        return abs(lhs - rhs)

    if identity_id == "5.18":
        P = params["P"]
        b = fejer_riesz(P)
        k = len(b) - 1
        lhs = _sq(_apply(seq, b))
        bdy = 0.0
        for l in range(k + 1):
            for lp in range(l + 1, k + 1):
                inner = sum(
                    abs(seq[j + lp - l] - seq[j]) ** 2 for j in range(l)
                ) - sum(abs(seq[j]) ** 2 for j in range(l, lp))
                bdy += b[l] * b[lp] * inner
        # The displayed boundary omits the head sums that the shifted norms
        # leave behind; without them the identity fails on any sequence with
        # a nonzero leading entry.
        head = [sum(abs(seq[j]) ** 2 for j in range(l)) for l in range(k + 1)]
        bdy -= sum(b[l] ** 2 * head[l] for l in range(k + 1))
        bdy -= 2.0 * sum(
            b[l] * b[lp] * head[l] for l in range(k + 1) for lp in range(l + 1, k + 1)
        )
        rhs = bdy - 0.5 * sum(
            a_l * _sq(_apply(seq, _mono_diff(l, 0)))
            for l, a_l in enumerate(P.coeffs)
            if l >= 1
        )
        return abs(lhs - rhs)

    raise ValueError(f"unknown identity id {identity_id!r}")


# ---------------------------------------------------------------------------
# general sum rule and the coefficient condition
# ---------------------------------------------------------------------------

def general_sum_rule(seq: VerblunskySequence, P: TrigWeightPoly, tol: float = 1e-10) -> dict:
    """Verify int P log w dtheta/2pi = a_0 w_0 + sum a_l Re(w_l) with w_l from
    the general formula."""
    from .logmoments import w0_closed
    from .measures import bs_measure, integrate_Z

    n = P.degree
    if n > MAX_GENERAL_ORDER:
        raise UnsupportedOrder(f"weight degree {n} exceeds the general-formula budget")
    terms = [("a0 * w0", P.coeffs[0] * w0_closed(seq))]
    for l in range(1, n + 1):
        if P.coeffs[l] == 0:
            continue
        terms.append((f"a{l} * Re(w{l})", P.coeffs[l] * w_general(seq, l).real))
    rhs = sum(v for _, v in terms)
    lhs = integrate_Z(bs_measure(seq), P, tol)
    return {
        "lhs": lhs,
        "rhs": rhs,
        "residual": abs(lhs - rhs),
        "terms": terms,
    }


def condition_559_residuals(coeffs) -> list:
    """Residuals of a_0 / s = sum_{l=s}^n a_l T_{l,s} for s = 1..n.

    T_{l,s} is the exact signed coefficient sum of the 2s-factor series in
    w_l; exact rational arithmetic is used whenever the input coefficients
    are rationals.
    """
    exact = all(isinstance(c, (int, Fraction)) for c in coeffs)
    coeffs = [Fraction(c) if exact else float(c) for c in coeffs]
    n = len(coeffs) - 1
    out = []
    for s in range(1, n + 1):
        acc = Fraction(0) if exact else 0.0
        for l in range(s, n + 1):
            t = signed_coeff_sum(l, s)
            acc += coeffs[l] * (t if exact else float(t))
        target = coeffs[0] / s if exact else coeffs[0] / s
        out.append((s, abs(target - acc)))
    return out


def check_condition_559(P: TrigWeightPoly) -> list:
    """Per-s residual table for an arbitrary cosine polynomial (diagnostic)."""
    return [(s, float(r)) for s, r in condition_559_residuals(list(P.coeffs))]


def check_conjecture_519(n: int) -> dict:
    """Evidence report for the coefficient condition on (1 - cos theta)^n.

    Residuals are computed in exact rational arithmetic; the report states
    values, never truth.  The binomial-split column evaluates the condition
    through the even/odd cosine-power expansion route.
    """
    if n > MAX_GENERAL_ORDER:
        raise UnsupportedOrder(f"budget stops at n = {MAX_GENERAL_ORDER}")
    coeffs = one_minus_cos_power_fractions(n)
    direct = condition_559_residuals(list(coeffs))

    split = []
    for s in range(1, n + 1):
        lhs = Fraction(0)
        for l in range(0, n + 1, 2):
            lhs += math.comb(n, l) * _cos_power_fractions(l)[0]
        lhs /= s
        rhs = Fraction(0)
        for nu in range(s, n + 1):
            t = signed_coeff_sum(nu, s)
            acc = Fraction(0)
            for l in range(nu, n + 1):
                if (l - nu) % 2 == 0:
                    row = _cos_power_fractions(l)
                    acc += (-1) ** l * math.comb(n, l) * row[nu]
            rhs += acc * t
        split.append((s, abs(lhs - rhs)))

    return {
        "n": n,
        "condition_residuals": [(s, float(r)) for s, r in direct],
        "binomial_split_residuals": [(s, float(r)) for s, r in split],
        "exact_zero": all(r == 0 for _, r in direct),
        "paper_verified_range": n <= 4,
    }

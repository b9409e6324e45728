"""Monic polynomials on the unit circle and four routes to their coefficients.

The polynomial Phi_n is represented by its coefficient vector
(a_{n,0}, ..., a_{n,n-1}, 1), constant term first.  Four independent
formulas compute an individual coefficient a_{n,m}:

  * RECURSION  -- coefficient-level form of the degree recursion (default),
  * BRICKS     -- nested sums over brick values G(k, l), in both of the two
                  displayed index orderings,
  * BETA_CHAIN -- nested sums over products conj(alpha_s) alpha_t only,
  * GZ         -- sum over integer compositions with strictly separated
                  chain indices (the Golinskii-Zlatos form).

The last three are verification-grade: they exist to cross-check the
recursion, not to be fast.
"""

from __future__ import annotations

import enum

from .verblunsky import VerblunskySequence


class Method(enum.Enum):
    RECURSION = "recursion"
    BRICKS = "bricks"
    BETA_CHAIN = "beta_chain"
    GZ = "gz"


class MonicOpucPolynomial:
    """Degree-n monic polynomial, coefficients stored constant-term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [complex(c) for c in coeffs]
        if not coeffs or coeffs[-1] != 1:
            raise ValueError("polynomial must be monic")
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __eq__(self, other):
        return isinstance(other, MonicOpucPolynomial) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"MonicOpucPolynomial({list(self.coeffs)!r})"


def build_polynomials(seq: VerblunskySequence, n: int) -> list:
    """Phi_0 ... Phi_n via the degree recursion.

    Phi_{k+1}(z) = z Phi_k(z) - conj(alpha_k) Phi_k*(z), Phi_0 = 1.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    polys = [[1 + 0j]]
    for k in range(n):
        phi = polys[-1]
        star = [c.conjugate() for c in reversed(phi)]
        ak = seq[k].conjugate()
        nxt = [0j] + list(phi)
        for i, c in enumerate(star):
            nxt[i] -= ak * c
        polys.append(nxt)
    return [MonicOpucPolynomial(p) for p in polys]


def reversed_poly(poly: MonicOpucPolynomial) -> list:
    """Coefficients of Phi_n*(z) = z^n conj(Phi_n(1/conj(z))), constant first."""
    return [c.conjugate() for c in reversed(poly.coeffs)]


def eval_poly(coeffs, z: complex) -> complex:
    """Horner evaluation, constant term first."""
    acc = 0j
    for c in reversed(list(coeffs)):
        acc = acc * z + c
    return acc


def brick_G(seq: VerblunskySequence, k: int, l: int) -> complex:
    """G(k, l) = -conj(a_{l-1}) + sum_{j<k} conj(a_{j+l}) a_j
                 - conj(a_l) * sum_{1<=j<l} a_j conj(a_{j-1}).

    Accepts k >= 0; empty sums are zero.
    """
    if l < 1 or k < 0:
        raise ValueError("brick indices need k >= 0 and l >= 1")
    total = -seq[l - 1].conjugate()
    for j in range(k):
        total += seq[j + l].conjugate() * seq[j]
    tail = sum((seq[j] * seq[j - 1].conjugate() for j in range(1, l)), 0j)
    return total - seq[l].conjugate() * tail


def _descending_chains(first_lo, first_hi, lo_of_depth, depth):
    """Tuples (x_1..x_depth) with x_1 in [first_lo, first_hi] and
    x_s in [lo_of_depth(s), x_{s-1} - 1].

    One audited implementation of the empty-range conventions drives every
    nested-sum formula in this module.
    """
    if depth == 0:
        yield ()
        return
    for x1 in range(first_lo, first_hi + 1):
        if depth == 1:
            yield (x1,)
            continue
        stack = [(x1,)]
        while stack:
            prefix = stack.pop()
            s = len(prefix) + 1
            lo = lo_of_depth(s)
            for x in range(lo, prefix[-1]):
                ext = prefix + (x,)
                if len(ext) == depth:
                    yield ext
                else:
                    stack.append(ext)


def _bricks(seq, k0, l0, l_outer_first):
    """a_{k0+l0, k0} for k0 >= 1 via the brick expansion.

    The two displayed orderings differ only in which chain is iterated in the
    outer loop; both are exposed so tests can assert they agree.
    """
    beta = lambda s, t: seq[s].conjugate() * seq[t]
    total = brick_G(seq, k0, l0)
    for p in range(1, l0):
        l_chains = list(_descending_chains(p, l0 - 1, lambda s: p - s + 1, p))
        k_chains = list(_descending_chains(p, k0 - 1, lambda s: p - s + 1, p))
        if l_outer_first:
            pairs = ((ls, ks) for ls in l_chains for ks in k_chains)
        else:
            pairs = ((ls, ks) for ks in k_chains for ls in l_chains)
        for ls, ks in pairs:
            lchain = (l0,) + ls
            prod = 1 + 0j
            for s in range(p):
                prod *= beta(ks[s] + lchain[s], ks[s] + lchain[s + 1])
            total += prod * brick_G(seq, ks[-1], ls[-1])
    return total


def _beta_chain(seq, k0, l0):
    """a_{k0+l0, k0} via the expansion whose inner sum reaches the index -1
    convention value; valid for every k0 >= 0."""
    beta = lambda s, t: seq[s].conjugate() * seq[t]

    def inner(kp, lp):
        return sum((beta(j + lp - 1, j - 1) for j in range(kp + 1)), 0j)

    total = inner(k0, l0)
    for p in range(1, l0):
        l_chains = _descending_chains(p, l0 - 1, lambda s: p - s + 1, p)
        for ls in l_chains:
            lchain = (l0,) + ls
            for ks in _descending_chains(p - 1, k0 - 1, lambda s: p - s, p):
                prod = 1 + 0j
                for s in range(p):
                    prod *= beta(ks[s] + lchain[s], ks[s] + lchain[s + 1])
                total += prod * inner(ks[-1], ls[-1])
    return total


def _compositions(total):
    """Ordered tuples of positive integers summing to `total`."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first,) + rest


def _gz(seq, k0, l0):
    """a_{k0+l0, k0} as a sum over compositions of l0 with separated chains."""
    total = 0j
    for comp in _compositions(l0):
        j = len(comp)

        def recurse(i, hi):
            # k_i ranges over [comp[i]-1, hi]; deeper indices sit below
            # k_i - comp[i].
            acc = 0j
            for k in range(comp[i] - 1, hi + 1):
                term = seq[k].conjugate() * seq[k - comp[i]]
                if i + 1 == j:
                    acc += term
                else:
                    acc += term * recurse(i + 1, k - comp[i] - 1)
            return acc

        total += recurse(0, k0 + l0 - 1)
    return total


def coefficient(
    seq: VerblunskySequence, n: int, m: int, method: Method = Method.RECURSION
) -> complex:
    """The coefficient a_{n,m} of z^m in Phi_n.

    All four methods agree; m = n gives 1 and m = 0 gives -conj(alpha_{n-1}).
    """
    if m > n or m < 0:
        raise IndexError(f"need 0 <= m <= n, got (n, m) = ({n}, {m})")
    if m == n:
        return 1 + 0j
    if method is Method.RECURSION:
        return build_polynomials(seq, n)[n].coeffs[m]
    k0, l0 = m, n - m
    if method is Method.BETA_CHAIN:
        return _beta_chain(seq, k0, l0)
    if method is Method.GZ:
        return _gz(seq, k0, l0)
    if method is Method.BRICKS:
        if k0 == 0:
            # The brick expansion needs k0 >= 1 (its k-chains are empty at
            # k0 = 0 while G(0, l0) retains a spurious tail); the value there
            # is forced by the recursion base.
            return -seq[n - 1].conjugate()
        return _bricks(seq, k0, l0, l_outer_first=True)
    raise ValueError(f"unknown method {method!r}")


def coefficient_bricks_variant(seq: VerblunskySequence, n: int, m: int) -> complex:
    """The brick expansion iterated k-chain-outermost (the second displayed
    ordering); equal to the BRICKS value."""
    if m > n or m < 0:
        raise IndexError(f"need 0 <= m <= n, got (n, m) = ({n}, {m})")
    if m == n:
        return 1 + 0j
    if m == 0:
        return -seq[n - 1].conjugate()
    return _bricks(seq, m, n - m, l_outer_first=False)

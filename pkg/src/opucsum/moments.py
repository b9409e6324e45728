"""Transforms connecting polynomial coefficients, norming constants and
trigonometric moments.

The workhorse is the lower unitriangular matrix C_{n+1} whose columns hold
the coefficient vectors of Phi_n, ..., Phi_0 (highest degree first).  Its
inverse carries the entries b_{k,l}; a cofactor-expansion formula for the
same entries is kept as a small-order test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .opuc_core import build_polynomials
from .verblunsky import VerblunskySequence, rho2


@dataclass(frozen=True)
class LowerUnitriangular:
    """Entries b_{k,l}, 0 <= l <= k <= n, with b_{k,k} = 1."""

    order: int
    _b: tuple

    def b(self, k: int, l: int) -> complex:
        if not 0 <= l <= k <= self.order:
            raise IndexError(f"need 0 <= l <= k <= {self.order}")
        return self._b[k][l]


def coefficient_matrix(seq: VerblunskySequence, n: int) -> np.ndarray:
    """C_{n+1}: row i, column j holds the z^{n-i} coefficient of Phi_{n-j}."""
    polys = build_polynomials(seq, n)
    C = np.zeros((n + 1, n + 1), dtype=complex)
    for j in range(n + 1):
        deg = n - j
        for i in range(j, n + 1):
            C[i, j] = polys[deg].coeffs[n - i]
    return C


def b_inverse(seq: VerblunskySequence, n: int) -> LowerUnitriangular:
    """All entries b_{k,l} for 0 <= l <= k <= n by forward substitution."""
    C = coefficient_matrix(seq, n)
    B = np.eye(n + 1, dtype=complex)
    for j in range(n + 1):
        # Solve C x = e_j column by column; C is lower unitriangular.
        for i in range(j + 1, n + 1):
            B[i, j] = -np.dot(C[i, j:i], B[j:i, j])
    rows = []
    for k in range(n + 1):
        rows.append(tuple(B[n - l, n - k] for l in range(k + 1)))
    return LowerUnitriangular(n, tuple(rows))


def b_determinant(seq: VerblunskySequence, k: int, l: int) -> complex:
    """Cofactor-form oracle for b_{k,l} (small k - l only)."""
    if l == k:
        return 1 + 0j
    size = k - l
    polys = build_polynomials(seq, k)

    def a(n, m):
        return polys[n].coeffs[m]

    M = np.zeros((size, size), dtype=complex)
    for i in range(1, size + 1):
        for j in range(1, size + 1):
            if j <= i:
                M[i - 1, j - 1] = a(k - j + 1, k - i)
            elif j == i + 1:
                M[i - 1, j - 1] = 1.0
    return (-1) ** size * complex(np.linalg.det(M))


def kappa(seq: VerblunskySequence, n: int) -> float:
    """Norming constant prod_{j<n} (1 - |alpha_j|^2)^{-1/2}; kappa_0 = 1."""
    acc = 1.0
    for j in range(n):
        acc *= rho2(seq, j)
    return acc ** -0.5


def kappa_inv2(seq: VerblunskySequence, n: int) -> float:
    acc = 1.0
    for j in range(n):
        acc *= rho2(seq, j)
    return acc


def moment_c(seq: VerblunskySequence, n: int) -> complex:
    """Moment c_n = int e^{-in theta} dmu, n >= 1, from the b-matrix."""
    if n <= 0:
        raise IndexError("moment_c is defined for n >= 1; c_0 = 1 by normalization")
    tri = b_inverse(seq, n - 1)
    total = 0j
    for l in range(n):
        total += tri.b(n - 1, l).conjugate() * seq[l] * kappa_inv2(seq, l)
    return total


def verblunsky_identity_residual(seq: VerblunskySequence, n: int, m: int) -> float:
    """Defect of alpha_{m-1} prod_{j=m}^{n-1} (1-|alpha_j|^2)
    = -sum_{k=m}^n b_{k,m} conj(a_{n,n-k})."""
    if not 0 <= m <= n:
        raise IndexError(f"need 0 <= m <= n, got ({n}, {m})")
    tri = b_inverse(seq, n)
    polys = build_polynomials(seq, n)
    lhs = seq[m - 1]
    for j in range(m, n):
        lhs *= rho2(seq, j)
    rhs = 0j
    for k in range(m, n + 1):
        rhs += tri.b(k, m) * polys[n].coeffs[n - k].conjugate()
    return abs(lhs + rhs)


def _b_dot_a(seq: VerblunskySequence, n: int, m: int) -> complex:
    tri = b_inverse(seq, n)
    polys = build_polynomials(seq, n)
    return sum(
        (tri.b(k, m) * polys[n].coeffs[n - k].conjugate() for k in range(m, n + 1)), 0j
    )


def limit_diagnostics(seq: VerblunskySequence, m: int) -> dict:
    """Finite-n values of sum_k b_{k,m} conj(a_{n,n-k}) against their limit.

    For finitely supported sequences the limit is attained exactly once n
    reaches the support length: the sums equal
    -alpha_{m-1} prod_{j>=m} (1-|alpha_j|^2) for every n >= N.
    The reported ratio divides by the m = 0 value (the squared-norm limit).
    """
    N = seq.support_length
    ns = [max(N, m), max(N, m) + 1, max(N, m) + 2]
    values = {n: _b_dot_a(seq, n, m) for n in ns}
    limit = -seq[m - 1]
    for j in range(m, N):
        limit *= rho2(seq, j)
    theta_w = kappa_inv2(seq, N)  # prod over the whole support
    ratio = limit / theta_w if theta_w else complex("nan")
    return {
        "m": m,
        "values": values,
        "limit": limit,
        "ratio_limit": ratio,
        "max_defect": max(abs(v - limit) for v in values.values()),
    }

"""Bernstein-Szego measures and the quadrature oracles built on them.

For a finitely supported coefficient sequence of length N the measure is
purely absolutely continuous with weight

    w(theta) = prod_{j<N} (1 - |alpha_j|^2) / |Phi_N*(e^{i theta})|^2,

strictly positive on the circle.  All integrals are computed with the
uniform trapezoid rule (spectrally accurate here: every integrand is
analytic and 2*pi-periodic), doubling the grid until two successive
estimates agree to the requested tolerance.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

import numpy as np

from .errors import NoConvergence
from .opuc_core import build_polynomials, reversed_poly
from .verblunsky import VerblunskySequence, rho2

_MIN_GRID = 256
_MAX_GRID = 2**20
DEFAULT_TOL = 1e-10


def _max_grid() -> int:
    cap = os.environ.get("OPUC_MAX_GRID")
    if cap:
        return min(_MAX_GRID, int(cap))
    return _MAX_GRID


@dataclass(frozen=True)
class TrigWeightPoly:
    """Real cosine polynomial P(theta) = sum_l a_l cos(l theta)."""

    coeffs: tuple

    def __init__(self, coeffs):
        object.__setattr__(self, "coeffs", tuple(float(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, theta):
        theta = np.asarray(theta, dtype=float)
        acc = np.zeros_like(theta)
        for l, a in enumerate(self.coeffs):
            acc = acc + a * np.cos(l * theta)
        return acc

    def vanishes_at_zero(self, tol: float = 1e-12) -> bool:
        return abs(sum(self.coeffs)) <= tol

    def is_nonnegative(self, grid: int = 4096, tol: float = 1e-12) -> bool:
        theta = np.linspace(0.0, 2.0 * math.pi, grid, endpoint=False)
        return bool(self(theta).min() >= -tol)

    def szego_admissible(self, grid: int = 4096, tol: float = 1e-12) -> bool:
        return self.vanishes_at_zero(tol) and self.is_nonnegative(grid, tol)

    def __mul__(self, other):
        if isinstance(other, TrigWeightPoly):
            # cos a cos b = (cos(a+b) + cos(a-b)) / 2
            out = [0.0] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += 0.5 * a * b
                    out[abs(i - j)] += 0.5 * a * b
            return TrigWeightPoly(out)
        return TrigWeightPoly([other * c for c in self.coeffs])

    __rmul__ = __mul__

    def __add__(self, other):
        n = max(self.degree, other.degree) + 1
        out = [0.0] * n
        for i, a in enumerate(self.coeffs):
            out[i] += a
        for i, b in enumerate(other.coeffs):
            out[i] += b
        return TrigWeightPoly(out)


@dataclass
class BernsteinSzegoMeasure:
    """Weight data for a finitely supported coefficient sequence."""

    seq: VerblunskySequence
    order: int
    phi_star: tuple
    norm: float  # prod_{j<N} (1 - |alpha_j|^2)
    _cache: dict = field(default_factory=dict, repr=False)

    def weight_on(self, theta) -> np.ndarray:
        """Weight evaluated on an array of angles."""
        theta = np.asarray(theta, dtype=float)
        z = np.exp(1j * theta)
        acc = np.zeros_like(z)
        for c in reversed(self.phi_star):
            acc = acc * z + c
        return self.norm / np.abs(acc) ** 2

    def _grid_values(self, m: int, fn):
        key = (m, fn)
        if key not in self._cache:
            theta = 2.0 * math.pi * np.arange(m) / m
            w = self.weight_on(theta)
            if fn == "w":
                self._cache[key] = (theta, w)
            else:
                self._cache[key] = (theta, np.log(w))
        return self._cache[key]


def bs_measure(seq: VerblunskySequence) -> BernsteinSzegoMeasure:
    n = seq.support_length
    phi_n = build_polynomials(seq, n)[n]
    norm = 1.0
    for j in range(n):
        norm *= rho2(seq, j)
    return BernsteinSzegoMeasure(seq, n, tuple(reversed_poly(phi_n)), norm)


def weight(measure: BernsteinSzegoMeasure, theta: float) -> float:
    """Pointwise weight value; strictly positive."""
    return float(measure.weight_on(np.array([theta]))[0])


def _refine(measure, integrand_key, eval_sum, tol):
    """Grid-doubling driver.  eval_sum(theta, values) -> complex estimate."""
    prev = None
    m = _MIN_GRID
    cap = _max_grid()
    while m <= cap:
        theta, vals = measure._grid_values(m, integrand_key)
        est = eval_sum(theta, vals)
        if prev is not None and abs(est - prev) < tol:
            return est
        prev = est
        m *= 2
    raise NoConvergence(
        f"quadrature did not reach tol={tol} below {cap} grid points"
    )


def fourier_log(measure: BernsteinSzegoMeasure, k: int, tol: float = DEFAULT_TOL) -> complex:
    """k-th Fourier coefficient of log w: int e^{-ik theta} log w dtheta/2pi."""
    if k < 0:
        return fourier_log(measure, -k, tol).conjugate()

    def eval_sum(theta, logw):
        return complex(np.mean(np.exp(-1j * k * theta) * logw))

    val = _refine(measure, "logw", eval_sum, tol)
    if k == 0:
        return complex(val.real, 0.0)
    return val


def integrate_Z(measure: BernsteinSzegoMeasure, P: TrigWeightPoly, tol: float = DEFAULT_TOL) -> float:
    """int P(theta) log w(theta) dtheta/2pi, directly by quadrature."""

    def eval_sum(theta, logw):
        return complex(np.mean(P(theta) * logw))

    return _refine(measure, "logw", eval_sum, tol).real


def moment_oracle(measure: BernsteinSzegoMeasure, n: int, tol: float = DEFAULT_TOL) -> complex:
    """Trigonometric moment c_n = int e^{-in theta} w(theta) dtheta/2pi."""

    def eval_sum(theta, w):
        return complex(np.mean(np.exp(-1j * n * theta) * w))

    return _refine(measure, "w", eval_sum, tol)


def normalization(measure: BernsteinSzegoMeasure, tol: float = DEFAULT_TOL) -> float:
    """Total mass; equals 1 for a genuine measure."""
    return moment_oracle(measure, 0, tol).real


def szego_taylor(measure: BernsteinSzegoMeasure, M: int, tol: float = DEFAULT_TOL) -> list:
    """d_1 ... d_M from the logarithmic moments.

    log of the normalized reciprocal outer function is -sum_{k>=1} w_k z^k;
    exponentiating the truncated series gives the d's.
    """
    if M < 1:
        raise ValueError("need M >= 1")
    w = [fourier_log(measure, k, tol) for k in range(M + 1)]
    f = [0j] + [-w[k] for k in range(1, M + 1)]
    d = [1 + 0j] + [0j] * M
    for m in range(1, M + 1):
        acc = 0j
        for k in range(1, m + 1):
            acc += k * f[k] * d[m - k]
        d[m] = acc / m
    return d[1:]


def inner_product(measure: BernsteinSzegoMeasure, f_coeffs, g_coeffs, grid: int = 4096) -> complex:
    """<f, g> = int conj(f) g dmu for polynomials given constant-term first."""
    theta = 2.0 * math.pi * np.arange(grid) / grid
    z = np.exp(1j * theta)

    def ev(coeffs):
        acc = np.zeros_like(z)
        for c in reversed(list(coeffs)):
            acc = acc * z + c
        return acc

    vals = np.conj(ev(f_coeffs)) * ev(g_coeffs) * measure.weight_on(theta)
    return complex(np.mean(vals))

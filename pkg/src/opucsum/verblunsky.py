"""Coefficient sequences in the open unit disk.

A sequence is conceptually infinite: entries beyond the stored support are
exactly zero, and the index -1 always reads back the fixed convention value
-1 (it is never stored, so serialization cannot corrupt it).  Indices below
-1 read as zero; they only arise inside clipped combinatorial sums.
"""

from __future__ import annotations

import json
import math

from .errors import BadDecay, OutOfDisk

# Strict disk margin: |a| >= 1 - DISK_GUARD is rejected so rho cannot underflow.
DISK_GUARD = 1e-14


class VerblunskySequence:
    """Finitely supported sequence of disk coefficients.

    Immutable after construction; all operations on it are pure.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries):
        values = [complex(v) for v in entries]
        for j, v in enumerate(values):
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise OutOfDisk(j, v)
            if abs(v) >= 1.0 - DISK_GUARD:
                raise OutOfDisk(j, v)
        while values and values[-1] == 0:
            values.pop()
        self._entries = tuple(values)

    @property
    def entries(self) -> tuple:
        return self._entries

    @property
    def support_length(self) -> int:
        return len(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __getitem__(self, j: int) -> complex:
        if j == -1:
            return -1.0 + 0.0j
        if j < -1 or j >= len(self._entries):
            return 0.0 + 0.0j
        return self._entries[j]

    def __iter__(self):
        return iter(self._entries)

    def __eq__(self, other):
        return isinstance(other, VerblunskySequence) and self._entries == other._entries

    def __hash__(self):
        return hash(self._entries)

    def __repr__(self):
        return f"VerblunskySequence({list(self._entries)!r})"

    def conjugate(self) -> "VerblunskySequence":
        return VerblunskySequence([v.conjugate() for v in self._entries])

    def abs2(self, j: int) -> float:
        """|alpha_j|^2 with the index conventions applied."""
        v = self[j]
        return v.real * v.real + v.imag * v.imag


def make_explicit(values) -> VerblunskySequence:
    """Build a sequence from explicit entries; trailing zeros are trimmed."""
    return VerblunskySequence(values)


def make_geometric(a: complex, lam: float, n: int) -> VerblunskySequence:
    """Entries a * lam**j for 0 <= j < n."""
    if not 0.0 < lam < 1.0:
        raise BadDecay(f"decay ratio must lie in (0, 1), got {lam!r}")
    a = complex(a)
    if abs(a) >= 1.0 - DISK_GUARD:
        raise OutOfDisk(0, a)
    if n < 0:
        raise ValueError("length must be nonnegative")
    return VerblunskySequence([a * lam**j for j in range(n)])


def rho(seq: VerblunskySequence, j: int) -> float:
    """sqrt(1 - |alpha_j|^2); equals 1 beyond the support."""
    if j < 0:
        raise ValueError("rho is defined for indices j >= 0")
    return math.sqrt(1.0 - seq.abs2(j))


def rho2(seq: VerblunskySequence, j: int) -> float:
    """1 - |alpha_j|^2 without the square root."""
    return 1.0 - seq.abs2(j)


def lp_norm(values, p: float) -> float:
    """l^p norm of an iterable of complex numbers."""
    return sum(abs(v) ** p for v in values) ** (1.0 / p)


def apply_shift_poly(seq: VerblunskySequence, coeffs) -> list:
    """Apply sum_l c_l S^l to the one-sided sequence (indices j >= 0).

    S is the left shift, (S a)_j = a_{j+1}.  The result is truncated where it
    becomes identically zero.
    """
    n = seq.support_length
    out = []
    for j in range(n):
        out.append(sum(c * seq[j + l] for l, c in enumerate(coeffs)))
    return out


def _reject_nonfinite(x, what):
    if not math.isfinite(x):
        raise ValueError(f"non-finite value in {what}: {x!r}")
    return x


def from_spec(spec) -> VerblunskySequence:
    """Parse a sequence spec (dict or JSON string).

    Two kinds are accepted:
      {"kind": "explicit", "values": [[re, im], ...]}
      {"kind": "geometric", "a": [re, im], "lambda": x, "n": N}
    NaN/Inf anywhere in the numbers is rejected.
    """
    if isinstance(spec, (str, bytes)):
        spec = json.loads(spec)
    if not isinstance(spec, dict):
        raise ValueError("sequence spec must be a JSON object")
    kind = spec.get("kind")
    if kind == "explicit":
        values = []
        for pair in spec["values"]:
            re, im = pair
            values.append(
                complex(
                    _reject_nonfinite(float(re), "explicit values"),
                    _reject_nonfinite(float(im), "explicit values"),
                )
            )
        return make_explicit(values)
    if kind == "geometric":
        re, im = spec["a"]
        a = complex(
            _reject_nonfinite(float(re), "geometric a"),
            _reject_nonfinite(float(im), "geometric a"),
        )
        lam = _reject_nonfinite(float(spec["lambda"]), "geometric lambda")
        return make_geometric(a, lam, int(spec["n"]))
    raise ValueError(f"unknown sequence spec kind: {kind!r}")


def to_spec(seq: VerblunskySequence) -> dict:
    return {"kind": "explicit", "values": [[v.real, v.imag] for v in seq.entries]}

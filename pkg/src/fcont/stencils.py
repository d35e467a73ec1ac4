"""One-sided finite-difference stencils on equispaced grids.

Weights (a_p^m)_k for the minimal (m+p)-point one-sided approximation of the
m-th derivative with accuracy order p, synthesized by solving the moment
system sum_k w_k k^q = q! delta_{qm}, q = 0..m+p-1, in exact rational
arithmetic.  The backward operator reuses the forward weights; the caller's
(-n)^m scaling supplies the sign.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .hermite import BoundaryDataMatrix

# Test-only negative control: added to the first weight of every stencil
# when nonzero, which must break the convergence-rate acceptance checks.
DEBUG_WEIGHT_PERTURBATION = 0.0


@dataclass(frozen=True)
class StencilSpec:
    """Derivative order m, accuracy order p, and side of the interval."""

    m: int
    p: int
    side: str = "forward"

    def __post_init__(self):
        if self.m < 1 or self.p < 1:
            raise ValueError(f"need m >= 1 and p >= 1, got m={self.m}, p={self.p}")
        if self.m + self.p > 64:
            raise ValueError(f"unsupported stencil: m+p = {self.m + self.p} exceeds 64")
        if self.side not in ("forward", "backward"):
            raise ValueError(f"side must be 'forward' or 'backward', got {self.side!r}")

    @property
    def length(self):
        return self.m + self.p


class Stencil:
    """Synthesized weights for a StencilSpec.

    ``exact_weights`` are the rational solution of the moment system;
    ``weights`` is its float image.  Dimensionless: the caller applies the
    (+-n)^m grid scaling.
    """

    def __init__(self, spec, exact_weights):
        self.spec = spec
        self.exact_weights = tuple(exact_weights)
        weights = np.array([float(w) for w in exact_weights])
        weights.flags.writeable = False
        self.weights = weights

    def __repr__(self):
        ws = ", ".join(str(w) for w in self.exact_weights)
        return f"Stencil(m={self.spec.m}, p={self.spec.p}, {self.spec.side}, [{ws}])"


def _solve_rational(matrix, rhs):
    """Gaussian elimination over Fractions; the moment matrix is invertible."""
    size = len(rhs)
    a = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(size):
        pivot = next(row for row in range(col, size) if a[row][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for row in range(size):
            if row != col and a[row][col] != 0:
                factor = a[row][col]
                a[row] = [v - factor * w for v, w in zip(a[row], a[col])]
    return [a[row][size] for row in range(size)]


@lru_cache(maxsize=None)
def _moment_weights(m, p):
    length = m + p
    matrix = [[Fraction(k ** q) for k in range(length)] for q in range(length)]
    rhs = [Fraction(math.factorial(q)) if q == m else Fraction(0) for q in range(length)]
    weights = _solve_rational(matrix, rhs)
    for q in range(length):
        total = sum(w * k ** q for k, w in enumerate(weights))
        if total != rhs[q]:
            raise AssertionError(f"moment system residual at q={q} for (m={m}, p={p})")
    return tuple(weights)


def make_stencil(spec):
    """Synthesize the stencil for spec (deterministic, exact)."""
    return Stencil(spec, _moment_weights(spec.m, spec.p))


def _apply(exact_weights, values, scale):
    # Exact accumulation: rational weights, float samples promoted exactly,
    # integer (+-n)^m scale, a single rounding at the end.
    if DEBUG_WEIGHT_PERTURBATION:
        delta = Fraction(DEBUG_WEIGHT_PERTURBATION)
        exact_weights = (exact_weights[0] + delta,) + exact_weights[1:]
    total = sum(w * Fraction(float(v)) for w, v in zip(exact_weights, values))
    return float(scale * total)


def boundary_derivatives(samples, n, r, p):
    """Assemble the boundary data matrix from grid samples f_0..f_n.

    Column 0 is (f_0, f_n) exactly; column m holds the one-sided order-p
    estimates of f^(m) at the two endpoints, scaled by (+-n)^m.
    """
    samples = np.asarray(samples, dtype=float)
    if samples.ndim != 1 or len(samples) != n + 1:
        raise ValueError(f"expected {n + 1} samples, got {samples.shape}")
    if r < 0:
        raise ValueError(f"need r >= 0, got {r}")
    if r >= 1 and n + 1 < r + p:
        raise ValueError(f"insufficient samples: need n+1 >= r+p = {r + p}, got {n + 1}")
    entries = np.zeros((2, r + 1))
    entries[0, 0] = samples[0]
    entries[1, 0] = samples[n]
    for m in range(1, r + 1):
        stencil = make_stencil(StencilSpec(m, p))
        length = stencil.spec.length
        entries[0, m] = _apply(stencil.exact_weights, samples[:length], n ** m)
        entries[1, m] = _apply(stencil.exact_weights, samples[n - np.arange(length)], (-n) ** m)
    return BoundaryDataMatrix(entries)

"""End-to-end Fourier continuation approximants for sampled data.

Samples f_0..f_n on [0, 1] are continued to the equispaced grid on [-1, 1)
with the two-point Hermite polynomial, transformed to trigonometric
coefficients, and evaluated as a period-2 interpolant.  Also provides exact
Fourier coefficients of piecewise-polynomial continuations, the oracle used
to measure coefficient decay.
"""

import numpy as np

from .hermite import (BoundaryDataMatrix, ContinuationSpec, combine_coefficients,
                      eval_continuation_factored, hermite_basis)
from .spectral import TrigCoefficients, dft_forward, eval_series, resample
from .stencils import boundary_derivatives


class FcApproximant:
    """Trigonometric interpolant of continued samples.

    Interpolates the original samples at x_j = j/n, j = 0..n-1, and remains
    a real trigonometric polynomial on all of [-1, 1].
    """

    def __init__(self, coefficients, spec, p, n, boundary):
        if coefficients.n != n:
            raise ValueError(f"coefficient length {coefficients.n} != grid half-size {n}")
        self.coefficients = coefficients
        self.spec = spec
        self.p = p
        self.n = n
        self.boundary = boundary

    def __repr__(self):
        return f"FcApproximant(n={self.n}, r={self.spec.r}, p={self.p})"


class PiecewisePolyContinuation:
    """Polynomial pieces of a continuation: left on [-1, 0], right on [0, 1]."""

    def __init__(self, left, right):
        self.left = np.asarray(left, dtype=float)
        self.right = np.asarray(right, dtype=float)
        if not (np.all(np.isfinite(self.left)) and np.all(np.isfinite(self.right))):
            raise ValueError("polynomial coefficients must be finite")


def extend_with_matrix(samples, fhat):
    """Continue samples to the [-1, 1) grid using an explicit boundary matrix.

    Entries j = -n..-1 hold the continuation polynomial at j/n, entries
    j = 0..n-1 the original samples; f_n is recovered at j = -n whenever the
    matrix value column is exact.
    """
    samples = np.asarray(samples, dtype=float)
    n = samples.size - 1
    if n < 2:
        raise ValueError(f"need at least 3 samples, got {samples.size}")
    basis = hermite_basis(fhat.r)
    xs = np.arange(-n, 0) / n
    return np.concatenate([eval_continuation_factored(fhat, basis, xs), samples[:n]])


def discrete_continuation(samples, r, p):
    """Continue samples with the finite-difference boundary matrix."""
    samples = np.asarray(samples, dtype=float)
    n = samples.size - 1
    fmatrix = boundary_derivatives(samples, n, r, p)
    return extend_with_matrix(samples, fmatrix)


def fc_approximate(samples, r, p):
    """Build the interpolating approximant from samples (O(n log n))."""
    samples = np.asarray(samples, dtype=float)
    n = samples.size - 1
    fmatrix = boundary_derivatives(samples, n, r, p)
    coefficients = dft_forward(extend_with_matrix(samples, fmatrix))
    return FcApproximant(coefficients, ContinuationSpec(r), p, n, fmatrix)


def fc_approximate_with_matrix(samples, fhat, p=None):
    """Build the approximant from an explicit (e.g. analytic) boundary matrix."""
    samples = np.asarray(samples, dtype=float)
    n = samples.size - 1
    coefficients = dft_forward(extend_with_matrix(samples, fhat))
    return FcApproximant(coefficients, ContinuationSpec(fhat.r), p, n, fhat)


def evaluate(approx, x):
    """Approximant value at x in [0, 1]."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"approximation domain is [0, 1], got x={x}")
    return eval_series(approx.coefficients, x)


def evaluate_dense(approx, N):
    """Approximant values at z_j = j/N, j = 0..N (fast for power-of-two N)."""
    if N < approx.n:
        raise ValueError(f"undersampling: need N >= n = {approx.n}, got N={N}")
    grid = resample(approx.coefficients, N)
    return np.concatenate([grid[N:], [eval_series(approx.coefficients, 1.0)]])


def continuation_ppoly(fhat, right_coeffs):
    """Piecewise-polynomial continuation of a polynomial right piece."""
    left = combine_coefficients(fhat, hermite_basis(fhat.r))
    return PiecewisePolyContinuation(left, right_coeffs)


def _poly_moments(degree, a, b, k):
    """Integrals I_m = int_a^b x^m exp(-i*pi*k*x) dx for m = 0..degree.

    For k != 0 the recurrence I_m = [x^m e/alpha]_a^b + (m/(i*pi*k)) I_{m-1}
    with alpha = -i*pi*k builds up from I_0; each step divides by alpha, so
    the recursion is stable for |k| >= 1 at the degrees used here.
    """
    moments = np.empty(degree + 1, dtype=np.complex128)
    if k == 0:
        for m in range(degree + 1):
            moments[m] = (b ** (m + 1) - a ** (m + 1)) / (m + 1)
        return moments
    alpha = -1j * np.pi * k
    ea = np.exp(alpha * a)
    eb = np.exp(alpha * b)
    moments[0] = (eb - ea) / alpha
    for m in range(1, degree + 1):
        boundary = (b ** m * eb - a ** m * ea) / alpha
        moments[m] = boundary - (m / alpha) * moments[m - 1]
    return moments


def continuous_coefficient_ppoly(fc, k):
    """Fourier coefficient c_k = (1/2) int_{-1}^{1} f_c(x) exp(-i*pi*k*x) dx."""
    if abs(k) > 10 ** 6:
        raise ValueError(f"mode index {k} out of range")
    left = np.dot(fc.left, _poly_moments(len(fc.left) - 1, -1.0, 0.0, k))
    right = np.dot(fc.right, _poly_moments(len(fc.right) - 1, 0.0, 1.0, k))
    return complex(0.5 * (left + right))

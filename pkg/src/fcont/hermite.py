"""Two-point Hermite continuation polynomials.

A function known through its endpoint derivative values at x = 0 and x = 1
is continued to the left interval [-1, 0] by the unique polynomial of degree
2r+1 that matches all derivatives up to order r at both ends (with the value
at x = -1 taken from x = 1, so the continued function is periodic on [-1, 1]).
The continuation is a linear map of the 2 x (r+1) boundary data matrix and is
realized here in the monomial basis, expanded in exact integer arithmetic.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

# Largest supported smoothness order.  Beyond this the monomial-basis
# coefficients grow past what double precision can usefully evaluate.
R_MAX = 30


@dataclass(frozen=True)
class ContinuationSpec:
    """Continuation parameters: smoothness order r, extension width b."""

    r: int
    b: float = 2.0

    def __post_init__(self):
        if not isinstance(self.r, (int, np.integer)) or self.r < 0:
            raise ValueError(f"smoothness order must be a non-negative integer, got {self.r!r}")
        if self.r > R_MAX:
            raise ValueError(f"unsupported order r={self.r} (maximum {R_MAX})")
        if self.b != 2.0:
            raise ValueError("only extension width b=2 is supported")


class BoundaryDataMatrix:
    """2 x (r+1) matrix of endpoint derivative values.

    Row 0 holds (f(0), f'(0), ..., f^(r)(0)), row 1 the same at x = 1.
    """

    def __init__(self, entries):
        entries = np.array(entries, dtype=float)
        if entries.ndim != 2 or entries.shape[0] != 2 or entries.shape[1] < 1:
            raise ValueError(f"expected a 2 x (r+1) matrix, got shape {entries.shape}")
        if not np.all(np.isfinite(entries)):
            raise ValueError("boundary data entries must be finite")
        entries.flags.writeable = False
        self.entries = entries
        self.r = entries.shape[1] - 1

    @property
    def max_norm(self):
        """Maximum absolute entry."""
        return float(np.max(np.abs(self.entries)))

    def __repr__(self):
        return f"BoundaryDataMatrix(r={self.r}, max_norm={self.max_norm:.3g})"


class HermiteBasisSet:
    """Monomial coefficients of the 2r+2 cardinal basis polynomials.

    ``basis0[m]`` / ``basis1[m]`` hold the ascending monomial coefficients of
    the polynomial that reproduces the m-th derivative at x = 0 / x = -1 and
    annihilates every other endpoint condition.  ``scaled0``/``scaled1`` keep
    the same coefficients multiplied by m! as exact integers; dividing by m!
    happens only in the one conversion to float.
    """

    def __init__(self, r, basis0, basis1, scaled0, scaled1, binomials):
        self.r = r
        self.basis0 = basis0
        self.basis1 = basis1
        self.scaled0 = scaled0
        self.scaled1 = scaled1
        self.binomials = binomials


def binomial(i, j):
    """Exact binomial coefficient C(i, j) for 0 <= j <= i <= 2*R_MAX + 2."""
    if not (0 <= j <= i <= 2 * R_MAX + 2):
        raise ValueError(f"binomial arguments out of range: ({i}, {j})")
    return math.comb(i, j)


def verify_binomial_identity(r, n):
    """Check sum_{k=0}^{n} (-1)^k C(r+1,k) C(r+n-k,r) == 0 exactly."""
    if n < 1 or n > r + 1:
        raise ValueError(f"need 1 <= n <= r+1, got n={n}, r={r}")
    total = sum((-1) ** k * math.comb(r + 1, k) * math.comb(r + n - k, r) for k in range(n + 1))
    return total == 0


def operator_norm_bound(r):
    """Bound 2*C(2r+2, r) on the max-norm amplification of the continuation."""
    if not 0 <= r <= R_MAX:
        raise ValueError(f"unsupported order r={r} (maximum {R_MAX})")
    return float(2 * math.comb(2 * r + 2, r))


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


@lru_cache(maxsize=None)
def hermite_basis(r):
    """Build the degree-(2r+1) cardinal basis for order r.

    The nested binomial sums are expanded symbolically over the integers;
    each coefficient is divided by m! exactly once when converting to float.
    """
    if not isinstance(r, (int, np.integer)) or r < 0:
        raise ValueError(f"smoothness order must be a non-negative integer, got {r!r}")
    if r > R_MAX:
        raise ValueError(f"unsupported order r={r} (maximum {R_MAX})")
    r = int(r)
    width = 2 * r + 2

    scaled0 = []
    scaled1 = []
    for m in range(r + 1):
        # m! * P_m^0 = x^m (1+x)^{r+1} sum_n (-1)^n C(r+n,n) x^n
        series = [(-1) ** n * math.comb(r + n, n) for n in range(r - m + 1)]
        binpow = [math.comb(r + 1, i) for i in range(r + 2)]
        prod = _poly_mul(series, binpow)
        coeffs = [0] * m + prod
        coeffs += [0] * (width - len(coeffs))
        scaled0.append(tuple(coeffs))

        # m! * P_m^1 = (-1)^{r+1} x^{r+1} sum_n C(r+n,n) (1+x)^{m+n}
        acc = [0] * (r + 1)
        for n in range(r - m + 1):
            cn = math.comb(r + n, n)
            for i in range(m + n + 1):
                acc[i] += cn * math.comb(m + n, i)
        sign = (-1) ** (r + 1)
        coeffs = [0] * (r + 1) + [sign * c for c in acc]
        coeffs += [0] * (width - len(coeffs))
        scaled1.append(tuple(coeffs))

    def to_float(scaled):
        arr = np.empty((r + 1, width))
        for m, row in enumerate(scaled):
            fact = math.factorial(m)
            arr[m] = [c / fact for c in row]
        arr.flags.writeable = False
        return arr

    binomials = tuple(tuple(math.comb(i, j) for j in range(i + 1)) for i in range(width + 1))
    return HermiteBasisSet(r, to_float(scaled0), to_float(scaled1),
                           tuple(scaled0), tuple(scaled1), binomials)


def combine_coefficients(fhat, basis):
    """Monomial coefficients of the continuation polynomial for data fhat."""
    if fhat.r != basis.r:
        raise ValueError(f"order mismatch: matrix r={fhat.r}, basis r={basis.r}")
    return fhat.entries[0] @ basis.basis0 + fhat.entries[1] @ basis.basis1


def horner(coeffs, x):
    """Evaluate ascending monomial coefficients at x (scalar or array)."""
    acc = np.zeros_like(np.asarray(x, dtype=float)) + coeffs[-1]
    for c in coeffs[-2::-1]:
        acc = acc * x + c
    return acc


def eval_continuation(fhat, basis, x):
    """Value of the continuation polynomial at x in [-1, 0]."""
    if not -1.0 <= x <= 0.0:
        raise ValueError(f"continuation is defined on [-1, 0], got x={x}")
    return float(horner(combine_coefficients(fhat, basis), x))


def factored_coefficients(fhat, basis):
    """Inner-polynomial coefficients of the factored continuation form.

    The continuation equals (1+x)^{r+1} A(x) + (-x)^{r+1} B(1+x) with A and
    B of degree r; returns their ascending coefficients (a, b).
    """
    r = basis.r
    if fhat.r != r:
        raise ValueError(f"order mismatch: matrix r={fhat.r}, basis r={r}")
    binom = basis.binomials
    a = np.zeros(r + 1)
    b = np.zeros(r + 1)
    for j in range(r + 1):
        for m in range(j + 1):
            c = binom[r + j - m][j - m] / math.factorial(m)
            a[j] += fhat.entries[0][m] * (-1.0) ** (j - m) * c
            b[j] += fhat.entries[1][m] * c
    return a, b


def eval_continuation_factored(fhat, basis, x):
    """Continuation values via the factored form; x may be an array.

    Mathematically identical to eval_continuation; numerically preferable
    near the endpoints, where the exact (1+x)^{r+1} and (-x)^{r+1} zeros
    replace the large cancellations of the monomial expansion.
    """
    a, b = factored_coefficients(fhat, basis)
    x = np.asarray(x, dtype=float)
    u = 1.0 + x
    sign = (-1.0) ** (basis.r + 1)
    return u ** (basis.r + 1) * horner(a, x) + sign * x ** (basis.r + 1) * horner(b, u)


@lru_cache(maxsize=None)
def _endpoint_derivative_exact(r, ell, xi):
    """Exact values of the ell-th basis derivatives at an integer point xi.

    Endpoint evaluation cancels terms that grow like C(2r,r) * (2r+1)!/(r+1)!,
    far past double precision by r ~ 6, so it stays in integer arithmetic.
    Returns ((P_m^0)^(ell)(xi))_m and ((P_m^1)^(ell)(xi))_m as Fractions.
    """
    basis = hermite_basis(r)
    results = []
    for scaled in (basis.scaled0, basis.scaled1):
        vals = []
        for m, coeffs in enumerate(scaled):
            dcoeffs = [coeffs[i + ell] * math.perm(i + ell, ell)
                       for i in range(len(coeffs) - ell)]
            acc = 0
            for c in reversed(dcoeffs):
                acc = acc * xi + c
            vals.append(Fraction(acc, math.factorial(m)))
        results.append(tuple(vals))
    return tuple(results)


def eval_continuation_derivative(fhat, basis, ell, x):
    """ell-th derivative of the continuation polynomial at x in [-1, 0]."""
    if not 0 <= ell <= 2 * basis.r + 1:
        raise ValueError(f"derivative order must satisfy 0 <= ell <= {2 * basis.r + 1}, got {ell}")
    if not -1.0 <= x <= 0.0:
        raise ValueError(f"continuation is defined on [-1, 0], got x={x}")
    if fhat.r != basis.r:
        raise ValueError(f"order mismatch: matrix r={fhat.r}, basis r={basis.r}")
    if x in (0.0, -1.0):
        table0, table1 = _endpoint_derivative_exact(basis.r, ell, int(x))
        total = Fraction(0)
        for m in range(basis.r + 1):
            total += Fraction(fhat.entries[0][m]) * table0[m]
            total += Fraction(fhat.entries[1][m]) * table1[m]
        return float(total)
    coeffs = combine_coefficients(fhat, basis)
    dcoeffs = np.array([coeffs[i + ell] * math.perm(i + ell, ell)
                        for i in range(len(coeffs) - ell)])
    return float(horner(dcoeffs, x))


def s_exactness(fhat, f, tol):
    """Largest s with columns 0..s of fhat matching f entrywise within tol.

    Returns -1 when already the value column differs, r when all agree.
    """
    if fhat.r != f.r:
        raise ValueError(f"order mismatch: {fhat.r} vs {f.r}")
    s = -1
    for col in range(fhat.r + 1):
        if np.max(np.abs(fhat.entries[:, col] - f.entries[:, col])) <= tol:
            s = col
        else:
            break
    return s

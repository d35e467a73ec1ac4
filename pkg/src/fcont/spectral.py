"""Discrete Fourier analysis for period-2 trigonometric interpolants.

Coefficients c_k, k = -n..n-1, of the interpolant through 2n equispaced
samples on [-1, 1).  The unpaired k = -n mode is rendered as a cosine so the
series is real-valued off the grid while still interpolating on it.
"""

import numpy as np

_twiddles = {}
_reversals = {}


def _bit_reversal(size):
    if size not in _reversals:
        rev = np.zeros(1, dtype=np.intp)
        while rev.size < size:
            rev = np.concatenate([2 * rev, 2 * rev + 1])
        _reversals[size] = rev
    return _reversals[size]


def _stage_twiddles(size):
    if size not in _twiddles:
        stages = []
        span = 1
        while span < size:
            stages.append(np.exp(-1j * np.pi * np.arange(span) / span))
            span *= 2
        _twiddles[size] = stages
    return _twiddles[size]


def _fft_pow2(values, sign):
    a = values[_bit_reversal(values.size)].astype(np.complex128)
    for tw in _stage_twiddles(values.size):
        span = tw.size
        a = a.reshape(-1, 2 * span)
        t = a[:, span:] * (tw.conj() if sign > 0 else tw)
        a[:, span:] = a[:, :span] - t
        a[:, :span] += t
        a = a.reshape(-1)
    return a


def _dft_slow(values, sign):
    size = values.size
    j = np.arange(size)
    out = np.empty(size, dtype=np.complex128)
    for k in range(size):
        out[k] = np.dot(values, np.exp(sign * 2j * np.pi * j * k / size))
    return out


def _transform(values, sign):
    # Unnormalized transform sum_j v_j exp(sign * 2*pi*i*j*k / size).
    size = values.size
    if size & (size - 1) == 0:
        return _fft_pow2(values, sign)
    return _dft_slow(values, sign)


class TrigCoefficients:
    """Coefficients c_k, k = -n..n-1, of a period-2 trigonometric series.

    ``values[i]`` is the coefficient of exp(i*pi*k*x) with k = i - n.
    """

    def __init__(self, n, values):
        values = np.asarray(values, dtype=np.complex128)
        if n < 1 or values.shape != (2 * n,):
            raise ValueError(f"expected 2n = {2 * n} coefficients, got shape {values.shape}")
        values = values.copy()
        values.flags.writeable = False
        self.n = n
        self.values = values

    def coefficient(self, k):
        """c_k for -n <= k <= n-1."""
        if not -self.n <= k < self.n:
            raise ValueError(f"mode index {k} outside -{self.n}..{self.n - 1}")
        return complex(self.values[k + self.n])

    def __repr__(self):
        return f"TrigCoefficients(n={self.n})"


def dft_forward(g):
    """Coefficients c_k = (1/2n) sum_{j=-n}^{n-1} g_j exp(-i*pi*j*k/n).

    The input index j = -n..n-1 maps to storage position j+n; the resulting
    index shift is the exact phase factor (-1)^k, applied after a standard
    length-2n transform.
    """
    g = np.asarray(g, dtype=float)
    if g.ndim != 1 or g.size < 2 or g.size % 2:
        raise ValueError(f"expected an even-length sequence of samples, got shape {g.shape}")
    n = g.size // 2
    spectrum = _transform(g.astype(np.complex128), -1)
    k = np.arange(-n, n)
    signs = 1.0 - 2.0 * (np.abs(k) % 2)
    return TrigCoefficients(n, signs * spectrum[k % (2 * n)] / (2 * n))


def naive_dft_forward(g):
    """Reference coefficients by direct summation; O(n^2)."""
    g = np.asarray(g, dtype=float)
    if g.ndim != 1 or g.size < 2 or g.size % 2:
        raise ValueError(f"expected an even-length sequence of samples, got shape {g.shape}")
    n = g.size // 2
    j = np.arange(-n, n)
    values = np.empty(2 * n, dtype=np.complex128)
    for k in range(-n, n):
        values[k + n] = np.dot(g, np.exp(-1j * np.pi * j * k / n)) / (2 * n)
    return TrigCoefficients(n, values)


def eval_series(c, x):
    """Real value of the series at x in [-1, 1].

    The paired modes k = -n+1..n-1 sum as written; the lone k = -n mode
    enters as c_{-n} cos(pi*n*x), which agrees with the exponential form at
    every grid node and keeps the value real in between.  Phases are reduced
    mod 2 before the multiplication by pi, so their rounding error stays
    bounded instead of growing with k (and vanishes at dyadic x).
    """
    if not -1.0 <= x <= 1.0:
        raise ValueError(f"series domain is [-1, 1], got x={x}")
    n = c.n
    phase = np.pi * np.mod(np.arange(-n, n) * x, 2.0)
    paired = np.dot(c.values[1:], np.exp(1j * phase[1:]))
    nyquist = c.values[0] * np.cos(phase[0])
    return float((paired + nyquist).real)


def resample(c, M):
    """Series values at the 2M points x_j = -1 + j/M, j = 0..2M-1.

    Zero-pads the spectrum into a length-2M inverse transform; the k = -n
    coefficient splits evenly between the +-n slots (the cosine convention).
    """
    n = c.n
    if M < n:
        raise ValueError(f"undersampling: need M >= n = {n}, got M={M}")
    size = 2 * M
    padded = np.zeros(size, dtype=np.complex128)
    k = np.arange(-n + 1, n)
    signs = 1.0 - 2.0 * (np.abs(k) % 2)
    padded[k % size] = signs * c.values[1:]
    half = 0.5 * c.values[0] * (1.0 - 2.0 * (n % 2))
    padded[(-n) % size] += half
    padded[n % size] += half
    return _transform(padded, +1).real

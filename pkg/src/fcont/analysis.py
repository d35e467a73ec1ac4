"""Test functions, error metric, and convergence studies.

The catalog covers the families used in the convergence experiments: a
smooth oscillatory sine, sharply peaked exponential-of-cosine functions, a
function with an interior kink limiting its smoothness class, rational
functions with complex poles near the interval, and simple polynomial and
kink-at-one-half references.  Each entry carries exact derivatives where a
closed form exists, so finite-difference boundary matrices can be checked
against analytic ones.
"""

import json
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .hermite import BoundaryDataMatrix
from .pipeline import evaluate_dense, fc_approximate

DENSE_GRID_DEFAULT = 2 ** 13

# Records at this error level sit on the double-precision noise floor and
# carry no rate information.
NOISE_FLOOR = 5e-14


class TestFunction:
    """Named function on [0, 1] with optional exact derivatives."""

    def __init__(self, name, value, derivative=None, smoothness=""):
        self.name = name
        self.smoothness = smoothness
        self._value = value
        self._derivative = derivative

    def value(self, x):
        return self._value(np.asarray(x, dtype=float))

    def derivative(self, m, x):
        """m-th derivative at x; m = 0 is the value itself."""
        if m == 0:
            return self.value(x)
        if self._derivative is None:
            raise ValueError(f"{self.name} has no closed-form derivatives")
        return self._derivative(m, np.asarray(x, dtype=float))

    def __repr__(self):
        return f"TestFunction({self.name!r}, {self.smoothness})"


def _sinusoid(freq):
    def deriv(m, x):
        return freq ** m * np.sin(freq * x + m * np.pi / 2)

    return TestFunction(f"sin{freq}", lambda x: np.sin(freq * x), deriv, "entire")


@lru_cache(maxsize=None)
def _expcos_factor(freq, m):
    # f = exp(-2 cos(freq x)) satisfies f^(m) = g_m(sin, cos) * f with g_m a
    # polynomial in s = sin(freq x), c = cos(freq x) over the integers:
    # g_{m+1} = g_m' + 2*freq*s*g_m,  (s^i c^j)' = freq*(i s^{i-1}c^{j+1} - j s^{i+1}c^{j-1}).
    if m == 0:
        return (((0, 0), 1),)
    prev = dict(_expcos_factor(freq, m - 1))
    nxt = {}

    def add(key, coeff):
        nxt[key] = nxt.get(key, 0) + coeff

    for (i, j), coeff in prev.items():
        if i:
            add((i - 1, j + 1), coeff * i * freq)
        if j:
            add((i + 1, j - 1), -coeff * j * freq)
        add((i + 1, j), 2 * freq * coeff)
    return tuple(sorted((key, coeff) for key, coeff in nxt.items() if coeff))


def _expcos(freq):
    def value(x):
        return np.exp(-2.0 * np.cos(freq * x))

    def deriv(m, x):
        s, c = np.sin(freq * x), np.cos(freq * x)
        g = sum(coeff * s ** i * c ** j for (i, j), coeff in _expcos_factor(freq, m))
        return g * value(x)

    return TestFunction(f"expcos{freq}", value, deriv, "entire")


def _pole_pair(eps):
    # 1/((x-1/3)^2 + eps^2) has poles at 1/3 +- i*eps; partial fractions give
    # f^(m)(x) = (-1)^m m! Im[(x - 1/3 - i*eps)^{-(m+1)}] / eps.
    pole = 1.0 / 3.0 + 1j * eps

    def value(x):
        return 1.0 / ((x - 1.0 / 3.0) ** 2 + eps ** 2)

    def deriv(m, x):
        w = (x - pole) ** (-(m + 1))
        return (-1) ** m * math.factorial(m) * w.imag / eps

    return TestFunction(f"runge{eps:g}", value, deriv, "analytic on [0,1]")


def _signed_power(name, center, q, smoothness):
    # |x - center| * (x - center)^q; smooth away from the interior kink.
    def value(x):
        u = x - center
        return np.abs(u) * u ** q

    def deriv(m, x):
        u = np.asarray(x - center)
        d = q + 1
        if m > d:
            return np.zeros_like(u)
        return np.sign(u) * (math.factorial(d) // math.factorial(d - m)) * u ** (d - m)

    return TestFunction(name, value, deriv, smoothness)


def builtin_catalog():
    """All built-in test functions."""
    return [
        TestFunction("const", lambda x: np.ones_like(x),
                     lambda m, x: np.zeros_like(x), "entire"),
        TestFunction("x", lambda x: np.asarray(x, dtype=float),
                     lambda m, x: np.ones_like(x) if m == 1 else np.zeros_like(x), "entire"),
        _sinusoid(20),
        _expcos(50),
        _expcos(100),
        _expcos(200),
        _signed_power("kink3", 1.0 / 3.0, 2, "D^{2,1}[0,1]"),
        _pole_pair(1.0),
        _pole_pair(0.1),
        _pole_pair(0.01),
        _signed_power("abshalf0", 0.5, 0, "D^{0,1}_0[0,1]"),
        _signed_power("abshalf1", 0.5, 1, "D^{1,1}[0,1]"),
        _signed_power("abshalf2", 0.5, 2, "D^{2,1}[0,1]"),
    ]


@lru_cache(maxsize=1)
def _catalog_by_name():
    return {f.name: f for f in builtin_catalog()}


def get_function(name):
    """Look up a catalog entry by name."""
    catalog = _catalog_by_name()
    if name not in catalog:
        raise ValueError(f"unknown test function {name!r}; available: {', '.join(sorted(catalog))}")
    return catalog[name]


@dataclass(frozen=True)
class ConvergenceRecord:
    """One convergence-table row: grid half-size, error, refinement ratio."""

    n: int
    e_n: float
    ratio: float | None
    order: float | None

    @property
    def below_noise_floor(self):
        return self.e_n < NOISE_FLOOR


def relative_error(approx, f, N=DENSE_GRID_DEFAULT):
    """max_j |T(z_j) - f(z_j)| / max_j |f(z_j)| over z_j = j/N, j = 0..N."""
    if N < approx.n:
        raise ValueError(f"undersampling: need N >= n = {approx.n}, got N={N}")
    z = np.arange(N + 1) / N
    exact = f.value(z)
    dense = evaluate_dense(approx, N)
    return float(np.max(np.abs(dense - exact)) / np.max(np.abs(exact)))


def convergence_study(f, r, p, n_values, N=DENSE_GRID_DEFAULT):
    """Errors and refinement ratios over an increasing sequence of grids."""
    n_values = list(n_values)
    if any(b <= a for a, b in zip(n_values, n_values[1:])):
        raise ValueError("grid sizes must be strictly increasing")
    records = []
    previous = None
    for n in n_values:
        samples = f.value(np.arange(n + 1) / n)
        approx = fc_approximate(samples, r, p)
        e_n = relative_error(approx, f, N)
        if previous is None:
            records.append(ConvergenceRecord(n, e_n, None, None))
        else:
            ratio = previous / e_n
            records.append(ConvergenceRecord(n, e_n, ratio, math.log2(ratio)))
        previous = e_n
    return records


def exact_boundary_matrix(f, r):
    """Boundary data matrix from analytic endpoint derivatives."""
    entries = [[float(f.derivative(m, 0.0)) for m in range(r + 1)],
               [float(f.derivative(m, 1.0)) for m in range(r + 1)]]
    return BoundaryDataMatrix(entries)


def empirical_order(records, rows=3, skip_noise_floor=True):
    """Mean refinement order over the trailing rows of a study.

    Transitions that touch a noise-floor record are excluded when
    ``skip_noise_floor`` is set; returns NaN if nothing remains.
    """
    tail = records[-rows:]
    orders = []
    for prev, cur in zip(tail, tail[1:]):
        if skip_noise_floor and (prev.below_noise_floor or cur.below_noise_floor):
            continue
        orders.append(math.log2(prev.e_n / cur.e_n))
    return float(np.mean(orders)) if orders else float("nan")


def fitted_order(records):
    """Least-squares slope of log2 e_n against log2 n, negated."""
    x = np.log2([rec.n for rec in records])
    y = np.log2([rec.e_n for rec in records])
    return float(-np.polyfit(x, y, 1)[0])


def decay_rate(ks, magnitudes):
    """Log-log slope of a coefficient-magnitude envelope.

    Coefficient sequences of piecewise-polynomial continuations split into
    parity branches with different decay exponents (one may even vanish), so
    the rate is fitted through the maxima of octave bins rather than through
    every point.
    """
    ks = np.asarray(ks, dtype=float)
    magnitudes = np.asarray(magnitudes, dtype=float)
    low, high = ks.min(), ks.max()
    xs, ys = [], []
    lo = low
    while lo < high:
        hi = min(2 * lo, high)
        mask = (ks >= lo) & (ks < hi) if hi < high else (ks >= lo) & (ks <= hi)
        if mask.any() and magnitudes[mask].max() > 0:
            top = np.argmax(magnitudes[mask])
            xs.append(math.log(ks[mask][top]))
            ys.append(math.log(magnitudes[mask][top]))
        lo = hi
    return float(np.polyfit(xs, ys, 1)[0])


def emit_table(records, format="markdown"):
    """Render convergence records as csv, json, or markdown text.

    Columns are always (n, e_n, ratio, order).  csv and json carry full
    precision; markdown uses 3 significant digits like a printed table.
    """
    if format == "csv":
        lines = ["n,e_n,ratio,order"]
        for rec in records:
            ratio = "" if rec.ratio is None else f"{rec.ratio:.17g}"
            order = "" if rec.order is None else f"{rec.order:.17g}"
            lines.append(f"{rec.n},{rec.e_n:.17g},{ratio},{order}")
        return "\n".join(lines) + "\n"
    if format == "json":
        rows = [{"n": rec.n, "e_n": rec.e_n, "ratio": rec.ratio, "order": rec.order}
                for rec in records]
        return json.dumps(rows, indent=2) + "\n"
    if format == "markdown":
        lines = ["| n | e_n | ratio | order |", "| --- | --- | --- | --- |"]
        for rec in records:
            ratio = "---" if rec.ratio is None else f"{rec.ratio:.2f}"
            order = "---" if rec.order is None else f"{rec.order:.2f}"
            lines.append(f"| {rec.n} | {rec.e_n:.2e} | {ratio} | {order} |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown table format {format!r}")

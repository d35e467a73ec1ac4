"""Numerical acceptance criteria.

Each criterion reproduces a published convergence result or a structural
property of the continuation operator at a fixed tolerance.  The same
checks back both the pytest acceptance module and the ``selftest`` CLI
command; all randomness is generated from fixed seeds so reruns are
bit-stable.
"""

import math
from dataclasses import dataclass

import numpy as np

from .analysis import (ConvergenceRecord, convergence_study, decay_rate,
                       empirical_order, exact_boundary_matrix, get_function,
                       relative_error)
from .hermite import (BoundaryDataMatrix, eval_continuation,
                      eval_continuation_derivative, hermite_basis,
                      operator_norm_bound, verify_binomial_identity)
from .pipeline import (continuation_ppoly, continuous_coefficient_ppoly,
                       fc_approximate, fc_approximate_with_matrix)
from .spectral import dft_forward, eval_series, naive_dft_forward, resample, TrigCoefficients
from .stencils import boundary_derivatives

GRIDS = [2 ** a for a in range(6, 13)]

# Published relative errors e_n for n = 2^6..2^12, keyed by the varying
# table parameter.  Reproduction tolerance is a factor of 2 per entry.
SIN_P3_ERRORS = {
    1: [1.17e-3, 3.20e-4, 8.24e-5, 2.07e-5, 5.20e-6, 1.22e-6, 2.92e-7],
    2: [2.39e-4, 1.90e-5, 1.68e-6, 1.73e-7, 2.15e-8, 2.69e-9, 3.36e-10],
    3: [1.93e-4, 1.24e-5, 7.85e-7, 4.93e-8, 3.09e-9, 1.86e-10, 1.16e-11],
}
SIN_P4_ERRORS = {
    2: [1.42e-4, 1.28e-5, 1.44e-6, 1.75e-7, 2.16e-8, 2.69e-9, 3.37e-10],
    3: [6.94e-5, 2.53e-6, 1.02e-7, 4.64e-9, 2.32e-10, 1.27e-11, 7.46e-13],
    4: [4.03e-5, 1.42e-6, 4.59e-8, 1.44e-9, 4.51e-11, 1.32e-12, 7.67e-14],
}
KINK_R2_ERRORS = {
    1: [1.54e-4, 3.88e-5, 9.74e-6, 2.43e-6, 6.08e-7, 1.46e-7, 3.65e-8],
    2: [3.20e-6, 4.02e-7, 5.05e-8, 6.32e-9, 7.81e-10, 9.77e-11, 1.22e-11],
    3: [3.29e-6, 4.18e-7, 5.26e-8, 6.59e-9, 8.17e-10, 1.02e-10, 1.28e-11],
}
KINK_R3_ERRORS = {
    1: [1.56e-4, 3.91e-5, 9.79e-6, 2.44e-6, 6.09e-7, 1.46e-7, 3.66e-8],
    2: [2.60e-6, 3.15e-7, 3.88e-8, 4.79e-9, 5.97e-10, 7.15e-11, 8.93e-12],
    3: [8.13e-7, 1.01e-7, 1.27e-8, 1.58e-9, 1.98e-10, 2.27e-11, 2.84e-12],
}


@dataclass
class CriterionResult:
    name: str
    passed: bool
    detail: str


def _within_factor(measured, reference, factor=2.0):
    return all(ref / factor <= got <= ref * factor for got, ref in zip(measured, reference))


def _worst_factor(measured, reference):
    return max(max(got / ref, ref / got) for got, ref in zip(measured, reference))


def criterion_sin_p3():
    """Oscillatory sine, stencil order 3, r = 1..3: rates r+1."""
    f = get_function("sin20")
    passed = True
    notes = []
    for r, reference in sorted(SIN_P3_ERRORS.items()):
        records = convergence_study(f, r, 3, GRIDS)
        errors = [rec.e_n for rec in records]
        order = empirical_order(records, rows=3)
        ok = _within_factor(errors, reference) and abs(order - (r + 1)) <= 0.3
        passed = passed and ok
        notes.append(f"r={r}: worst factor {_worst_factor(errors, reference):.2f}, order {order:.2f}")
    return CriterionResult("sin(20x) p=3 reproduction", passed, "; ".join(notes))


def criterion_sin_p4():
    """Oscillatory sine, stencil order 4, r = 2..4, noise floor excluded."""
    f = get_function("sin20")
    passed = True
    notes = []
    for r, reference in sorted(SIN_P4_ERRORS.items()):
        records = convergence_study(f, r, 4, GRIDS)
        errors = [rec.e_n for rec in records]
        order = empirical_order(records, rows=3, skip_noise_floor=True)
        ok = _within_factor(errors, reference)
        if math.isnan(order):
            notes.append(f"r={r}: worst factor {_worst_factor(errors, reference):.2f}, "
                         f"order skipped (noise floor)")
        else:
            ok = ok and abs(order - (r + 1)) <= 0.3
            notes.append(f"r={r}: worst factor {_worst_factor(errors, reference):.2f}, "
                         f"order {order:.2f}")
        passed = passed and ok
    return CriterionResult("sin(20x) p=4 reproduction", passed, "; ".join(notes))


def criterion_kink_saturation():
    """Interior kink caps the rate at min(p, 2) + 1 regardless of r."""
    f = get_function("kink3")
    passed = True
    notes = []
    for r, table in ((2, KINK_R2_ERRORS), (3, KINK_R3_ERRORS)):
        for p, reference in sorted(table.items()):
            records = convergence_study(f, r, p, GRIDS)
            errors = [rec.e_n for rec in records]
            order = empirical_order(records, rows=3)
            want = min(p, 2) + 1
            ok = _within_factor(errors, reference) and abs(order - want) <= 0.3
            passed = passed and ok
            notes.append(f"r={r},p={p}: worst factor {_worst_factor(errors, reference):.2f}, "
                         f"order {order:.2f} (target {want})")
    return CriterionResult("|x-1/3|(x-1/3)^2 smoothness cap", passed, "; ".join(notes))


def criterion_oscillatory():
    """Sharply oscillatory exponential: rate 5 once resolved, plateau before."""
    f50 = get_function("expcos50")
    records = convergence_study(f50, 4, 4, [2 ** 11, 2 ** 12])
    e_final = records[-1].e_n
    order = records[-1].order
    f200 = get_function("expcos200")
    samples = f200.value(np.arange(2 ** 8 + 1) / 2 ** 8)
    plateau = relative_error(fc_approximate(samples, 4, 4), f200)
    passed = e_final <= 5e-12 and 4.6 <= order <= 5.4 and plateau >= 1e-2
    detail = (f"k=50: e(2^12)={e_final:.3g} (<=5e-12), order {order:.2f} in [4.6,5.4]; "
              f"k=200: e(2^8)={plateau:.3g} (>=1e-2)")
    return CriterionResult("exp(-2cos kx) oscillatory resolution", passed, detail)


def criterion_pole_pair():
    """Poles near the interval: rapid attainment of the noise floor."""

    def error_at(fname, n):
        f = get_function(fname)
        samples = f.value(np.arange(n + 1) / n)
        return relative_error(fc_approximate(samples, 4, 4), f)

    e1 = error_at("runge1", 2 ** 9)
    e_pre = error_at("runge0.01", 2 ** 8)
    e_post = error_at("runge0.01", 2 ** 10)
    passed = e1 <= 2e-13 and e_pre >= 1e-4 and e_post <= 1e-12
    detail = (f"eps=1: e(2^9)={e1:.3g} (<=2e-13); "
              f"eps=0.01: e(2^8)={e_pre:.3g} (>=1e-4), e(2^10)={e_post:.3g} (<=1e-12)")
    return CriterionResult("1/((x-1/3)^2+eps^2) pole thresholds", passed, detail)


def criterion_hermite_properties():
    """Endpoint conditions, binomial identity, and operator norm bound."""
    rng = np.random.default_rng(20260810)
    worst = 0.0
    for r in range(11):
        basis = hermite_basis(r)
        for _ in range(100):
            fhat = BoundaryDataMatrix(rng.uniform(-1.0, 1.0, size=(2, r + 1)))
            for ell in range(r + 1):
                got0 = eval_continuation_derivative(fhat, basis, ell, 0.0)
                got1 = eval_continuation_derivative(fhat, basis, ell, -1.0)
                worst = max(worst, abs(got0 - fhat.entries[0][ell]),
                            abs(got1 - fhat.entries[1][ell]))
    endpoint_ok = worst <= 1e-9

    identity_ok = all(verify_binomial_identity(r, n)
                      for r in range(21) for n in range(1, r + 2))

    bound_ok = True
    margin = 0.0
    for _ in range(1000):
        r = int(rng.integers(0, 11))
        basis = hermite_basis(r)
        fhat = BoundaryDataMatrix(rng.uniform(-1.0, 1.0, size=(2, r + 1)))
        x = float(rng.uniform(-1.0, 0.0))
        value = abs(eval_continuation(fhat, basis, x))
        bound = operator_norm_bound(r) * fhat.max_norm
        margin = max(margin, value / bound)
        bound_ok = bound_ok and value <= bound
    passed = endpoint_ok and identity_ok and bound_ok
    detail = (f"endpoint worst abs error {worst:.2e} (<=1e-9); "
              f"binomial identity exact r<=20: {identity_ok}; "
              f"norm bound peak usage {margin:.3f} (<=1)")
    return CriterionResult("hermite endpoint/identity/bound", passed, detail)


def criterion_oracles():
    """Fast paths agree with their direct-summation and polynomial oracles."""
    rng = np.random.default_rng(4096)
    fft_worst = 0.0
    for size in (8, 64, 256, 1024):
        g = rng.standard_normal(size)
        fast = dft_forward(g).values
        slow = naive_dft_forward(g).values
        fft_worst = max(fft_worst, np.max(np.abs(fast - slow)) / np.max(np.abs(slow)))

    n, M = 64, 256
    coeffs = TrigCoefficients(n, rng.standard_normal(2 * n) + 1j * rng.standard_normal(2 * n))
    grid = resample(coeffs, M)
    direct = np.array([eval_series(coeffs, -1.0 + j / M) for j in range(2 * M)])
    resample_worst = np.max(np.abs(grid - direct)) / np.max(np.abs(direct))

    stencil_worst = 0.0
    n_grid = 32
    xs = np.arange(n_grid + 1) / n_grid
    for m in range(1, 5):
        for p in range(1, 5):
            d = m + p - 1
            samples = (1.0 + xs) ** d
            matrix = boundary_derivatives(samples, n_grid, m, p)
            exact0 = math.perm(d, m)
            exact1 = math.perm(d, m) * 2.0 ** (d - m)
            stencil_worst = max(
                stencil_worst,
                abs(matrix.entries[0][m] - exact0) / max(1.0, abs(exact0)),
                abs(matrix.entries[1][m] - exact1) / max(1.0, abs(exact1)))

    passed = fft_worst <= 1e-12 and resample_worst <= 1e-12 and stencil_worst <= 1e-9
    detail = (f"fft vs naive {fft_worst:.2e} (<=1e-12); "
              f"resample vs pointwise {resample_worst:.2e} (<=1e-12); "
              f"stencil poly reproduction {stencil_worst:.2e} (<=1e-9)")
    return CriterionResult("oracle equivalences", passed, detail)


def criterion_coefficient_decay():
    """Continuation of f(x)=x has coefficients decaying like k^-(r+2)."""
    ks = np.arange(16, 513)
    passed = True
    notes = []
    for r in (0, 1, 2):
        entries = np.zeros((2, r + 1))
        entries[0, 0], entries[1, 0] = 0.0, 1.0
        if r >= 1:
            entries[0, 1] = entries[1, 1] = 1.0
        ppoly = continuation_ppoly(BoundaryDataMatrix(entries), [0.0, 1.0])
        mags = np.array([abs(continuous_coefficient_ppoly(ppoly, int(k))) for k in ks])
        slope = decay_rate(ks, mags)
        ok = abs(slope + (r + 2)) <= 0.4
        passed = passed and ok
        notes.append(f"r={r}: slope {slope:.2f} (target {-(r + 2)})")
    return CriterionResult("coefficient decay k^-(r+2)", passed, "; ".join(notes))


def criterion_s_exactness():
    """An O(1) error in derivative column s+1 drops the rate to s+1.

    The order is the successive-ratio measure over the trailing rows, as in
    the table criteria; for s=2 the leading tail term has a small constant
    and the early grids still see the next-order term.
    """
    f = get_function("sin20")
    exact = exact_boundary_matrix(f, 4)
    ns = [2 ** a for a in range(7, 13)]
    passed = True
    notes = []
    for s in (0, 1, 2):
        entries = exact.entries.copy()
        entries[:, s + 1] += 1.0
        perturbed = BoundaryDataMatrix(entries)
        records = []
        previous = None
        for n in ns:
            samples = f.value(np.arange(n + 1) / n)
            approx = fc_approximate_with_matrix(samples, perturbed)
            e_n = relative_error(approx, f)
            ratio = None if previous is None else previous / e_n
            records.append(ConvergenceRecord(n, e_n, ratio,
                                             None if ratio is None else math.log2(ratio)))
            previous = e_n
        order = empirical_order(records, rows=3)
        ok = abs(order - (s + 1)) <= 0.4
        passed = passed and ok
        notes.append(f"s={s}: order {order:.2f} (target {s + 1})")
    return CriterionResult("s-exactness degradation", passed, "; ".join(notes))


CRITERIA = [
    ("sin-p3", criterion_sin_p3),
    ("sin-p4", criterion_sin_p4),
    ("kink", criterion_kink_saturation),
    ("oscillatory", criterion_oscillatory),
    ("poles", criterion_pole_pair),
    ("hermite", criterion_hermite_properties),
    ("oracles", criterion_oracles),
    ("decay", criterion_coefficient_decay),
    ("sexact", criterion_s_exactness),
]


def run_criterion(key):
    for name, fn in CRITERIA:
        if name == key:
            return fn()
    raise ValueError(f"unknown criterion {key!r}")


def run_all():
    return [fn() for _, fn in CRITERIA]

"""Gibbs oscillations of a raw truncated Fourier series vs continuation.

f(x) = x is not periodic on [0, 1]; its truncated Fourier series rings at
the boundary with O(1) overshoot no matter how many modes are kept.  The
same samples run through the continuation pipeline converge uniformly.
"""

import pathlib

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from fcont import evaluate_dense, fc_approximate

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)


def sawtooth_partial_sum(x, modes):
    # Fourier series of f(x) = x periodized with period 1:
    # 1/2 - sum_k sin(2 pi k x) / (pi k)
    total = np.full_like(x, 0.5)
    for k in range(1, modes + 1):
        total -= np.sin(2 * np.pi * k * x) / (np.pi * k)
    return total


def main():
    N = 2 ** 11
    z = np.arange(N + 1) / N
    exact = z

    fig, axes = plt.subplots(1, 2, figsize=(10, 3.6), sharey=True)
    for modes in (16, 32):
        axes[0].plot(z, sawtooth_partial_sum(z, modes), lw=0.8, label=f"{modes} modes")
    axes[0].plot(z, exact, "k--", lw=0.8)
    axes[0].set_title("truncated series of the raw periodization")
    axes[0].legend(fontsize=8)

    for n in (16, 32):
        samples = np.arange(n + 1) / n
        approx = fc_approximate(samples, 4, 4)
        dense = evaluate_dense(approx, N)
        axes[1].plot(z, dense, lw=0.8, label=f"n = {n}")
        print(f"n={n:3d}: raw-series max error "
              f"{np.max(np.abs(sawtooth_partial_sum(z, n) - exact)):.3f}, "
              f"continuation max error {np.max(np.abs(dense - exact)):.3e}")
    axes[1].plot(z, exact, "k--", lw=0.8)
    axes[1].set_title("Fourier continuation approximant")
    axes[1].legend(fontsize=8)

    fig.tight_layout()
    target = OUT / "gibbs_vs_continuation.png"
    fig.savefig(target, dpi=120)
    print(f"wrote {target}")


if __name__ == "__main__":
    main()

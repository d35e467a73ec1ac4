"""Continuation profiles of f(x) = x for increasing smoothness order.

The two-point Hermite polynomial extends f from [0, 1] to [-1, 0] so that
the periodic image is r-times continuously differentiable.  Low orders give
gentle blends; higher orders overshoot more and more while pinning ever more
derivatives at the seams.  Writes a figure to demos/output/.
"""

import pathlib

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from fcont import BoundaryDataMatrix, eval_continuation_factored, hermite_basis

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)


def boundary_matrix_for_identity(r):
    entries = np.zeros((2, r + 1))
    entries[1, 0] = 1.0            # f(1) = 1
    if r >= 1:
        entries[0, 1] = entries[1, 1] = 1.0   # f'(0) = f'(1) = 1
    return BoundaryDataMatrix(entries)


def main():
    xs_left = np.linspace(-1.0, 0.0, 400)
    xs_right = np.linspace(0.0, 1.0, 200)

    fig, axes = plt.subplots(2, 2, figsize=(9, 6), sharex=True)
    for ax, r in zip(axes.flat, (0, 1, 2, 15)):
        fhat = boundary_matrix_for_identity(r)
        left = eval_continuation_factored(fhat, hermite_basis(r), xs_left)
        ax.plot(xs_right, xs_right, "k-", label="f(x) = x")
        ax.plot(xs_left, left, "C0-", label="continuation")
        ax.set_title(f"r = {r}")
        ax.axvline(0.0, color="0.8", lw=0.8)
        peak = max(np.max(np.abs(left)), 1.0)
        print(f"r={r:3d}: continuation peak magnitude {peak:.3g}")
    axes[0, 0].legend(loc="upper left", fontsize=8)
    fig.suptitle("Hermite continuations of f(x) = x to [-1, 0]")
    fig.tight_layout()
    target = OUT / "continuation_profiles.png"
    fig.savefig(target, dpi=120)
    print(f"wrote {target}")


if __name__ == "__main__":
    main()

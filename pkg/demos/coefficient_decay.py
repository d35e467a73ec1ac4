"""Fourier coefficient decay of piecewise-polynomial continuations.

For f(x) = x with exact boundary data, the continuation is polynomial on
both halves, so every Fourier coefficient has a closed form.  The magnitudes
fall off like k^-(r+2): each extra matched derivative buys one more order.
The even/odd modes split into separate branches (one can vanish outright, as
for the r=0 triangle wave), which is why the rate is read off the envelope.
"""

import pathlib

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from fcont import (BoundaryDataMatrix, continuation_ppoly,
                   continuous_coefficient_ppoly, decay_rate)

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)


def main():
    ks = np.arange(16, 513)
    fig, ax = plt.subplots(figsize=(6, 4))
    for r in (0, 1, 2):
        entries = np.zeros((2, r + 1))
        entries[1, 0] = 1.0
        if r >= 1:
            entries[0, 1] = entries[1, 1] = 1.0
        ppoly = continuation_ppoly(BoundaryDataMatrix(entries), [0.0, 1.0])
        mags = np.array([abs(continuous_coefficient_ppoly(ppoly, int(k))) for k in ks])
        slope = decay_rate(ks, mags)
        print(f"r={r}: envelope slope {slope:+.3f} (expected {-(r + 2)})")
        shown = np.where(mags > 0, mags, np.nan)
        ax.loglog(ks, shown, ".", ms=2, label=f"r = {r} (slope {slope:.2f})")
    ax.set_xlabel("k")
    ax.set_ylabel("|c_k|")
    ax.legend()
    ax.set_title("coefficient decay of continuations of f(x) = x")
    fig.tight_layout()
    target = OUT / "coefficient_decay.png"
    fig.savefig(target, dpi=120)
    print(f"wrote {target}")


if __name__ == "__main__":
    main()

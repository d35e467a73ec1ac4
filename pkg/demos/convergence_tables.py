"""Regenerate the six convergence tables.

Each table sweeps the grid half-size n over doubling steps and reports the
relative max error e_n with refinement ratios; the empirical order settles
at min(p, r) + 1 for smooth functions and saturates at the smoothness class
of the kinked one.  Runs in a few seconds.
"""

from fcont import convergence_study, emit_table, get_function

FULL = [2 ** a for a in range(6, 13)]
SHORT = [2 ** a for a in range(6, 11)]

TABLES = [
    ("sin(20x), stencil order p=3, r = 1, 2, 3",
     [("sin20", r, 3, FULL) for r in (1, 2, 3)]),
    ("sin(20x), stencil order p=4, r = 2, 3, 4",
     [("sin20", r, 4, FULL) for r in (2, 3, 4)]),
    ("exp(-2 cos kx), r = p = 4, k = 50, 100, 200",
     [(f"expcos{k}", 4, 4, FULL) for k in (50, 100, 200)]),
    ("|x-1/3|(x-1/3)^2, r = 2, p = 1, 2, 3",
     [("kink3", 2, p, FULL) for p in (1, 2, 3)]),
    ("|x-1/3|(x-1/3)^2, r = 3, p = 1, 2, 3",
     [("kink3", 3, p, FULL) for p in (1, 2, 3)]),
    ("1/((x-1/3)^2 + eps^2), r = p = 4, eps = 1, 0.1, 0.01",
     [(name, 4, 4, SHORT) for name in ("runge1", "runge0.1", "runge0.01")]),
]


def main():
    for title, columns in TABLES:
        print(f"\n## {title}\n")
        for fname, r, p, grids in columns:
            records = convergence_study(get_function(fname), r, p, grids)
            print(f"{fname}, r={r}, p={p}:")
            print(emit_table(records, "markdown"))


if __name__ == "__main__":
    main()

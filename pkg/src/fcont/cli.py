"""Command-line front end.

Subcommands: continue, approximate, coeffs, convergence, stencil, selftest.
Exit codes: 0 success, 1 validation error, 2 numerical acceptance failure
(selftest only), 3 I/O error.  Output is deterministic: identical arguments
produce byte-identical files.
"""

import argparse
import sys
from dataclasses import dataclass

import numpy as np

from . import acceptance
from .analysis import (convergence_study, emit_table, get_function,
                       relative_error)
from .pipeline import evaluate_dense, extend_with_matrix, fc_approximate
from .stencils import StencilSpec, boundary_derivatives, make_stencil

GRID_TOLERANCE = 1e-10


@dataclass
class RunConfig:
    """Resolved options of one command invocation."""

    fn: str | None = None
    data: str | None = None
    n: int | None = None
    r: int = 4
    p: int = 4
    grid: int = 2 ** 13
    format: str = "markdown"
    out: str | None = None


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad arguments; 2 is reserved for
    # numerical acceptance failures, so usage errors map to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _read_samples(path):
    """Parse `x,f` rows (header optional) or a single `f` column."""
    with open(path) as handle:
        lines = [line.strip() for line in handle]
    rows = []
    for index, line in enumerate(lines):
        if not line:
            continue
        fields = [field.strip() for field in line.split(",")]
        try:
            rows.append([float(field) for field in fields])
        except ValueError:
            if rows or index > 0:
                raise ValueError(f"{path}: unparseable row {index}: {line!r}")
            continue  # header row
    if not rows:
        raise ValueError(f"{path}: no data rows")
    widths = {len(row) for row in rows}
    if len(widths) != 1 or widths.pop() not in (1, 2):
        raise ValueError(f"{path}: rows must have one or two columns")
    data = np.array(rows)
    if data.shape[1] == 1:
        return data[:, 0]
    xs, samples = data[:, 0], data[:, 1]
    n = len(xs) - 1
    if n < 1:
        raise ValueError(f"{path}: need at least two rows")
    spacing = 1.0 / n
    if abs(xs[0]) > GRID_TOLERANCE or abs(xs[n] - 1.0) > GRID_TOLERANCE:
        raise ValueError(f"{path}: grid must span [0, 1]; endpoints are {xs[0]!r}, {xs[n]!r}")
    deviations = np.abs(np.diff(xs) - spacing)
    worst = int(np.argmax(deviations))
    if deviations[worst] > GRID_TOLERANCE * spacing:
        raise ValueError(f"{path}: grid not equispaced at index {worst + 1}: "
                         f"spacing {xs[worst + 1] - xs[worst]!r}, expected {spacing!r}")
    return samples


def _resolve_samples(config):
    """Samples plus the catalog entry when the source is a builtin."""
    if (config.fn is None) == (config.data is None):
        raise ValueError("exactly one of --fn and --data is required")
    if config.fn is not None:
        if config.n is None:
            raise ValueError("--n is required with --fn")
        if config.n < 2:
            raise ValueError(f"grid half-size must be at least 2, got {config.n}")
        f = get_function(config.fn)
        return f.value(np.arange(config.n + 1) / config.n), f
    return _read_samples(config.data), None


def _write(config, text):
    if config.out is None:
        sys.stdout.write(text)
    else:
        with open(config.out, "w") as handle:
            handle.write(text)


def cmd_continue(config):
    """Emit (x_j, value) over the full extended grid j = -n..n."""
    samples, _ = _resolve_samples(config)
    n = len(samples) - 1
    extended = extend_with_matrix(samples, boundary_derivatives(samples, n, config.r, config.p))
    lines = ["x,f"]
    for j in range(-n, n + 1):
        value = samples[n] if j == n else extended[j + n]
        lines.append(f"{j / n:.17g},{value:.17g}")
    _write(config, "\n".join(lines) + "\n")
    return 0


def cmd_approximate(config):
    """Emit dense-grid approximant values, with errors for builtin sources."""
    samples, f = _resolve_samples(config)
    approx = fc_approximate(samples, config.r, config.p)
    N = config.grid
    dense = evaluate_dense(approx, N)
    z = np.arange(N + 1) / N
    if f is None:
        lines = ["x,approx"]
        lines += [f"{z[j]:.17g},{dense[j]:.17g}" for j in range(N + 1)]
    else:
        exact = f.value(z)
        lines = ["x,approx,exact,abs_error"]
        lines += [f"{z[j]:.17g},{dense[j]:.17g},{exact[j]:.17g},{abs(dense[j] - exact[j]):.17g}"
                  for j in range(N + 1)]
    _write(config, "\n".join(lines) + "\n")
    return 0


def cmd_coeffs(config):
    """Emit the trigonometric coefficients as k,re,im rows."""
    samples, _ = _resolve_samples(config)
    approx = fc_approximate(samples, config.r, config.p)
    n = approx.n
    lines = ["k,re,im"]
    for i, value in enumerate(approx.coefficients.values):
        lines.append(f"{i - n},{value.real:.17g},{value.imag:.17g}")
    _write(config, "\n".join(lines) + "\n")
    return 0


def cmd_convergence(config, nmin, nmax):
    """Run a doubling convergence study and emit the table."""
    if config.fn is None:
        raise ValueError("convergence studies need a builtin function (--fn)")
    if nmin < 4 or nmax < nmin:
        raise ValueError(f"invalid grid range [{nmin}, {nmax}]")
    f = get_function(config.fn)
    ns = []
    n = nmin
    while n <= nmax:
        ns.append(n)
        n *= 2
    records = convergence_study(f, config.r, config.p, ns, config.grid)
    _write(config, emit_table(records, config.format))
    return 0


def cmd_stencil(config, m):
    """Print the exact rational weights of the (m, p) one-sided stencil."""
    stencil = make_stencil(StencilSpec(m, config.p))
    _write(config, ", ".join(str(w) for w in stencil.exact_weights) + "\n")
    return 0


def cmd_selftest(config):
    """Run every acceptance criterion; nonzero exit on any failure."""
    results = acceptance.run_all()
    failures = 0
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        failures += not result.passed
        print(f"[{status}] {result.name}: {result.detail}")
    print(f"{len(results) - failures}/{len(results)} criteria passed")
    return 0 if failures == 0 else 2


def build_parser():
    parser = _Parser(prog="fcont",
                     description="Fourier continuation approximation on equispaced grids")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, source=True, grid=False, fmt=False):
        cmd = sub.add_parser(name, help=help_text)
        if source:
            cmd.add_argument("--fn", help="builtin test function name")
            cmd.add_argument("--data", help="path to sampled data (rows `x,f` or `f`)")
            cmd.add_argument("--n", type=int, help="grid half-size for --fn sources")
        cmd.add_argument("--r", type=int, default=4, help="continuation smoothness order")
        cmd.add_argument("--p", type=int, default=4, help="derivative accuracy order")
        if grid:
            cmd.add_argument("--grid", type=int, default=2 ** 13,
                             help="dense evaluation grid size N")
        if fmt:
            cmd.add_argument("--format", choices=("csv", "json", "markdown"),
                             default="markdown", help="table format")
        cmd.add_argument("--out", help="output path (default: stdout)")
        return cmd

    add("continue", "emit the continued samples on the extended grid")
    add("approximate", "emit approximant vs exact values on the dense grid", grid=True)
    add("coeffs", "emit trigonometric coefficients as csv")
    conv = add("convergence", "emit a convergence table over doubling grids",
               grid=True, fmt=True)
    conv.add_argument("--nmin", type=int, default=2 ** 6, help="smallest grid half-size")
    conv.add_argument("--nmax", type=int, default=2 ** 12, help="largest grid half-size")
    sten = add("stencil", "print exact rational stencil weights", source=False)
    sten.add_argument("--m", type=int, required=True, help="derivative order")
    sub.add_parser("selftest", help="run the numerical acceptance suite")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    config = RunConfig(fn=getattr(args, "fn", None),
                       data=getattr(args, "data", None),
                       n=getattr(args, "n", None),
                       r=getattr(args, "r", 4),
                       p=getattr(args, "p", 4),
                       grid=getattr(args, "grid", 2 ** 13),
                       format=getattr(args, "format", "markdown"),
                       out=getattr(args, "out", None))
    try:
        if args.command == "continue":
            return cmd_continue(config)
        if args.command == "approximate":
            return cmd_approximate(config)
        if args.command == "coeffs":
            return cmd_coeffs(config)
        if args.command == "convergence":
            return cmd_convergence(config, args.nmin, args.nmax)
        if args.command == "stencil":
            return cmd_stencil(config, args.m)
        return cmd_selftest(config)
    except ValueError as exc:
        print(f"fcont: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"fcont: i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

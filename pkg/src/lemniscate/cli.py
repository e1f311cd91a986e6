"""Command-line front end.

    lemniscate classify  --variant scaled --n 4 --C 0.2 --k 1
    lemniscate trace     --variant scaled --n 4 --C 0.1 --m 1024 --out curve.csv --svg curve.svg
    lemniscate rigidity  --variant scaled --n 4 --C 0.25
    lemniscate sweep     --variant scaled --n 4 --C-values 0:1:11 --k-values 0.1:1:10 --relative
    lemniscate oracle    --variant two-term --n 5 --j 2 --C 0.5 --pgm grid.pgm
    lemniscate reproduce --section 3 --outdir out/

Exit status is 1 for invalid parameters and 2 for numerical failures.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .classify import Convention, classify
from .core import LemniscateFamily, Variant
from .errors import DomainError, NonConvergence, NotBounded
from .formats import curve_to_csv, fmt, sweep_to_csv, to_json, to_jsonable
from .oracle import grid_report
from .rigidity import (
    DEFAULT_RADIAL_ORDER,
    projection_polynomial,
    rigidity_sweep,
    torsional_rigidity,
)
from .tracer import DEFAULT_SAMPLES, DEFAULT_TRACE_TOL, trace_component

# (C_hat, printed rigidity at k = 1) for Lambda_4
SECTION3_TABLE = ((1 / 4, 1.63988), (1 / 5, 1.60815), (1 / 10, 1.57894), (1 / 100, 1.57087))
SECTION3_TOL = 5e-4
SECTION3_CURVES = (1 / 4, 1 / 5, 1 / 10, 1 / 100)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_values(text: str) -> list[float]:
    """Comma list ``0.1,0.2`` or inclusive linspace ``start:stop:count``."""
    text = text.strip()
    if not text:
        return []
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise argparse.ArgumentTypeError(f"range must be start:stop:count, got {text!r}")
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
        return np.linspace(start, stop, count).tolist()
    return [float(v) for v in text.split(",")]


def _add_family_args(p, need_C=True):
    p.add_argument("--variant", choices=[v.value for v in Variant], default=Variant.SCALED.value)
    p.add_argument("--n", type=int, help="degree of the leading term")
    p.add_argument("--j", type=int, help="degree of the second term (two-term only)")
    p.add_argument("--C", type=float, required=need_C, default=0.0, help="coefficient")
    p.add_argument("--k", type=float, default=1.0, help="constant term, > 0")


def _family(args) -> LemniscateFamily:
    variant = Variant(args.variant)
    if variant is not Variant.SCALED_PAIR and args.n is None:
        raise UsageError(f"--n is required for variant {variant.value}")
    if variant is Variant.TWO_TERM and args.j is None:
        raise UsageError("--j is required for variant two-term")
    if variant is Variant.SCALED_PAIR:
        return LemniscateFamily.scaled_pair(args.C, args.k)
    if variant is Variant.SCALED:
        return LemniscateFamily.scaled(args.n, args.C, args.k)
    return LemniscateFamily.two_term(args.n, args.j, args.C, args.k)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lemniscate", description="Polynomial lemniscates and torsional rigidity.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="existence verdict for a family")
    _add_family_args(p)
    p.add_argument("--convention", choices=[c.value for c in Convention], default="definitional")
    p.add_argument("--json", type=Path, help="write the JSON detail here instead of stdout")

    p = sub.add_parser("trace", help="trace the bounded component as theta,alpha CSV")
    _add_family_args(p)
    p.add_argument("--m", type=int, default=DEFAULT_SAMPLES, help="angle samples (default %(default)s)")
    p.add_argument("--trace-tol", type=float, default=DEFAULT_TRACE_TOL)
    p.add_argument("--out", type=Path, help="CSV path (default stdout)")
    p.add_argument("--svg", type=Path, help="also render the curve")

    p = sub.add_parser("rigidity", help="torsional rigidity of the bounded component")
    _add_family_args(p)
    p.add_argument("--m", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--radial-order", type=int, default=DEFAULT_RADIAL_ORDER)
    p.add_argument("--json", type=Path)

    p = sub.add_parser("sweep", help="rigidity over a (C, k) grid")
    _add_family_args(p, need_C=False)
    p.add_argument("--C-values", type=parse_values, required=True)
    p.add_argument("--k-values", type=parse_values, required=True)
    p.add_argument("--relative", action="store_true", help="C values are fractions of C*(k)")
    p.add_argument("--m", type=int, default=256)
    p.add_argument("--radial-order", type=int, default=DEFAULT_RADIAL_ORDER)
    p.add_argument("--out", type=Path, help="CSV path (default stdout)")
    p.add_argument("--svg", type=Path, help="render the rigidity surface")

    p = sub.add_parser("oracle", help="grid sign-labelling report as JSON")
    _add_family_args(p)
    p.add_argument("--resolution", type=int, default=512)
    p.add_argument("--box-radius", type=float)
    p.add_argument("--pgm", type=Path, help="dump the sign grid as a P2 graymap")
    p.add_argument("--json", type=Path)

    p = sub.add_parser("reproduce", help="recompute the published rigidity table")
    p.add_argument("--section", type=int, choices=[3], default=3)
    p.add_argument("--m", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--radial-order", type=int, default=DEFAULT_RADIAL_ORDER)
    p.add_argument("--outdir", type=Path, help="write table CSV and figures here")
    p.add_argument("--surface-m", type=int, default=256, help="angle samples for the surface sweep")
    return parser


def _emit(text: str, path: Path | None):
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text, encoding="utf-8", newline="")


def cmd_classify(args) -> int:
    family = _family(args)
    result = classify(family, args.convention)
    print(result)
    detail = {"family": to_jsonable(family), "classification": to_jsonable(result)}
    _emit(json.dumps(detail, indent=2) + "\n", args.json)
    return 0


def cmd_trace(args) -> int:
    family = _family(args)
    curve = trace_component(family, args.m, args.trace_tol)
    _emit(curve_to_csv(curve), args.out)
    if args.svg:
        from .plotting import plot_curves

        plot_curves([curve], [family.label], args.svg)
    return 0


def cmd_rigidity(args) -> int:
    family = _family(args)
    curve = trace_component(family, args.m)
    result = torsional_rigidity(curve, projection_polynomial(family), args.radial_order)
    print(f"rigidity={fmt(result.value)} abs_err={fmt(result.abs_error_estimate)}")
    if args.json:
        args.json.write_text(to_json({"family": family, "result": result}), encoding="utf-8")
    return 0


def cmd_sweep(args) -> int:
    template = _family(args)
    cells = rigidity_sweep(
        template, args.C_values, args.k_values, args.m, args.radial_order, relative=args.relative
    )
    for cell in cells:
        if cell.error:
            print(f"cell C={cell.C:g} k={cell.k:g}: {cell.error}", file=sys.stderr)
    _emit(sweep_to_csv(cells), args.out)
    if args.svg:
        from .plotting import plot_rigidity_surface

        plot_rigidity_surface(
            cells, args.svg, shape=(len(args.C_values), len(args.k_values)),
            title=template.label.split("(")[0],
        )
    return 0


def cmd_oracle(args) -> int:
    family = _family(args)
    report = grid_report(family, args.resolution, args.box_radius, args.pgm)
    _emit(to_json(report), args.json)
    return 0


def reproduce_section3(m=DEFAULT_SAMPLES, radial_order=DEFAULT_RADIAL_ORDER):
    """Rows of (C_hat, expected, computed RigidityResult, passed) at k = 1."""
    rows = []
    for c_hat, expected in SECTION3_TABLE:
        family = LemniscateFamily.scaled(4, c_hat, 1.0)
        result = torsional_rigidity(trace_component(family, m), projection_polynomial(family), radial_order)
        rows.append((c_hat, expected, result, abs(result.value - expected) <= SECTION3_TOL))
    return rows


def cmd_reproduce(args) -> int:
    rows = reproduce_section3(args.m, args.radial_order)
    lines = ["C_hat,k,expected,computed,abs_diff,pass"]
    for c_hat, expected, result, passed in rows:
        diff = abs(result.value - expected)
        status = "PASS" if passed else "FAIL"
        print(f"C_hat={c_hat:<6g} k=1 expected={expected:.5f} computed={result.value:.6f} "
              f"|diff|={diff:.2e} tol={SECTION3_TOL:g} {status}")
        lines.append(f"{fmt(c_hat)},1,{expected},{fmt(result.value)},{fmt(diff)},{status}")

    if args.outdir:
        from .plotting import plot_curves, plot_rigidity_surface

        out = args.outdir
        out.mkdir(parents=True, exist_ok=True)
        (out / "section3_table.csv").write_text("\n".join(lines) + "\n", encoding="utf-8")

        curves = [trace_component(LemniscateFamily.scaled(4, c, 1.0), args.m) for c in SECTION3_CURVES]
        labels = [f"C_hat = 1/{round(1 / c)}" for c in SECTION3_CURVES]
        plot_curves(curves, labels, out / "fig3_curves.svg", title="Lambda_4 components, k = 1")

        template = LemniscateFamily.scaled(4, 0.0, 1.0)
        fractions, ks = np.linspace(0, 1, 11).tolist(), np.linspace(0.1, 1, 10).tolist()
        cells = rigidity_sweep(template, fractions, ks, args.surface_m, args.radial_order, relative=True)
        (out / "fig4_sweep.csv").write_text(sweep_to_csv(cells), encoding="utf-8")
        plot_rigidity_surface(
            cells, out / "fig4_surface.svg", shape=(len(fractions), len(ks)),
            title="rigidity over 0 <= C_hat <= 1/(4k)",
        )
        print(f"wrote {out}/section3_table.csv, fig3_curves.svg, fig4_sweep.csv, fig4_surface.svg")

    return 0 if all(r[3] for r in rows) else 2


COMMANDS = {
    "classify": cmd_classify,
    "trace": cmd_trace,
    "rigidity": cmd_rigidity,
    "sweep": cmd_sweep,
    "oracle": cmd_oracle,
    "reproduce": cmd_reproduce,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, DomainError, NotBounded) as exc:
        print(f"lemniscate {args.command}: {exc}", file=sys.stderr)
        return 1
    except NonConvergence as exc:
        print(f"lemniscate {args.command}: numerical failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

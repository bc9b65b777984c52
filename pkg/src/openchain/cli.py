"""Command-line interface emitting deterministic CSV/JSON artifacts.

Subcommands: spectrum | profile | thermal | threshold | figure.
CSV files are UTF-8, comma separated, LF line endings, floats printed with
12 significant digits; JSON mirrors the same rows with the same rounding.
Exit codes: 0 success, 1 computational failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

import numpy as np

from .entanglement import MEASURE_FOR_SPIN, bond_profile
from .hamiltonian import build_hamiltonian
from .hilbert import ChainSpec
from .spectra import diagonalize, group_levels
from .thermal import NoThresholdError, thermal_scan, threshold_temperature

FIGURE_IDS = (1, 2, 3, 4)
FIGURE_LENGTHS = {1: range(3, 11), 2: range(2, 7), 3: range(3, 7), 4: range(2, 7)}
FIGURE_TGRID = np.linspace(0.05, 3.0, 60)


def fmt(x) -> str:
    return format(float(x), ".12g")


def _cell(value):
    if isinstance(value, (float, np.floating)):
        return fmt(value)
    return str(value)


def write_artifact(path, header, rows, out_format):
    """Write rows atomically (temp file + rename); '-'/None means stdout."""
    if out_format == "csv":
        lines = [",".join(header)]
        lines += [",".join(_cell(v) for v in row) for row in rows]
        text = "\n".join(lines) + "\n"
    else:
        records = []
        for row in rows:
            rec = {}
            for key, value in zip(header, row):
                if isinstance(value, (float, np.floating)):
                    value = float(fmt(value))
                elif isinstance(value, (int, np.integer)):
                    value = int(value)
                rec[key] = value
            records.append(rec)
        text = json.dumps(records, indent=2) + "\n"
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".openchain-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _parse_level(text: str) -> int:
    if text == "ground":
        return 0
    if text == "first":
        return 1
    try:
        k = int(text)
    except ValueError:
        raise ValueError(f"invalid level selector {text!r}; use ground, first, or an integer")
    if k < 0:
        raise ValueError("level index must be nonnegative")
    return k


def _spec_from(args) -> ChainSpec:
    return ChainSpec(length=args.length, spin_kind=args.spin, coupling=args.coupling)


def _temperature_grid(args) -> np.ndarray:
    if args.tmin <= 0 or args.tmax <= args.tmin or args.steps < 2:
        raise ValueError("need 0 < tmin < tmax and steps >= 2")
    if args.tscale == "log":
        return np.geomspace(args.tmin, args.tmax, args.steps)
    return np.linspace(args.tmin, args.tmax, args.steps)


def cmd_spectrum(args) -> None:
    spec = _spec_from(args)
    levels = group_levels(diagonalize(build_hamiltonian(spec)), tol=args.degeneracy_tol)
    rows = [(lv.index, lv.energy, lv.degeneracy) for lv in levels]
    write_artifact(args.out, ("level", "energy", "degeneracy"), rows, args.format)


def cmd_profile(args) -> None:
    spec = _spec_from(args)
    measure = args.measure or MEASURE_FOR_SPIN[spec.spin_kind]
    k = _parse_level(args.level)
    profile = bond_profile(spec, k, measure)
    rows = [(i + 1, profile.values[i], profile.oracle[i]) for i in range(spec.length - 1)]
    write_artifact(args.out, ("bond", "value", "oracle"), rows, args.format)


def cmd_thermal(args) -> None:
    spec = _spec_from(args)
    i, j = args.bond
    curve = thermal_scan(spec, i, j, _temperature_grid(args), measure=args.measure)
    rows = list(zip(curve.temperatures, curve.values))
    write_artifact(args.out, ("temperature", "value"), rows, args.format)


def cmd_threshold(args) -> None:
    spec = _spec_from(args)
    i, j = args.bond
    result = threshold_temperature(spec, i, j, tol=args.tol)
    rows = [(result.t_th, result.bracket_width, result.iterations, result.root_term)]
    write_artifact(args.out, ("t_th", "bracket_width", "iterations", "root_term"), rows, args.format)


def figure_rows(figure_id: int):
    """Long-format rows (figure_id, L, level_or_T, bond_or_measure, value)."""
    rows = []
    if figure_id in (1, 3):
        spin = "half" if figure_id == 1 else "one"
        measure = MEASURE_FOR_SPIN[spin]
        for L in FIGURE_LENGTHS[figure_id]:
            spec = ChainSpec(length=L, spin_kind=spin)
            levels = group_levels(diagonalize(build_hamiltonian(spec)))
            for name, k in (("ground", 0), ("first", 1)):
                profile = bond_profile(spec, k, measure, levels=levels)
                for b in range(L - 1):
                    rows.append((figure_id, L, name, b + 1, profile.values[b]))
    else:
        spin = "half" if figure_id == 2 else "one"
        measure = MEASURE_FOR_SPIN[spin]
        for L in FIGURE_LENGTHS[figure_id]:
            spec = ChainSpec(length=L, spin_kind=spin)
            curve = thermal_scan(spec, 1, 2, FIGURE_TGRID)
            for T, value in zip(curve.temperatures, curve.values):
                rows.append((figure_id, L, fmt(T), measure, value))
    return rows


def cmd_figure(args) -> None:
    if args.id not in FIGURE_IDS:
        raise ValueError(f"figure id must be one of {FIGURE_IDS}")
    rows = figure_rows(args.id)
    write_artifact(args.out, ("figure_id", "L", "level_or_T", "bond_or_measure", "value"),
                   rows, args.format)


def _add_common(parser, spin=True, bond=False, temperature=False):
    if spin:
        parser.add_argument("--spin", choices=("half", "one"), required=True)
        parser.add_argument("--length", type=int, required=True)
        parser.add_argument("--coupling", type=float, default=1.0, metavar="J")
    if bond:
        parser.add_argument("--bond", type=int, nargs=2, default=(1, 2), metavar=("I", "J"))
    if temperature:
        parser.add_argument("--tmin", type=float, default=0.05)
        parser.add_argument("--tmax", type=float, default=3.0)
        parser.add_argument("--steps", type=int, default=60)
        parser.add_argument("--tscale", choices=("lin", "log"), default="lin")
    parser.add_argument("--out", default=None, metavar="PATH",
                        help="output file (default: stdout)")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--threads", type=int, default=None,
                        help="cap internal parallelism (currently single-threaded)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="openchain",
                                     description="Exact diagonalization of open Heisenberg chains")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="distinct energy levels with degeneracies")
    _add_common(p)
    p.add_argument("--degeneracy-tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("profile", help="nearest-neighbor entanglement profile of one level")
    _add_common(p)
    p.add_argument("--level", default="ground", help="ground | first | integer index")
    p.add_argument("--measure", choices=("concurrence", "negativity"), default=None)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("thermal", help="thermal entanglement versus temperature")
    _add_common(p, bond=True, temperature=True)
    p.add_argument("--measure", choices=("concurrence", "negativity"), default=None)
    p.set_defaults(func=cmd_thermal)

    p = sub.add_parser("threshold", help="threshold temperature of a bond")
    _add_common(p, bond=True)
    p.add_argument("--tol", type=float, default=1e-7)
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("figure", help="long-format data behind the paper-style figures")
    p.add_argument("--id", type=int, required=True, choices=FIGURE_IDS)
    _add_common(p, spin=False)
    p.set_defaults(func=cmd_figure)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (ValueError, IndexError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (NoThresholdError, RuntimeError, ArithmeticError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

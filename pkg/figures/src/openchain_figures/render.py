"""Render openchain figure CSVs into images.

Input is the long-format CSV emitted by `openchain figure --id N`:
columns (figure_id, L, level_or_T, bond_or_measure, value).  Profile figures
(1 and 3) become one panel per chain length with the ground level drawn as a
star line and the first-excited level as a square line; thermal figures
(2 and 4) become a single panel with one curve per chain length.

This renderer never recomputes physics; it only plots what the CSV contains.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

PROFILE_LENGTHS = {1: range(3, 11), 3: range(3, 7)}
THERMAL_LENGTHS = {2: range(2, 7), 4: range(2, 7)}
MEASURE_LABEL = {1: "concurrence", 2: "thermal concurrence",
                 3: "negativity", 4: "thermal negativity"}
LEVEL_STYLE = {"ground": ("*", "ground state"), "first": ("s", "first excited state")}


class RenderError(RuntimeError):
    pass


@dataclass(frozen=True)
class FigureJob:
    figure_id: int
    csv_path: str
    image_path: str
    image_format: str = "png"


def load_rows(path: str) -> list[dict]:
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    if not rows:
        raise RenderError(f"empty or headerless CSV: {path}")
    required = {"figure_id", "L", "level_or_T", "bond_or_measure", "value"}
    missing = required - set(rows[0])
    if missing:
        raise RenderError(f"CSV missing columns: {', '.join(sorted(missing))}")
    return rows


def _profile_series(rows, L: int, level: str):
    points = [(int(r["bond_or_measure"]), float(r["value"]))
              for r in rows if int(r["L"]) == L and r["level_or_T"] == level]
    if not points:
        raise RenderError(f"no rows for L={L} level={level}")
    points.sort()
    return [p[0] for p in points], [p[1] for p in points]


def _thermal_series(rows, L: int):
    points = [(float(r["level_or_T"]), float(r["value"]))
              for r in rows if int(r["L"]) == L]
    if not points:
        raise RenderError(f"no rows for L={L}")
    points.sort()
    return [p[0] for p in points], [p[1] for p in points]


def build_figure(figure_id: int, rows: list[dict]):
    if figure_id in PROFILE_LENGTHS:
        lengths = list(PROFILE_LENGTHS[figure_id])
        ncols = 2
        nrows = (len(lengths) + 1) // 2
        fig, axes = plt.subplots(nrows, ncols, figsize=(3.2 * ncols, 2.4 * nrows),
                                 constrained_layout=True)
        for ax, L in zip(axes.flat, lengths):
            for level, (marker, label) in LEVEL_STYLE.items():
                bonds, values = _profile_series(rows, L, level)
                ax.plot(bonds, values, marker=marker, label=label)
            ax.set_title(f"L = {L}")
            ax.set_xlabel("bond index")
            ax.set_ylabel(MEASURE_LABEL[figure_id])
        axes.flat[0].legend(fontsize=7)
    else:
        fig, ax = plt.subplots(figsize=(4.8, 3.6), constrained_layout=True)
        for L in THERMAL_LENGTHS[figure_id]:
            temperatures, values = _thermal_series(rows, L)
            ax.plot(temperatures, values, label=f"L = {L}")
        ax.set_xlabel("temperature")
        ax.set_ylabel(MEASURE_LABEL[figure_id])
        ax.legend(fontsize=8)
    return fig


def render_figure(job: FigureJob) -> str:
    if job.figure_id not in (1, 2, 3, 4):
        raise RenderError(f"figure id must be 1..4, got {job.figure_id}")
    if job.image_format not in ("png", "svg"):
        raise RenderError(f"unsupported image format {job.image_format!r}")
    rows = load_rows(job.csv_path)
    fig = build_figure(job.figure_id, rows)
    try:
        fig.savefig(job.image_path, format=job.image_format, dpi=150)
    finally:
        plt.close(fig)
    return job.image_path


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="render",
                                     description="render an openchain figure CSV to an image")
    parser.add_argument("--figure", type=int, required=True, choices=(1, 2, 3, 4))
    parser.add_argument("--in", dest="csv_path", required=True, metavar="CSV")
    parser.add_argument("--out", dest="image_path", required=True, metavar="IMG")
    parser.add_argument("--fmt", choices=("png", "svg"), default="png")
    args = parser.parse_args(argv)
    job = FigureJob(figure_id=args.figure, csv_path=args.csv_path,
                    image_path=args.image_path, image_format=args.fmt)
    try:
        render_figure(job)
    except (RenderError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Angle-grid evaluation of the inequality margins in both modes.

The grid is the half-open cube [0, 2pi)^3 at uniform spacing (a closed grid
would double-count the periodic boundary). Evaluation runs plane by plane
over the a-axis, each plane vectorized with numpy, so a resolution-100
sweep streams instead of buffering 10^6 rows. Planes are independent, and
the min/count reductions are associative, so results do not depend on
evaluation order or on the number of worker processes.
"""

from __future__ import annotations

import csv
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import IO, Iterable

import numpy as np

from .analytic import (
    bell_margin_parts,
    half_angle_factor,
    wigner_margin_parts,
)
from .core import AngleConfig, AngleConvention, InequalityKind, Mode

# Counting threshold for violations, looser than the 1e-12 evaluation
# tolerance so accumulated trig error can never fake a violation.
VIOLATION_THRESHOLD = 1e-9

SWEEP_CSV_COLUMNS = ("a", "b", "bp", "kind", "mode", "lhs", "rhs", "margin")


@dataclass(frozen=True)
class SweepRecord:
    a: float
    b: float
    bp: float
    kind: InequalityKind
    mode: Mode
    lhs: float
    rhs: float
    margin: float

    def __post_init__(self) -> None:
        if self.margin != self.rhs - self.lhs:
            raise ValueError("margin must equal rhs - lhs")


@dataclass(frozen=True)
class SweepResult:
    kind: InequalityKind
    mode: Mode
    convention: AngleConvention
    resolution: int
    n_points: int
    min_margin: float
    argmin: AngleConfig
    violations: int
    records: tuple[SweepRecord, ...] | None = None


def grid_angles(resolution: int) -> np.ndarray:
    """Uniform half-open grid over [0, 2pi) with `resolution` points."""
    if resolution < 2:
        raise ValueError("resolution must be >= 2")
    return np.arange(resolution) * (2.0 * np.pi / resolution)


def _margin_planes(
    ia: int,
    resolution: int,
    convention: AngleConvention,
    kind: InequalityKind,
    mode: Mode,
) -> tuple[np.ndarray, np.ndarray]:
    """(lhs, rhs) planes over (b, bp) for the a-grid index `ia`."""
    if mode not in (Mode.PAPER, Mode.NAIVE):
        raise ValueError(f"grid sweeps take Mode.PAPER or Mode.NAIVE, got {mode!r}")
    angles = grid_angles(resolution)
    b, bp = np.meshgrid(angles, angles, indexing="ij")
    k = half_angle_factor(convention)
    if kind is InequalityKind.CORR_BELL:
        return bell_margin_parts(angles[ia], b, bp, k, mode)
    if kind is InequalityKind.WIGNER:
        return wigner_margin_parts(angles[ia], b, bp, k, mode)
    raise ValueError(f"grid sweeps evaluate CORR_BELL or WIGNER, got {kind!r}")


@dataclass(frozen=True)
class _PlaneSummary:
    ia: int
    min_margin: float
    argmin_flat: int
    violations: int


def _summarize_plane(
    args: tuple[int, int, AngleConvention, InequalityKind, Mode],
) -> _PlaneSummary:
    ia, resolution, convention, kind, mode = args
    lhs, rhs = _margin_planes(ia, resolution, convention, kind, mode)
    margin = rhs - lhs
    flat = int(np.argmin(margin))
    return _PlaneSummary(
        ia=ia,
        min_margin=float(margin.flat[flat]),
        argmin_flat=flat,
        violations=int((margin < -VIOLATION_THRESHOLD).sum()),
    )


def grid_sweep(
    resolution: int,
    convention: AngleConvention,
    kind: InequalityKind,
    mode: Mode,
    collect_records: bool = False,
    workers: int | None = None,
) -> SweepResult:
    """Evaluate one margin at every grid point; returns min, argmin, counts.

    `workers` > 1 distributes a-planes over processes; the reduction is in
    plane order, so the result is identical for any worker count. Record
    collection is gated off by default (resolution**3 rows).
    """
    angles = grid_angles(resolution)
    tasks = [(ia, resolution, convention, kind, mode) for ia in range(resolution)]
    if workers is not None and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            summaries = list(pool.map(_summarize_plane, tasks))
    else:
        summaries = [_summarize_plane(t) for t in tasks]

    best = summaries[0]
    violations = 0
    for s in summaries:
        violations += s.violations
        if s.min_margin < best.min_margin:
            best = s
    argmin = AngleConfig(
        a=float(angles[best.ia]),
        b=float(angles[best.argmin_flat // resolution]),
        bp=float(angles[best.argmin_flat % resolution]),
        convention=convention,
    )
    records = tuple(iter_records(resolution, convention, kind, mode)) if collect_records else None
    return SweepResult(
        kind=kind,
        mode=mode,
        convention=convention,
        resolution=resolution,
        n_points=resolution**3,
        min_margin=best.min_margin,
        argmin=argmin,
        violations=violations,
        records=records,
    )


def iter_records(
    resolution: int,
    convention: AngleConvention,
    kind: InequalityKind,
    mode: Mode,
) -> Iterable[SweepRecord]:
    """Stream every grid point as a SweepRecord, in (a, b, bp) index order."""
    angles = grid_angles(resolution)
    for ia in range(resolution):
        lhs, rhs = _margin_planes(ia, resolution, convention, kind, mode)
        margin = rhs - lhs
        for ib in range(resolution):
            for ibp in range(resolution):
                l = float(lhs[ib, ibp])
                r = float(rhs[ib, ibp])
                yield SweepRecord(
                    a=float(angles[ia]),
                    b=float(angles[ib]),
                    bp=float(angles[ibp]),
                    kind=kind,
                    mode=mode,
                    lhs=l,
                    rhs=r,
                    margin=float(margin[ib, ibp]),
                )


def write_records_csv(
    out: IO[str],
    resolution: int,
    convention: AngleConvention,
    kind: InequalityKind,
    mode: Mode,
) -> int:
    """Stream all grid records to `out` as CSV; returns the row count."""
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(SWEEP_CSV_COLUMNS)
    n = 0
    for rec in iter_records(resolution, convention, kind, mode):
        writer.writerow(
            (
                repr(rec.a),
                repr(rec.b),
                repr(rec.bp),
                rec.kind.name,
                rec.mode.name,
                repr(rec.lhs),
                repr(rec.rhs),
                repr(rec.margin),
            )
        )
        n += 1
    return n


def violation_census(
    resolution: int, convention: AngleConvention
) -> dict[tuple[InequalityKind, Mode], int]:
    """Violation counts (margin < -1e-9) for each inequality kind and mode."""
    census = {}
    for kind in (InequalityKind.CORR_BELL, InequalityKind.WIGNER):
        for mode in (Mode.PAPER, Mode.NAIVE):
            result = grid_sweep(resolution, convention, kind, mode)
            census[(kind, mode)] = result.violations
    return census

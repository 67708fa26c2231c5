"""Welfare sweeps over the budget: CSV rows, numeric cross-checks, SVG plots."""
from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import welfare as W
from .informed import REGIME_TOL
from .intervals import IntervalSet
from .uninformed import equilibrium_uninformed
from .voters import ModelParams, Politician, partisan_cutoffs, regime_boundary
from .errors import DomainError

log = logging.getLogger(__name__)

CSV_HEADER = (
    "alpha",
    "v",
    "regime",
    "welfare_informed_worst",
    "welfare_informed_best",
    "welfare_uninformed",
    "welfare_uninformed_ext",
    "cutoff_prop3",
    "cutoff_ext",
)
CURVES = ("informed", "uninformed", "uninformed-ext")
SELF_CHECK_TOL = 1e-8


@dataclass
class SweepConfig:
    alpha: Sequence[float] = (0.9,)
    v_min: float = 0.01
    v_max: float = 1.0
    v_steps: int = 100
    scenarios: Sequence[str] = CURVES
    output_path: Optional[str] = None
    emit_svg: bool = False

    def __post_init__(self):
        if isinstance(self.alpha, (int, float)):
            self.alpha = (float(self.alpha),)
        self.alpha = tuple(sorted(float(a) for a in self.alpha))
        for a in self.alpha:
            if not 0.0 < a < 1.0:
                raise DomainError(f"alpha must lie strictly between 0 and 1, got {a}")
        if not 0.0 < self.v_min < self.v_max <= 1.0:
            raise DomainError(f"need 0 < v_min < v_max <= 1, got {self.v_min}, {self.v_max}")
        if self.v_steps < 2:
            raise DomainError(f"v_steps must be at least 2, got {self.v_steps}")
        for s in self.scenarios:
            if s not in CURVES:
                raise DomainError(f"unknown scenario {s!r}; choose from {CURVES}")

    @property
    def budgets(self) -> np.ndarray:
        return np.linspace(self.v_min, self.v_max, self.v_steps)


@dataclass(frozen=True)
class SweepRow:
    alpha: float
    v: float
    report: W.WelfareReport
    cutoff: float
    cutoff_ext: float

    def cells(self) -> list[str]:
        r = self.report
        values = (
            r.alpha, r.v, r.regime, r.informed_worst, r.informed_best,
            r.uninformed, r.uninformed_ext, self.cutoff, self.cutoff_ext,
        )
        return [x if isinstance(x, str) else f"{x:.9g}" for x in values]


def sweep_rows(config: SweepConfig) -> list[SweepRow]:
    rows = []
    for a in config.alpha:
        cut, cut_ext = W.welfare_cutoff(a), W.welfare_cutoff_ext(a)
        boundary = regime_boundary(a)
        for v in config.budgets:
            v = float(v)
            if abs(v - boundary) <= REGIME_TOL:
                log.warning("skipping alpha=%g v=%.12g: on the regime boundary", a, v)
                continue
            rep = W.welfare_report(ModelParams(a, v))
            rows.append(SweepRow(a, v, rep, cut, cut_ext))
    return rows


def render_csv(rows: Sequence[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.cells())
    return buf.getvalue()


def numeric_row(row: SweepRow, grid_n: int = W.DEFAULT_GRID_N) -> dict[str, float]:
    """Quadrature welfare for every closed-form column of ``row``."""
    params = ModelParams(row.alpha, row.v)
    cut = partisan_cutoffs(params)
    inc = Politician.INCUMBENT
    out = {}
    if row.report.regime == W.SMALL_REGIME:
        worst = IntervalSet.single(0.5 - row.v, 0.5)
        best = IntervalSet.single(cut.left_cutoff, cut.left_cutoff + row.v)
        out["welfare_informed_worst"] = W.welfare_numeric(inc, worst, params, grid_n)
        out["welfare_informed_best"] = W.welfare_numeric(inc, best, params, grid_n)
    else:
        swing = IntervalSet.single(0.5, cut.right_cutoff)
        value = W.welfare_numeric(inc, swing, params, grid_n)
        out["welfare_informed_worst"] = out["welfare_informed_best"] = value
    s_i = equilibrium_uninformed(params).s_I
    out["welfare_uninformed"] = W.welfare_numeric(inc, s_i, params, grid_n)
    out["welfare_uninformed_ext"] = W.welfare_numeric(inc, row.v, params, grid_n)
    return out


def self_check(rows: Sequence[SweepRow], tol: float = SELF_CHECK_TOL) -> list[str]:
    """Return a message for every closed-form value quadrature disagrees with."""
    failures = []
    for row in rows:
        r = row.report
        closed = {
            "welfare_informed_worst": r.informed_worst,
            "welfare_informed_best": r.informed_best,
            "welfare_uninformed": r.uninformed,
            "welfare_uninformed_ext": r.uninformed_ext,
        }
        for name, value in numeric_row(row).items():
            if abs(value - closed[name]) > tol:
                failures.append(
                    f"alpha={row.alpha:g} v={row.v:.9g} {name}: closed {closed[name]:.12g} "
                    f"vs numeric {value:.12g}"
                )
    return failures


def render_svg(rows: Sequence[SweepRow], path, scenarios: Sequence[str] = CURVES) -> None:
    """Plot welfare against the budget, one panel per alpha."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    plt.rcParams["svg.hashsalt"] = "targeting"
    alphas = sorted({r.alpha for r in rows})
    fig, axes = plt.subplots(len(alphas), 1, figsize=(7, 4 * len(alphas)), squeeze=False)
    for ax, a in zip(axes[:, 0], alphas):
        sub = [r for r in rows if r.alpha == a]
        small = [r for r in sub if r.report.regime == W.SMALL_REGIME]
        large = [r for r in sub if r.report.regime == W.LARGE_REGIME]
        if "informed" in scenarios:
            if small:
                xs = [r.v for r in small]
                ax.plot(xs, [r.report.informed_worst for r in small], color="C0",
                        label="informed, worst case")
                ax.plot(xs, [r.report.informed_best for r in small], color="C0",
                        linestyle="--", label="informed, best case")
            if large:
                ax.plot([r.v for r in large], [r.report.informed_worst for r in large],
                        color="C0", label=None if small else "informed")
        if "uninformed" in scenarios:
            ax.plot([r.v for r in sub], [r.report.uninformed for r in sub], color="C1",
                    label="uninformed")
        if "uninformed-ext" in scenarios:
            ax.plot([r.v for r in sub], [r.report.uninformed_ext for r in sub], color="C2",
                    label="uninformed, voters unaware")
        ax.axvline(regime_boundary(a), color="grey", linewidth=0.8, linestyle=":")
        ax.set_title(f"alpha = {a:g}")
        ax.set_xlabel("budget v")
        ax.set_ylabel("social welfare of voters")
        ax.legend(loc="best")
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)

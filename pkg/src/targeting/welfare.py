"""Social welfare of voters: closed forms, a quadrature oracle, and cutoffs.

Welfare is the integral over voters of realised payoffs given the winner
and who receives the good. Unspent budget is worth nothing to voters.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy.optimize import bisect

from .errors import DomainError, OracleError, RegimeBoundaryError
from .informed import REGIME_TOL
from .intervals import IntervalSet
from .voters import ModelParams, Politician, regime_boundary

LARGE_BUDGET = "large_budget"
SMALL_BUDGET_WORST = "small_budget_worst"
SMALL_BUDGET_BEST = "small_budget_best"
SCENARIOS = (LARGE_BUDGET, SMALL_BUDGET_WORST, SMALL_BUDGET_BEST)

SMALL_REGIME = "small_budget"
LARGE_REGIME = "large_budget"

INFORMED = "informed"
UNINFORMED = "uninformed"
UNINFORMED_EXT = "uninformed_ext"
TIE = "tie"

DEFAULT_GRID_N = 100_000
COMPARE_TOL = 1e-12
BISECT_OFFSET = 1e-9


def _check_alpha(alpha):
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie strictly between 0 and 1, got {alpha}")


# Formula-level closed forms. These accept any v (including the regime
# boundary and v = 0) so that one-sided limits can be evaluated.

def large_budget_welfare(alpha: float) -> float:
    return (alpha**3 - 16 * alpha - 16) / (8 * (alpha + 2) ** 2)


def worst_case_welfare(alpha: float, v: float) -> float:
    return 0.5 * (alpha * v**2 + alpha * v - 1)


def best_case_welfare(alpha: float, v: float) -> float:
    a = alpha
    return (a**2 * (-(v**2)) + a * (2 * v**2 - 2 * v - 1) + 2) / (2 * (a - 2))


def uninformed_welfare(alpha: float, v: float) -> float:
    a = alpha
    return (a + a**2 * v - 4 * a * v + 2) / (a * (4 * v - 2) - 4)


def uninformed_ext_welfare(alpha: float, v: float) -> float:
    return 0.5 * (v * alpha - 1)


def welfare_informed_closed(params: ModelParams, scenario: str) -> float:
    if scenario not in SCENARIOS:
        raise DomainError(f"scenario must be one of {SCENARIOS}, got {scenario!r}")
    a, v = params.alpha, params.budget_v
    boundary = regime_boundary(a)
    if abs(v - boundary) <= REGIME_TOL:
        raise RegimeBoundaryError(f"v = {v:.12g} sits on the regime boundary")
    small = v < boundary
    if scenario == LARGE_BUDGET:
        if small:
            raise DomainError(f"large_budget welfare needs v > {boundary:.9g}, got {v:.9g}")
        return large_budget_welfare(a)
    if not small:
        raise DomainError(f"{scenario} welfare needs v < {boundary:.9g}, got {v:.9g}")
    if scenario == SMALL_BUDGET_WORST:
        return worst_case_welfare(a, v)
    return best_case_welfare(a, v)


def welfare_uninformed_closed(params: ModelParams) -> float:
    return uninformed_welfare(params.alpha, params.budget_v)


def welfare_uninformed_ext_closed(params: ModelParams) -> float:
    return uninformed_ext_welfare(params.alpha, params.budget_v)


def welfare_numeric(
    winner: Politician,
    allocation: Union[IntervalSet, float],
    params: ModelParams,
    grid_n: int = DEFAULT_GRID_N,
) -> float:
    """Midpoint-rule welfare with cells split at every interval endpoint.

    ``allocation`` is either the winner's targeted set or, for uninformed
    politicians, the share of voters served uniformly at random.
    """
    if grid_n < 1000:
        raise DomainError(f"grid_n must be at least 1000, got {grid_n}")
    a = params.alpha
    edges = np.linspace(0.0, 1.0, grid_n + 1)
    if isinstance(allocation, IntervalSet):
        ends = [x for pair in allocation for x in pair]
        if ends:
            edges = np.union1d(edges, ends)
    widths = np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])

    if Politician(winner) is Politician.INCUMBENT:
        values = -(1 - mid)
    else:
        values = -mid
    if isinstance(allocation, IntervalSet):
        covered = np.zeros(mid.shape, dtype=bool)
        for lo, hi in allocation:
            covered |= (mid > lo) & (mid < hi)
        values = values + a * (1 - mid) * covered
    else:
        share = float(allocation)
        if not 0.0 <= share <= 1.0:
            raise DomainError(f"share must lie in [0, 1], got {share}")
        values = values + share * a * (1 - mid)
    return float(np.sum(values * widths))


def welfare_cutoff(alpha: float) -> float:
    """Budget above which uninformed politicians give voters higher welfare."""
    _check_alpha(alpha)
    a = alpha
    cut = (-(a**3) - 6 * a**2 - 8 * a) / (2 * a**3 - 16 * a - 32)
    if not cut > regime_boundary(a):
        raise OracleError(
            f"cutoff {cut:.12g} does not exceed the regime boundary {regime_boundary(a):.12g}"
        )
    return cut


def welfare_cutoff_bisect(alpha: float, tol: float = 1e-12) -> float:
    """Locate the same cutoff by bisection on the welfare difference."""
    _check_alpha(alpha)
    if tol < 1e-12:
        raise DomainError(f"tol must be at least 1e-12, got {tol}")
    informed = large_budget_welfare(alpha)

    def gap(v):
        return uninformed_welfare(alpha, v) - informed

    lo = regime_boundary(alpha) + BISECT_OFFSET
    hi = 1.0
    if np.sign(gap(lo)) == np.sign(gap(hi)):
        raise OracleError(
            f"no sign change of the welfare gap on [{lo:.9g}, {hi}] at alpha={alpha}"
        )
    return bisect(gap, lo, hi, xtol=tol)


def welfare_cutoff_ext(alpha: float) -> float:
    _check_alpha(alpha)
    cut = regime_boundary(alpha)
    if not 0.0 < cut < 1.0:
        raise OracleError(f"extension cutoff {cut:.12g} is not strictly inside (0, 1)")
    return cut


@dataclass(frozen=True)
class WelfareReport:
    """Voter welfare in every scenario at one ``(alpha, v)``.

    In the small-budget regime ``informed_value`` is the worst-case bound,
    which is what the informed/uninformed comparison uses. In the large
    budget regime worst and best coincide.
    """

    alpha: float
    v: float
    regime: str
    informed_worst: float
    informed_best: float
    informed_value: float
    uninformed: float
    uninformed_ext: float
    better_scenario: str
    better_scenario_ext: str


def _better(informed, other, other_label):
    if abs(informed - other) <= COMPARE_TOL:
        return TIE
    return INFORMED if informed > other else other_label


def welfare_report(params: ModelParams) -> WelfareReport:
    a, v = params.alpha, params.budget_v
    boundary = regime_boundary(a)
    if abs(v - boundary) <= REGIME_TOL:
        raise RegimeBoundaryError(f"v = {v:.12g} sits on the regime boundary")
    if v < boundary:
        regime = SMALL_REGIME
        worst = worst_case_welfare(a, v)
        best = best_case_welfare(a, v)
    else:
        regime = LARGE_REGIME
        worst = best = large_budget_welfare(a)
    un = uninformed_welfare(a, v)
    ext = uninformed_ext_welfare(a, v)
    return WelfareReport(
        alpha=a,
        v=v,
        regime=regime,
        informed_worst=worst,
        informed_best=best,
        informed_value=worst,
        uninformed=un,
        uninformed_ext=ext,
        better_scenario=_better(worst, un, UNINFORMED),
        better_scenario_ext=_better(worst, ext, UNINFORMED_EXT),
    )

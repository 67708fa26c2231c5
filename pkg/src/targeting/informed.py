"""Informed politicians: each promises the good to an interval set of voters.

Only swing voters respond to promises. On the left swing region ``(L, 1/2)``
a voter backs the Incumbent exactly when she alone is targeted by the
Incumbent; on the right swing region ``(1/2, R)`` a voter backs the
Challenger exactly when she alone is targeted by the Challenger. Everything
else is fixed by ideology, which gives the Incumbent a baseline of 1/2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DomainError, RegimeBoundaryError
from .intervals import IntervalSet, difference, intersect, union
from .report import Verdict, VerificationReport
from .voters import ModelParams, Politician, partisan_cutoffs

TOL = 1e-9
# Incumbent wins ties; shares within TOL of 1/2 count as ties.
WIN_TOL = 1e-9
REGIME_TOL = 1e-12

WORST_CASE = "worst_case"
BEST_CASE = "best_case"
PLACEMENTS = (WORST_CASE, BEST_CASE)


@dataclass(frozen=True)
class SwingDecomposition:
    X: IntervalSet
    Y: IntervalSet
    waste: float


@dataclass(frozen=True)
class InformedProfile:
    S_I: IntervalSet
    S_C: IntervalSet
    params: ModelParams

    def __post_init__(self):
        v = self.params.budget_v
        for name, s in (("S_I", self.S_I), ("S_C", self.S_C)):
            if s.measure > v + TOL:
                raise DomainError(f"{name} costs {s.measure:.9g}, above the budget {v:.9g}")


@dataclass(frozen=True)
class InformedOutcome:
    incumbent_share: float
    winner: Politician
    payoff_I: float
    payoff_C: float

    @property
    def challenger_share(self) -> float:
        return 1.0 - self.incumbent_share


class WinningCost(NamedTuple):
    """Cheapest spend that wins; ``math.inf`` marks that no strategy wins."""

    cost: float
    attainable: bool

    @property
    def feasible(self) -> bool:
        return not math.isinf(self.cost)


def _regions(params):
    cut = partisan_cutoffs(params)
    left = IntervalSet.single(cut.left_cutoff, 0.5)
    right = IntervalSet.single(0.5, cut.right_cutoff)
    return left, right


def decompose(s: IntervalSet, params: ModelParams) -> SwingDecomposition:
    left, right = _regions(params)
    x = intersect(s, left)
    y = intersect(s, right)
    waste = max(0.0, s.measure - x.measure - y.measure)
    return SwingDecomposition(x, y, waste)


def incumbent_vote_share(profile: InformedProfile) -> float:
    di = decompose(profile.S_I, profile.params)
    dc = decompose(profile.S_C, profile.params)
    return 0.5 - difference(dc.Y, di.Y).measure + difference(di.X, dc.X).measure


def outcome(profile: InformedProfile) -> InformedOutcome:
    share = incumbent_vote_share(profile)
    v = profile.params.budget_v
    if share >= 0.5 - WIN_TOL:
        return InformedOutcome(share, Politician.INCUMBENT, v - profile.S_I.measure, 0.0)
    return InformedOutcome(share, Politician.CHALLENGER, 0.0, v - profile.S_C.measure)


def _check_regime(params):
    if abs(params.budget_v - params.regime_boundary) <= REGIME_TOL:
        raise RegimeBoundaryError(
            f"v = {params.budget_v:.12g} equals the regime boundary "
            f"(1+a)/(2+a) - 1/2 = {params.regime_boundary:.12g}; no equilibrium "
            "construction is defined there"
        )


def is_small_budget(params: ModelParams) -> bool:
    _check_regime(params)
    return params.budget_v < params.regime_boundary


def equilibrium_informed_at(params: ModelParams, start: float) -> InformedProfile:
    """Small-budget equilibrium with the Incumbent targeting ``[start, start + v]``.

    Any placement inside the left swing region is an equilibrium; the
    Challenger's set is canonicalised to ``[1/2, 1/2 + v]``.
    """
    if not is_small_budget(params):
        raise DomainError("placement offsets only exist in the small-budget regime")
    v = params.budget_v
    cut = partisan_cutoffs(params)
    if start < cut.left_cutoff - TOL or start + v > 0.5 + TOL:
        raise DomainError(
            f"[{start:.9g}, {start + v:.9g}] leaves the left swing region "
            f"[{cut.left_cutoff:.9g}, 0.5]"
        )
    start = min(max(start, cut.left_cutoff), 0.5 - v)
    return InformedProfile(
        IntervalSet.single(start, start + v), IntervalSet.single(0.5, 0.5 + v), params
    )


def equilibrium_informed(params: ModelParams, placement: str = WORST_CASE) -> InformedProfile:
    if placement not in PLACEMENTS:
        raise DomainError(f"placement must be one of {PLACEMENTS}, got {placement!r}")
    cut = partisan_cutoffs(params)
    if is_small_budget(params):
        v = params.budget_v
        start = 0.5 - v if placement == WORST_CASE else cut.left_cutoff
        return equilibrium_informed_at(params, start)
    swing = IntervalSet.single(0.5, cut.right_cutoff)
    return InformedProfile(swing, swing, params)


def min_winning_cost_incumbent(s_c: IntervalSet, params: ModelParams) -> float:
    """Cheapest Incumbent spend that still wins against ``s_c``.

    Covering the Challenger's right-swing promises restores the 1/2 baseline;
    buying uncovered left-swing voters instead trades one-for-one, so it is
    never cheaper.
    """
    return decompose(s_c, params).Y.measure


def min_winning_cost_challenger(s_i: IntervalSet, params: ModelParams) -> WinningCost:
    """Infimum of Challenger spends that win against ``s_i``.

    The Challenger needs a strict majority, so he must match ``X_I`` and add a
    positive amount of right-swing mass the Incumbent left untouched. The
    infimum ``mu(X_I)`` is therefore never attained.
    """
    d = decompose(s_i, params)
    _, right = _regions(params)
    free_right = difference(right, d.Y).measure
    if free_right <= 0.0:
        return WinningCost(math.inf, False)
    return WinningCost(d.X.measure, False)


def _prefix(s: IntervalSet, mass: float) -> IntervalSet:
    """Leftmost subset of ``s`` with the given measure."""
    out = []
    remaining = mass
    for lo, hi in s:
        if remaining <= 0:
            break
        take = min(hi - lo, remaining)
        out.append((lo, lo + take))
        remaining -= take
    return IntervalSet(tuple(out))


def _challenger_deviation(s_i, params, spend_cap):
    """Cheapest-style winning Challenger set costing less than ``spend_cap``."""
    d = decompose(s_i, params)
    _, right = _regions(params)
    free = difference(right, d.Y)
    eps = min(free.measure, (spend_cap - d.X.measure) / 2)
    return union(d.X, _prefix(free, eps))


def is_equilibrium_informed(profile: InformedProfile, tol: float = TOL) -> VerificationReport:
    params = profile.params
    v = params.budget_v
    out = outcome(profile)
    violations = []
    witness = None
    witness_player = None

    if out.winner is Politician.INCUMBENT:
        actual = profile.S_I.measure
        min_cost = min_winning_cost_incumbent(profile.S_C, params)
        if actual > min_cost + tol:
            violations.append(
                f"Incumbent spends {actual:.9g} but could win with {min_cost:.9g}"
            )
            witness, witness_player = decompose(profile.S_C, params).Y, "Incumbent"
        chal = min_winning_cost_challenger(profile.S_I, params)
        _, right = _regions(params)
        free_right = difference(right, decompose(profile.S_I, params).Y).measure
        loser_can_win = chal.feasible and chal.cost < v - tol and free_right > tol
        if loser_can_win:
            violations.append(
                f"Challenger can win spending just above {chal.cost:.9g} < v = {v:.9g}"
            )
            if witness is None:
                witness = _challenger_deviation(profile.S_I, params, v)
                witness_player = "Challenger"
    else:
        actual = profile.S_C.measure
        min_cost = min_winning_cost_challenger(profile.S_I, params).cost
        if actual > min_cost + tol:
            violations.append(
                f"Challenger spends {actual:.9g} but could win spending just above {min_cost:.9g}"
            )
            witness = _challenger_deviation(profile.S_I, params, actual)
            witness_player = "Challenger"
        inc_cost = min_winning_cost_incumbent(profile.S_C, params)
        loser_can_win = inc_cost < v - tol
        if loser_can_win:
            violations.append(f"Incumbent can win spending {inc_cost:.9g} < v = {v:.9g}")
            if witness is None:
                witness, witness_player = decompose(profile.S_C, params).Y, "Incumbent"

    verdict = Verdict.NOT_EQUILIBRIUM if violations else Verdict.EQUILIBRIUM
    return VerificationReport(
        verdict=verdict,
        winner=out.winner.value,
        winner_min_cost=min_cost,
        winner_actual_cost=actual,
        loser_can_win_under_budget=loser_can_win,
        witness_deviation=witness,
        witness_player=witness_player,
        violations=violations,
        notes=f"incumbent share {out.incumbent_share:.9g}",
    )

"""Brute-force equilibrium checks on discretised strategy spaces.

The informed game is discretised into cells covering the two swing
regions. Vote totals come from calling the voter heuristic at each cell's
midpoint and summing cell masses, so nothing here relies on the analytic
vote-share or best-response formulas it is used to check. The uninformed
games are checked by scanning every player's share over a uniform grid.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional

import numpy as np

from .errors import GridAlignmentError, GridCapacityError
from .informed import InformedProfile
from .intervals import IntervalSet, intersect
from .report import Verdict, VerificationReport
from .uninformed import WIN_TOL as UNINFORMED_WIN_TOL
from .uninformed import (
    UninformedProfile,
    eta,
    indifferent_voter_ext,
    outcome_uninformed,
    outcome_uninformed_ext,
)
from .voters import ModelParams, Politician, partisan_cutoffs, vote

DEFAULT_TOL = 1e-9
EXHAUSTIVE_LIMIT = 20
COST_TIE = 1e-12

EXHAUSTIVE = "exhaustive"
COUNT = "count"
AUTO = "auto"


@dataclass(frozen=True)
class GridGame:
    """Cells partitioning ``(L, 1/2)`` and ``(1/2, R)``.

    ``left_edges`` and ``right_edges`` are the increasing cell boundaries of
    each swing region. Cells are indexed left region first.
    """

    params: ModelParams
    left_edges: tuple[float, ...]
    right_edges: tuple[float, ...]

    @classmethod
    def uniform(cls, params: ModelParams, n_left: int = 8, n_right: int = 8) -> "GridGame":
        cut = partisan_cutoffs(params)
        left = np.linspace(cut.left_cutoff, 0.5, n_left + 1)
        right = np.linspace(0.5, cut.right_cutoff, n_right + 1)
        return cls(params, tuple(left), tuple(right))

    @classmethod
    def aligned(
        cls, profile: InformedProfile, n_left: int = 8, n_right: int = 8, tol: float = DEFAULT_TOL
    ) -> "GridGame":
        """Grid whose cell boundaries include every endpoint of both strategies.

        Leftover cells go to whichever segment currently has the widest cells.
        """
        cut = partisan_cutoffs(profile.params)
        ends = sorted(x for s in (profile.S_I, profile.S_C) for pair in s for x in pair)
        left = _split_region(cut.left_cutoff, 0.5, ends, n_left, tol)
        right = _split_region(0.5, cut.right_cutoff, ends, n_right, tol)
        return cls(profile.params, left, right)

    @property
    def n_left(self) -> int:
        return len(self.left_edges) - 1

    @property
    def n_right(self) -> int:
        return len(self.right_edges) - 1

    @property
    def n_cells(self) -> int:
        return self.n_left + self.n_right

    @property
    def bounds(self) -> list[tuple[float, float]]:
        edges = (self.left_edges, self.right_edges)
        return [(e[i], e[i + 1]) for e in edges for i in range(len(e) - 1)]

    @property
    def cell_masses(self) -> np.ndarray:
        return np.array([hi - lo for lo, hi in self.bounds])

    def is_left(self, cell: int) -> bool:
        return cell < self.n_left

    def cells_of(self, s: IntervalSet, tol: float = DEFAULT_TOL) -> frozenset[int]:
        """Cells covered by ``s``; raises if ``s`` cuts a cell partway."""
        out = set()
        for k, (lo, hi) in enumerate(self.bounds):
            covered = intersect(s, IntervalSet.single(lo, hi)).measure
            if covered >= (hi - lo) - tol:
                out.add(k)
            elif covered > tol:
                raise GridAlignmentError(
                    f"strategy {s} covers {covered:.3g} of cell [{lo:.9g}, {hi:.9g}]"
                )
        return frozenset(out)

    def to_intervals(self, cells) -> IntervalSet:
        bounds = self.bounds
        return IntervalSet(tuple(bounds[k] for k in sorted(cells)))

    def _base_share(self) -> float:
        """Incumbent votes from the partisan blocks, nobody targeted there."""
        cut = partisan_cutoffs(self.params)
        lo_mass, hi_mass = cut.left_cutoff, 1 - cut.right_cutoff
        lo_vote = vote(cut.left_cutoff / 2, False, False, self.params)
        hi_vote = vote((1 + cut.right_cutoff) / 2, False, False, self.params)
        return lo_mass * lo_vote.incumbent_weight + hi_mass * hi_vote.incumbent_weight

    def _vote_table(self) -> np.ndarray:
        """``table[k, by_I, by_C]``: Incumbent weight of cell ``k``'s midpoint voter."""
        table = np.empty((self.n_cells, 2, 2))
        for k, (lo, hi) in enumerate(self.bounds):
            mid = 0.5 * (lo + hi)
            for by_i, by_c in itertools.product((0, 1), repeat=2):
                table[k, by_i, by_c] = vote(mid, bool(by_i), bool(by_c), self.params).incumbent_weight
        return table

    def incumbent_share(self, cells_i, cells_c) -> float:
        table = self._vote_table()
        masses = self.cell_masses
        share = self._base_share()
        for k in range(self.n_cells):
            share += masses[k] * table[k, int(k in cells_i), int(k in cells_c)]
        return share


def _split_region(lo, hi, ends, n, tol):
    cuts = [lo] + [x for x in ends if lo + tol < x < hi - tol] + [hi]
    cuts = [x for i, x in enumerate(cuts) if i == 0 or x - cuts[i - 1] > tol]
    if cuts[-1] != hi:
        cuts[-1] = hi
    segments = list(zip(cuts[:-1], cuts[1:]))
    if len(segments) > n:
        raise GridAlignmentError(
            f"strategies need {len(segments)} cells in [{lo:.9g}, {hi:.9g}] but only {n} are available"
        )
    counts = [1] * len(segments)
    while sum(counts) < n:
        widest = max(range(len(segments)), key=lambda i: (segments[i][1] - segments[i][0]) / counts[i])
        counts[widest] += 1
    edges = [lo]
    for (a, b), c in zip(segments, counts):
        edges.extend(np.linspace(a, b, c + 1)[1:].tolist())
    edges[-1] = hi
    return tuple(edges)


class BestResponse(NamedTuple):
    min_cost: float
    best_subset: Optional[tuple[int, ...]]
    wins: bool


@lru_cache(maxsize=8)
def _all_subsets(n: int) -> np.ndarray:
    codes = np.arange(2**n, dtype=np.int64)
    return ((codes[:, None] >> np.arange(n)) & 1).astype(bool)


def _wins(share, role, tol):
    # The Incumbent wins ties; the Challenger needs a strict majority.
    if role is Politician.INCUMBENT:
        return share >= 0.5 - tol
    return share < 0.5 - tol


def _pick(costs, subsets_of, winning):
    """Cheapest winning option; cost ties go to the lexicographically smallest subset."""
    idx = np.flatnonzero(winning)
    if idx.size == 0:
        return BestResponse(math.inf, None, False)
    best = costs[idx].min()
    tied = idx[costs[idx] <= best + COST_TIE]
    subset = min(subsets_of(i) for i in tied)
    return BestResponse(float(best), subset, True)


def grid_best_response(
    opponent_cells,
    role: Politician,
    game: GridGame,
    mode: str = AUTO,
    tol: float = DEFAULT_TOL,
) -> BestResponse:
    """Cheapest own cell subset that wins against ``opponent_cells``.

    ``exhaustive`` enumerates all ``2**n`` subsets. ``count`` enumerates how
    many cells to take from each of the four classes (left/right region,
    free/covered by the opponent); it needs equal-mass cells within each
    region so that cells in a class are interchangeable.
    """
    role = Politician(role)
    opp = frozenset(opponent_cells)
    n = game.n_cells
    if mode == AUTO:
        mode = EXHAUSTIVE if n <= EXHAUSTIVE_LIMIT else COUNT
    table = game._vote_table()
    masses = game.cell_masses
    opp_bits = np.array([k in opp for k in range(n)], dtype=int)
    cells = np.arange(n)
    if role is Politician.INCUMBENT:
        w_take = table[cells, 1, opp_bits]
        w_skip = table[cells, 0, opp_bits]
    else:
        w_take = table[cells, opp_bits, 1]
        w_skip = table[cells, opp_bits, 0]
    base = game._base_share() + float(masses @ w_skip)
    gain = masses * (w_take - w_skip)

    if mode == EXHAUSTIVE:
        if n > EXHAUSTIVE_LIMIT:
            raise GridCapacityError(
                f"exhaustive mode handles at most {EXHAUSTIVE_LIMIT} cells, got {n}"
            )
        subsets = _all_subsets(n)
        costs = subsets @ masses
        shares = base + subsets @ gain
        return _pick(costs, lambda i: tuple(np.flatnonzero(subsets[i]).tolist()),
                     _wins(shares, role, tol))

    if mode != COUNT:
        raise ValueError(f"unknown mode {mode!r}")
    for region in (masses[: game.n_left], masses[game.n_left:]):
        if region.size and np.ptp(region) > COST_TIE:
            raise GridCapacityError("count mode needs equal-mass cells within each region")
    classes = [
        [k for k in range(n) if game.is_left(k) and k not in opp],
        [k for k in range(n) if game.is_left(k) and k in opp],
        [k for k in range(n) if not game.is_left(k) and k not in opp],
        [k for k in range(n) if not game.is_left(k) and k in opp],
    ]
    cost_axes = [np.concatenate(([0.0], np.cumsum(masses[c]))) for c in classes]
    gain_axes = [np.concatenate(([0.0], np.cumsum(gain[c]))) for c in classes]
    costs = sum(np.ix_(*cost_axes))
    shares = base + sum(np.ix_(*gain_axes))
    shape = costs.shape

    def subset_of(flat):
        counts = np.unravel_index(flat, shape)
        return tuple(sorted(int(k) for c, m in zip(classes, counts) for k in c[:m]))

    return _pick(costs.ravel(), subset_of, _wins(shares.ravel(), role, tol))


def verify_equilibrium_grid(
    profile: InformedProfile,
    game: Optional[GridGame] = None,
    tol: float = DEFAULT_TOL,
    n_left: int = 8,
    n_right: int = 8,
    mode: str = AUTO,
) -> VerificationReport:
    """Search the grid for a profitable deviation from ``profile``.

    Without an explicit ``game`` the grid is aligned to the profile's
    endpoints. Spending on partisan voters counts towards cost but changes
    no votes, so it sits outside the grid.
    """
    if game is None:
        game = GridGame.aligned(profile, n_left, n_right, tol)
    v = profile.params.budget_v
    cells_i = game.cells_of(profile.S_I, tol)
    cells_c = game.cells_of(profile.S_C, tol)
    share = game.incumbent_share(cells_i, cells_c)
    if share >= 0.5 - tol:
        winner, loser = Politician.INCUMBENT, Politician.CHALLENGER
        actual, winner_cells, loser_cells = profile.S_I.measure, cells_i, cells_c
    else:
        winner, loser = Politician.CHALLENGER, Politician.INCUMBENT
        actual, winner_cells, loser_cells = profile.S_C.measure, cells_c, cells_i

    violations = []
    witness = witness_player = None
    best_w = grid_best_response(loser_cells, winner, game, mode, tol)
    if actual > best_w.min_cost + tol:
        violations.append(
            f"{winner.value} spends {actual:.9g} but wins on the grid with {best_w.min_cost:.9g}"
        )
        witness, witness_player = game.to_intervals(best_w.best_subset), winner.value
    best_l = grid_best_response(winner_cells, loser, game, mode, tol)
    loser_can_win = best_l.wins and best_l.min_cost < v - tol
    if loser_can_win:
        violations.append(
            f"{loser.value} loses but wins on the grid spending {best_l.min_cost:.9g} < v = {v:.9g}"
        )
        if witness is None:
            witness, witness_player = game.to_intervals(best_l.best_subset), loser.value

    return VerificationReport(
        verdict=Verdict.NOT_EQUILIBRIUM if violations else Verdict.EQUILIBRIUM,
        winner=winner.value,
        winner_min_cost=min(best_w.min_cost, actual),
        winner_actual_cost=actual,
        loser_can_win_under_budget=loser_can_win,
        witness_deviation=witness,
        witness_player=witness_player,
        violations=violations,
        notes=f"grid {game.n_left}+{game.n_right} cells, incumbent share {share:.9g}",
    )


def verify_uninformed_grid(
    profile: UninformedProfile,
    grid_points: int = 1000,
    tol: float = DEFAULT_TOL,
    extension: bool = False,
) -> VerificationReport:
    """Scan unilateral share deviations ``s' in {0, 1/g, ..., 1}`` for both players.

    ``extension=True`` uses the game where voters do not learn their draw.
    """
    if grid_points < 100:
        raise ValueError(f"grid_points must be at least 100, got {grid_points}")
    settle = outcome_uninformed_ext if extension else outcome_uninformed
    current = settle(profile)
    grid = np.linspace(0.0, 1.0, grid_points + 1)
    params, v = profile.params, profile.params.budget_v
    winner = current.winner
    actual = profile.s_I if winner is Politician.INCUMBENT else profile.s_C

    violations = []
    witness = witness_player = None
    winner_min = actual
    loser_can_win = False
    for player in (Politician.INCUMBENT, Politician.CHALLENGER):
        mine = player is Politician.INCUMBENT
        s_i = grid if mine else np.full_like(grid, profile.s_I)
        s_c = np.full_like(grid, profile.s_C) if mine else grid
        if extension:
            share = 1 - indifferent_voter_ext(s_i, s_c, params)
        else:
            share = eta(s_i, s_c, params)
        inc_wins = share >= 0.5 - UNINFORMED_WIN_TOL
        wins = inc_wins if mine else ~inc_wins
        pay = np.where(wins, v - grid, 0.0)
        now = current.payoff_I if mine else current.payoff_C
        if wins.any():
            if player is winner:
                winner_min = min(winner_min, float(grid[wins].min()))
            elif (wins & (grid < v - tol)).any():
                loser_can_win = True
        k = int(np.argmax(pay))
        gain = float(pay[k]) - now
        if gain > tol:
            violations.append(
                f"{player.value} gains {gain:.9g} by deviating to s = {grid[k]:.9g}"
            )
            if witness is None:
                witness, witness_player = float(grid[k]), player.value

    return VerificationReport(
        verdict=Verdict.NOT_EQUILIBRIUM if violations else Verdict.EQUILIBRIUM,
        winner=winner.value,
        winner_min_cost=winner_min,
        winner_actual_cost=actual,
        loser_can_win_under_budget=loser_can_win,
        witness_deviation=witness,
        witness_player=witness_player,
        violations=violations,
        notes=f"{grid_points + 1}-point share scan"
        + (", voters unaware of draws" if extension else ""),
    )

import math

import numpy as np
import pytest

from targeting import (
    GridAlignmentError,
    GridCapacityError,
    GridGame,
    IntervalSet,
    InformedProfile,
    ModelParams,
    Politician,
    UninformedProfile,
    equilibrium_informed,
    equilibrium_uninformed,
    equilibrium_uninformed_ext,
    grid_best_response,
    min_winning_cost_challenger,
    min_winning_cost_incumbent,
    partisan_cutoffs,
    verify_equilibrium_grid,
    verify_uninformed_grid,
)
from targeting.informed import BEST_CASE, WORST_CASE

S = IntervalSet.single
INC, CHAL = Politician.INCUMBENT, Politician.CHALLENGER


def test_uniform_grid_partitions_swing_regions():
    p = ModelParams(0.9, 0.1)
    g = GridGame.uniform(p, 8, 8)
    cut = partisan_cutoffs(p)
    m = g.cell_masses
    assert len(m) == 16
    assert m[:8].sum() == pytest.approx(0.5 - cut.left_cutoff, abs=1e-12)
    assert m[8:].sum() == pytest.approx(cut.right_cutoff - 0.5, abs=1e-12)


def test_aligned_grid_keeps_cell_count_and_endpoints():
    prof = equilibrium_informed(ModelParams(0.9, 0.1), WORST_CASE)
    g = GridGame.aligned(prof, 8, 8)
    assert g.n_left == 8 and g.n_right == 8
    assert 0.4 in g.left_edges and 0.6 in g.right_edges
    assert g.cells_of(prof.S_I) and g.to_intervals(g.cells_of(prof.S_I)) == prof.S_I


def test_alignment_errors():
    p = ModelParams(0.9, 0.1)
    g = GridGame.uniform(p, 8, 8)
    with pytest.raises(GridAlignmentError):
        g.cells_of(S(0.4, 0.5))
    crowded = InformedProfile(IntervalSet.parse("0.1,0.11;0.2,0.21;0.3,0.31"), IntervalSet(), p)
    with pytest.raises(GridAlignmentError):
        GridGame.aligned(crowded, 4, 4)


def _two_cell_game():
    p = ModelParams(0.9, 0.1)
    cut = partisan_cutoffs(p)
    left = tuple(np.linspace(cut.left_cutoff, 0.5, 9))
    right = (0.5, 0.55, 0.6) + tuple(np.linspace(0.6, cut.right_cutoff, 7)[1:])
    return GridGame(p, left, right)


def test_best_response_examples():
    g = _two_cell_game()
    assert g.n_left == 8 and g.n_right == 8
    br = grid_best_response({8, 9}, INC, g)
    assert br.wins and br.min_cost == pytest.approx(0.10, abs=1e-12)
    assert br.best_subset == (8, 9)

    full = GridGame.uniform(ModelParams(0.9, 0.3), 8, 8)
    br = grid_best_response(range(8, 16), CHAL, full)
    assert not br.wins and math.isinf(br.min_cost) and br.best_subset is None

    br = grid_best_response(set(), INC, full)
    assert br.wins and br.min_cost == 0 and br.best_subset == ()


def _brute_force(opp, role, game):
    """Plain itertools enumeration using the midpoint voter of every cell."""
    from itertools import combinations

    from targeting import vote

    p = game.params
    cut = partisan_cutoffs(p)
    base = cut.left_cutoff * vote(cut.left_cutoff / 2, False, False, p).incumbent_weight
    base += (1 - cut.right_cutoff) * vote((1 + cut.right_cutoff) / 2, False, False, p).incumbent_weight
    best = None
    for r in range(game.n_cells + 1):
        for own in combinations(range(game.n_cells), r):
            share = base
            for k, (lo, hi) in enumerate(game.bounds):
                by_i = k in (own if role is INC else opp)
                by_c = k in (opp if role is INC else own)
                share += (hi - lo) * vote((lo + hi) / 2, by_i, by_c, p).incumbent_weight
            wins = share >= 0.5 - 1e-9 if role is INC else share < 0.5 - 1e-9
            cost = sum(game.bounds[k][1] - game.bounds[k][0] for k in own)
            if wins and (best is None or cost < best - 1e-12):
                best = cost
    return best


@pytest.mark.parametrize("alpha", [0.2, 0.9])
def test_matches_plain_brute_force(alpha, rng):
    g = GridGame.uniform(ModelParams(alpha, 1.0), 4, 5)
    for _ in range(6):
        opp = set(np.flatnonzero(rng.random(g.n_cells) < 0.5).tolist())
        for role in (INC, CHAL):
            expected = _brute_force(opp, role, g)
            br = grid_best_response(opp, role, g)
            if expected is None:
                assert not br.wins
            else:
                assert br.wins and br.min_cost == pytest.approx(expected, abs=1e-12)


def test_challenger_substitutes_cheaper_right_cells():
    g = GridGame.uniform(ModelParams(0.9, 0.1), 8, 8)
    m = g.cell_masses
    br = grid_best_response({5, 6}, CHAL, g)
    # One covered left cell plus three free right cells beats matching both left cells.
    assert br.min_cost == pytest.approx(m[5] + 3 * m[8], abs=1e-12)
    assert m[5] + m[6] <= br.min_cost <= m[5] + m[6] + m.max()
    assert br.best_subset == (5, 8, 9, 10)


def test_capacity_errors():
    g = GridGame.uniform(ModelParams(0.9, 0.1), 12, 12)
    with pytest.raises(GridCapacityError):
        grid_best_response(set(), INC, g, mode="exhaustive")
    prof = equilibrium_informed(ModelParams(0.9, 0.1), WORST_CASE)
    uneven = GridGame.aligned(prof, 8, 8)
    with pytest.raises(GridCapacityError):
        grid_best_response(set(), INC, uneven, mode="count")


@pytest.mark.parametrize("alpha", [0.1, 0.5, 0.9])
@pytest.mark.parametrize("n", [(3, 5), (6, 6), (8, 8), (10, 10)])
def test_exhaustive_and_count_modes_agree(alpha, n, rng):
    g = GridGame.uniform(ModelParams(alpha, 1.0), *n)
    for _ in range(10):
        opp = set(np.flatnonzero(rng.random(g.n_cells) < 0.4).tolist())
        for role in (INC, CHAL):
            a = grid_best_response(opp, role, g, mode="exhaustive")
            b = grid_best_response(opp, role, g, mode="count")
            assert a.wins == b.wins
            if a.wins:
                assert a.min_cost == pytest.approx(b.min_cost, abs=1e-12)


def test_count_mode_scales():
    g = GridGame.uniform(ModelParams(0.9, 1.0), 64, 64)
    br = grid_best_response(set(range(64, 80)), INC, g)
    assert br.min_cost == pytest.approx(g.cell_masses[64:80].sum(), abs=1e-12)


def test_best_response_is_deterministic(rng):
    g = GridGame.uniform(ModelParams(0.5, 1.0), 6, 6)
    opp = {1, 7}
    first = grid_best_response(opp, CHAL, g)
    assert all(grid_best_response(opp, CHAL, g) == first for _ in range(3))


@pytest.mark.parametrize("alpha", [0.1, 0.5, 0.9])
def test_analytic_costs_within_one_cell(alpha, rng):
    g = GridGame.uniform(ModelParams(alpha, 1.0), 8, 8)
    cell = g.cell_masses.max()
    for _ in range(40):
        opp = set(np.flatnonzero(rng.random(g.n_cells) < 0.5).tolist())
        opp_set = g.to_intervals(opp)
        br = grid_best_response(opp, INC, g)
        assert abs(br.min_cost - min_winning_cost_incumbent(opp_set, g.params)) <= cell
        br = grid_best_response(opp, CHAL, g)
        analytic = min_winning_cost_challenger(opp_set, g.params)
        assert br.wins == analytic.feasible
        if br.wins:
            assert analytic.cost <= br.min_cost <= analytic.cost + cell + 1e-12


def test_verify_grid_examples():
    rep = verify_equilibrium_grid(equilibrium_informed(ModelParams(0.9, 0.1), WORST_CASE))
    assert rep.is_equilibrium
    assert verify_equilibrium_grid(equilibrium_informed(ModelParams(0.9, 0.1), BEST_CASE))
    assert verify_equilibrium_grid(equilibrium_informed(ModelParams(0.9, 0.3)))
    bad = InformedProfile(S(0.45, 0.5), S(0.5, 0.6), ModelParams(0.9, 0.1))
    rep = verify_equilibrium_grid(bad)
    assert not rep and rep.winner == "Challenger"
    assert rep.witness_deviation is not None and rep.witness_deviation.measure < 0.1


def test_verify_grid_explicit_game_alignment():
    prof = equilibrium_informed(ModelParams(0.9, 0.1), WORST_CASE)
    with pytest.raises(GridAlignmentError):
        verify_equilibrium_grid(prof, game=GridGame.uniform(prof.params, 8, 8))


def test_verify_grid_flags_profitable_loser():
    p = ModelParams(0.9, 0.1)
    prof = InformedProfile(S(0.45, 0.5), IntervalSet(), p)
    rep = verify_equilibrium_grid(prof)
    assert not rep and rep.loser_can_win_under_budget


def test_verify_uninformed_examples():
    p = ModelParams(0.9, 0.1)
    assert verify_uninformed_grid(equilibrium_uninformed(p), 1000)
    rep = verify_uninformed_grid(UninformedProfile(0.1, 0.1, p), 1000)
    assert not rep and rep.witness_player == "Incumbent"
    assert rep.witness_deviation < 0.1
    ext = equilibrium_uninformed_ext(ModelParams(0.9, 0.3))
    assert verify_uninformed_grid(ext, 1000, extension=True)
    with pytest.raises(ValueError):
        verify_uninformed_grid(ext, 50)


def test_base_equilibrium_fails_in_extension():
    # With voters unaware of their draws, the base-game Incumbent share loses.
    p = ModelParams(0.9, 0.3)
    rep = verify_uninformed_grid(equilibrium_uninformed(p), 1000, extension=True)
    assert not rep and rep.winner == "Challenger"
    assert rep.winner_min_cost < rep.winner_actual_cost


def test_report_invariant_matches_verdict():
    for prof in (
        equilibrium_informed(ModelParams(0.9, 0.1)),
        InformedProfile(S(0.45, 0.5), S(0.5, 0.6), ModelParams(0.9, 0.1)),
    ):
        rep = verify_equilibrium_grid(prof)
        expected = rep.winner_actual_cost <= rep.winner_min_cost + 1e-9 and not rep.loser_can_win_under_budget
        assert rep.is_equilibrium == expected

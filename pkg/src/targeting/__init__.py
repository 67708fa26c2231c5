"""Targeted public-good promises in a two-candidate election.

Informed politicians promise the good to chosen sets of voters; uninformed
politicians only choose how many voters to serve. The package solves both
games, verifies equilibria with an independent brute-force oracle, and
compares voter welfare across scenarios.
"""
from .errors import (
    DomainError,
    GridAlignmentError,
    GridCapacityError,
    OracleError,
    RegimeBoundaryError,
)
from .informed import (
    InformedOutcome,
    InformedProfile,
    SwingDecomposition,
    WinningCost,
    decompose,
    equilibrium_informed,
    equilibrium_informed_at,
    incumbent_vote_share,
    is_equilibrium_informed,
    min_winning_cost_challenger,
    min_winning_cost_incumbent,
    outcome,
)
from .intervals import IntervalSet, contains, difference, intersect, measure, normalize, union
from .report import Verdict, VerificationReport
from .uninformed import (
    UninformedOutcome,
    UninformedProfile,
    equilibrium_uninformed,
    equilibrium_uninformed_ext,
    eta,
    indifferent_voter_ext,
    outcome_uninformed,
    outcome_uninformed_ext,
)
from .verifier import GridGame, grid_best_response, verify_equilibrium_grid, verify_uninformed_grid
from .voters import (
    ModelParams,
    PartisanCutoffs,
    Politician,
    VoteChoice,
    partisan_cutoffs,
    regime_boundary,
    vote,
    voter_payoff,
)
from .welfare import (
    WelfareReport,
    welfare_cutoff,
    welfare_cutoff_bisect,
    welfare_cutoff_ext,
    welfare_informed_closed,
    welfare_numeric,
    welfare_report,
    welfare_uninformed_closed,
    welfare_uninformed_ext_closed,
)

__version__ = "0.1.0"

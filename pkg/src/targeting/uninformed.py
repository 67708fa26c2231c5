"""Uninformed politicians: each picks only the share of voters to serve.

In the base game the good is allocated uniformly at random and every voter
learns her draw before voting; vote shares are exact expectations over the
four draw classes. In the extension voters do not learn their draw and
vote on expected benefit, which leaves a single indifferent voter.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError
from .voters import ModelParams, Politician, partisan_cutoffs

WIN_TOL = 1e-9


@dataclass(frozen=True)
class UninformedProfile:
    s_I: float
    s_C: float
    params: ModelParams

    def __post_init__(self):
        _check_shares(self.s_I, self.s_C)


@dataclass(frozen=True)
class UninformedOutcome:
    incumbent_share: float
    winner: Politician
    payoff_I: float
    payoff_C: float
    indifferent_voter: Optional[float] = None


def _check_shares(s_i, s_c):
    for name, s in (("s_I", s_i), ("s_C", s_c)):
        if not np.all((0.0 <= np.asarray(s)) & (np.asarray(s) <= 1.0)):
            raise DomainError(f"{name} must lie in [0, 1], got {s}")


def eta(s_i, s_c, params: ModelParams):
    """Expected Incumbent vote share when voters know their draws.

    Shares may be scalars or numpy arrays.
    """
    _check_shares(s_i, s_c)
    cut = partisan_cutoffs(params)
    right_partisans = 1 - cut.right_cutoff
    right_swing = cut.right_cutoff - 0.5
    left_swing = 0.5 - cut.left_cutoff
    return (
        right_partisans
        + right_swing * (1 - s_c * (1 - s_i))
        + left_swing * (1 - s_c) * s_i
    )


def equilibrium_uninformed(params: ModelParams) -> UninformedProfile:
    a, v = params.alpha, params.budget_v
    s_i = (2 - a) * v / (a * (1 - 2 * v) + 2)
    return UninformedProfile(s_i, v, params)


def _settle(share, s_i, s_c, v, t_hat=None):
    if share >= 0.5 - WIN_TOL:
        return UninformedOutcome(share, Politician.INCUMBENT, v - s_i, 0.0, t_hat)
    return UninformedOutcome(share, Politician.CHALLENGER, 0.0, v - s_c, t_hat)


def outcome_uninformed(profile: UninformedProfile) -> UninformedOutcome:
    share = eta(profile.s_I, profile.s_C, profile.params)
    return _settle(share, profile.s_I, profile.s_C, profile.params.budget_v)


def indifferent_voter_ext(s_i, s_c, params: ModelParams):
    """Position where expected payoffs under both winners coincide.

    Voters to the right back the Incumbent.
    """
    _check_shares(s_i, s_c)
    d = params.alpha * (s_c - s_i)
    return (1 + d) / (2 + d)


def outcome_uninformed_ext(profile: UninformedProfile) -> UninformedOutcome:
    t_hat = indifferent_voter_ext(profile.s_I, profile.s_C, profile.params)
    return _settle(1 - t_hat, profile.s_I, profile.s_C, profile.params.budget_v, t_hat)


def equilibrium_uninformed_ext(params: ModelParams) -> UninformedProfile:
    v = params.budget_v
    return UninformedProfile(v, v, params)

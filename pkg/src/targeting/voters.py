"""Voter preferences over winners and public-good promises.

A voter at position ``t`` in [0, 1] is ideologically ``t`` away from the
Challenger (at 0) and ``1 - t`` away from the Incumbent (at 1). Receiving
the public good adds ``alpha * (1 - t)``, so poorer voters (low ``t``)
value it more.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DomainError


class Politician(str, enum.Enum):
    INCUMBENT = "Incumbent"
    CHALLENGER = "Challenger"

    def other(self) -> "Politician":
        return Politician.CHALLENGER if self is Politician.INCUMBENT else Politician.INCUMBENT


class VoteChoice(str, enum.Enum):
    INCUMBENT = "Incumbent"
    CHALLENGER = "Challenger"
    SPLIT = "Split"

    @property
    def incumbent_weight(self) -> float:
        """Fraction of this voter's mass that goes to the Incumbent."""
        return {"Incumbent": 1.0, "Challenger": 0.0, "Split": 0.5}[self.value]


@dataclass(frozen=True)
class ModelParams:
    """Public-good importance ``alpha`` in (0, 1) and budget ``v`` in (0, 1]."""

    alpha: float
    budget_v: float

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"alpha must lie strictly between 0 and 1, got {self.alpha}")
        if not 0.0 < self.budget_v <= 1.0:
            raise DomainError(f"budget v must lie in (0, 1], got {self.budget_v}")

    @property
    def v(self) -> float:
        return self.budget_v

    @property
    def cutoffs(self) -> "PartisanCutoffs":
        return partisan_cutoffs(self)

    @property
    def regime_boundary(self) -> float:
        return regime_boundary(self.alpha)


@dataclass(frozen=True)
class PartisanCutoffs:
    left_cutoff: float
    right_cutoff: float

    @property
    def left_swing(self) -> tuple[float, float]:
        return (self.left_cutoff, 0.5)

    @property
    def right_swing(self) -> tuple[float, float]:
        return (0.5, self.right_cutoff)

    @property
    def left_swing_mass(self) -> float:
        return 0.5 - self.left_cutoff

    @property
    def right_swing_mass(self) -> float:
        return self.right_cutoff - 0.5


def _cutoffs_for(alpha: float) -> PartisanCutoffs:
    return PartisanCutoffs((1 - alpha) / (2 - alpha), (1 + alpha) / (2 + alpha))


def partisan_cutoffs(params: ModelParams) -> PartisanCutoffs:
    """Voters left of ``L`` always back the Challenger, right of ``R`` the Incumbent."""
    return _cutoffs_for(params.alpha)


def regime_boundary(alpha: float) -> float:
    """Budget ``R - 1/2`` separating the small- and large-budget equilibria."""
    return (1 + alpha) / (2 + alpha) - 0.5


def voter_payoff(t: float, winner: Politician, receives_good: bool, params: ModelParams) -> float:
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"voter position must lie in [0, 1], got {t}")
    good = params.alpha * (1 - t) if receives_good else 0.0
    if Politician(winner) is Politician.INCUMBENT:
        return -(1 - t) + good
    return -t + good


def vote(t: float, offered_by_I: bool, offered_by_C: bool, params: ModelParams) -> VoteChoice:
    """Heuristic vote: back whichever winner gives the higher payoff; exact ties split."""
    u_inc = voter_payoff(t, Politician.INCUMBENT, offered_by_I, params)
    u_chal = voter_payoff(t, Politician.CHALLENGER, offered_by_C, params)
    if u_inc > u_chal:
        return VoteChoice.INCUMBENT
    if u_chal > u_inc:
        return VoteChoice.CHALLENGER
    return VoteChoice.SPLIT

"""Verdicts shared by the analytic checker and the grid oracle."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Optional


class Verdict(str, enum.Enum):
    EQUILIBRIUM = "equilibrium"
    NOT_EQUILIBRIUM = "not_equilibrium"


@dataclass
class VerificationReport:
    verdict: Verdict
    winner: str
    winner_min_cost: float
    winner_actual_cost: float
    loser_can_win_under_budget: bool
    witness_deviation: Optional[Any] = None
    witness_player: Optional[str] = None
    violations: list[str] = field(default_factory=list)
    notes: str = ""

    @property
    def is_equilibrium(self) -> bool:
        return self.verdict is Verdict.EQUILIBRIUM

    def __bool__(self):
        return self.is_equilibrium

    def render(self) -> str:
        lines = [
            f"verdict: {self.verdict.value}",
            f"winner: {self.winner}",
            f"winner_actual_cost: {self.winner_actual_cost:.9g}",
            f"winner_min_cost: {self.winner_min_cost:.9g}",
            f"loser_can_win_under_budget: {str(self.loser_can_win_under_budget).lower()}",
        ]
        for v in self.violations:
            lines.append(f"violation: {v}")
        if self.witness_deviation is not None:
            lines.append(f"witness ({self.witness_player}): {self.witness_deviation}")
        if self.notes:
            lines.append(f"notes: {self.notes}")
        return "\n".join(lines)

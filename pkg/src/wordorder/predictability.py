"""Predictability of the head and of its dependents as a function of head position.

Only the extremes are fixed: putting the head last makes it as predictable as
possible, putting it first does the same for the dependents. In between the
scores interpolate linearly, as the fraction of dependents already seen
before the head (or still to come after it).
"""

from __future__ import annotations

from dataclasses import dataclass

from .costs import DomainError, _check_position


@dataclass(frozen=True)
class PredictabilityScores:
    head_score: float
    dependent_score: float

    def __post_init__(self):
        for name in ("head_score", "dependent_score"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise DomainError(f"{name} must lie in [0, 1], got {value}")


def head_predictability(n: int, l: int) -> float:
    _check_position(n, l)
    return (l - 1) / n


def dependent_predictability(n: int, l: int) -> float:
    _check_position(n, l)
    return (n + 1 - l) / n


def predictability_scores(n: int, l: int) -> PredictabilityScores:
    return PredictabilityScores(head_predictability(n, l), dependent_predictability(n, l))

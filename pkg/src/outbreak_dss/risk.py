"""Test-quality rates and impact-weighted decision risk."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CountExceedsPopulation,
    EmptyDenominator,
    RateOutOfRange,
    RiskError,
    ZeroPopulation,
)


@dataclass(frozen=True)
class ConfusionCounts:
    """Outcome counts of a diagnostic test against ground truth."""

    fp: int
    tn: int
    fn: int
    tp: int

    def __post_init__(self):
        for field in ("fp", "tn", "fn", "tp"):
            if getattr(self, field) < 0:
                raise RiskError(f"{field} must be nonnegative", code="NEGATIVE_COUNT")


@dataclass(frozen=True)
class ImpactWeights:
    """Relative harm of each decision outcome, on any common scale.

    Defaults rank an undetected infectious person worst and a correctly
    cleared healthy person best.
    """

    undetected: float = 4.0
    detected: float = 3.0
    quarantined: float = 2.0
    cleared: float = 1.0

    def __post_init__(self):
        for field in ("undetected", "detected", "quarantined", "cleared"):
            if getattr(self, field) < 0:
                raise RiskError(f"{field} impact must be nonnegative",
                                code="NEGATIVE_IMPACT")


@dataclass(frozen=True)
class RiskScores:
    risk_p: float  # expected impact of calling a person positive-tested
    risk_n: float  # expected impact of calling a person negative-tested


def error_rates(counts: ConfusionCounts) -> tuple[float, float]:
    """False positive and false negative rates from confusion counts."""
    negatives = counts.fp + counts.tn
    positives = counts.fn + counts.tp
    if negatives == 0:
        raise EmptyDenominator("no true-negative-class samples; FPR undefined")
    if positives == 0:
        raise EmptyDenominator("no true-positive-class samples; FNR undefined")
    return counts.fp / negatives, counts.fn / positives


def infection_rate(infected: float, population: float, k: float = 100.0) -> float:
    """Scaled infection rate ``k * infected / population``."""
    if population <= 0:
        raise ZeroPopulation(f"population must be positive, got {population!r}")
    if infected < 0:
        raise RiskError(f"infected count must be nonnegative, got {infected!r}",
                        code="NEGATIVE_COUNT")
    if infected > population:
        raise CountExceedsPopulation(
            f"infected count {infected!r} exceeds population {population!r}"
        )
    return k * infected / population


def risk_scores(fpr: float, fnr: float, impacts: ImpactWeights | None = None) -> RiskScores:
    """Expected impact of each test outcome.

    The positive-side score weighs the chance an infectious person slips
    through undetected (FNR) against a correct detection; the negative
    side weighs a false alarm (FPR, needless quarantine) against a
    correct clearance.
    """
    if impacts is None:
        impacts = ImpactWeights()
    for label, rate in (("fpr", fpr), ("fnr", fnr)):
        if not 0.0 <= rate <= 1.0:
            raise RateOutOfRange(f"{label} must lie in [0, 1], got {rate!r}")
    risk_p = impacts.undetected * fnr + impacts.detected * (1.0 - fnr)
    risk_n = impacts.quarantined * fpr + impacts.cleared * (1.0 - fpr)
    return RiskScores(risk_p=risk_p, risk_n=risk_n)

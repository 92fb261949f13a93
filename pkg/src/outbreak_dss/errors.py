"""Typed domain errors with stable machine-readable codes.

Every expected failure carries a ``code`` string that survives the HTTP
and CLI boundaries unchanged, so callers can branch on failures without
parsing prose. Messages are for humans and may evolve; codes may not.
"""


class DomainError(Exception):
    """Base class for every expected failure raised by this package."""

    code = "DOMAIN_ERROR"

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code

    @property
    def message(self) -> str:
        return str(self)


class ModelError(DomainError):
    """Structural problem in a network definition or model file."""

    code = "INVALID_MODEL"


class CycleDetected(ModelError):
    code = "CYCLE_DETECTED"


class UnnormalizedRow(ModelError):
    code = "UNNORMALIZED_ROW"


class DanglingReference(ModelError):
    code = "DANGLING_REFERENCE"


class QueryError(DomainError):
    """Invalid query or evidence against a valid network."""

    code = "INVALID_QUERY"


class UnknownVariable(QueryError):
    code = "UNKNOWN_VARIABLE"


class UnknownState(QueryError):
    code = "EVIDENCE_UNKNOWN_STATE"


class TargetInEvidence(QueryError):
    code = "TARGET_IN_EVIDENCE"


class ImpossibleEvidence(QueryError):
    code = "IMPOSSIBLE_EVIDENCE"


class StateSpaceTooLarge(QueryError):
    code = "STATE_SPACE_TOO_LARGE"


class MissingStateValue(QueryError):
    code = "MISSING_STATE_VALUE"


class FormulaError(DomainError):
    """Domain violation in a closed-form calibration rule."""

    code = "FORMULA_ERROR"


class ZeroBeta(FormulaError):
    code = "ZERO_BETA"


class NonpositivePi(FormulaError):
    code = "NONPOSITIVE_PI"


class DegenerateRate(FormulaError):
    code = "DEGENERATE_RATE"


class RateOutOfRange(FormulaError):
    code = "RATE_OUT_OF_RANGE"


class RiskError(DomainError):
    code = "RISK_ERROR"


class EmptyDenominator(RiskError):
    code = "EMPTY_DENOMINATOR"


class ZeroPopulation(RiskError):
    code = "ZERO_POPULATION"


class CountExceedsPopulation(RiskError):
    code = "COUNT_EXCEEDS_POPULATION"


class SessionNotFound(DomainError):
    code = "SESSION_NOT_FOUND"


class StorageUnavailable(DomainError):
    code = "STORAGE_UNAVAILABLE"


class ScenarioNotFound(DomainError):
    code = "SCENARIO_NOT_FOUND"

"""Bayesian decision support for shipboard outbreak response.

Builds a discrete causal network calibrated on the USS Theodore
Roosevelt COVID-19 outbreak survey, answers exact posterior queries
over it, scores test-policy risk and replays the published what-if
sweeps. See ``builder.build_roosevelt_model`` for the model and
``cli`` or ``service`` for the front ends.
"""

from .builder import (
    DemographicRates,
    ModelConfig,
    PreventionMeasure,
    SymptomTable,
    TestRates,
    build_roosevelt_model,
)
from .formulas import cumulative_pi, has_covid_prob, preventive_index, snap_to_grid, vulnerability
from .inference import Posterior, expectation, joint_enumeration, posterior
from .network import Cpt, Network, Variable, build_network
from .risk import ConfusionCounts, ImpactWeights, RiskScores, error_rates, infection_rate, risk_scores
from .scenarios import Scenario, ScenarioResult, builtin_scenarios, emit_report, run_scenario

__all__ = [
    "Cpt",
    "ConfusionCounts",
    "DemographicRates",
    "ImpactWeights",
    "ModelConfig",
    "Network",
    "Posterior",
    "PreventionMeasure",
    "RiskScores",
    "Scenario",
    "ScenarioResult",
    "SymptomTable",
    "TestRates",
    "Variable",
    "build_network",
    "build_roosevelt_model",
    "builtin_scenarios",
    "cumulative_pi",
    "emit_report",
    "error_rates",
    "expectation",
    "has_covid_prob",
    "infection_rate",
    "joint_enumeration",
    "posterior",
    "preventive_index",
    "risk_scores",
    "run_scenario",
    "snap_to_grid",
    "vulnerability",
]

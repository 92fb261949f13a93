"""Assemble the shipboard outbreak network from calibration data.

Node layout (15 variables):

    HandWash ... KeepingDistance   7 binary behaviors, survey priors
            |
    PreventionIndex                snapped cumulative index, one-hot rows
            |
    HasCovid <- InfectionRate      uniform decile grid over the rate
            ^
    Vulnerable <- Gender, Age      closed-form vulnerability rows
            |
    Symptoms, Test                 survey-calibrated observation nodes

Every conditional table is produced by the closed-form rules in
``formulas``; this module only wires them into tables in the row order
the network container expects (odometer over parents, last fastest).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping, Sequence

import numpy as np

from . import survey
from .errors import ModelError
from .formulas import cumulative_pi, has_covid_prob, preventive_index, snap_to_grid, vulnerability
from .network import Cpt, Network, Variable, build_network

NO, YES = "No", "Yes"

# knowledge tier of each node: calibrated directly from data, computed
# by a closed-form rule, or inferred as the diagnostic target
GROUP_PRIOR = "prior"
GROUP_COMPUTED = "computed"
GROUP_INFERRED = "inferred"


@dataclass(frozen=True)
class PreventionMeasure:
    """One surveyed behavior with its infection rates in percent."""

    name: str
    alpha: float      # infection rate among those following the behavior
    beta: float       # infection rate among those not following it
    prior_yes: float  # fraction of the population following it

    def __post_init__(self):
        if not 0.0 <= self.prior_yes <= 1.0:
            raise ModelError(f"prior_yes for {self.name!r} must lie in [0, 1]")

    @property
    def pi(self) -> float:
        return preventive_index(self.alpha, self.beta)


@dataclass(frozen=True)
class DemographicRates:
    """Attack rates and population shares by age band and gender."""

    age_rates: Mapping[str, float]
    gender_rates: Mapping[str, float]
    age_priors: Mapping[str, float]
    gender_priors: Mapping[str, float]

    def __post_init__(self):
        for label, priors in (("age", self.age_priors), ("gender", self.gender_priors)):
            total = sum(priors.values())
            if abs(total - 1.0) > 1e-9:
                raise ModelError(f"{label} priors sum to {total!r}, expected 1")
        if set(self.age_rates) != set(self.age_priors):
            raise ModelError("age rates and priors must cover the same bands")
        if set(self.gender_rates) != set(self.gender_priors):
            raise ModelError("gender rates and priors must cover the same groups")


@dataclass(frozen=True)
class SymptomTable:
    """Symptom-count distribution conditioned on infection status."""

    levels: tuple[str, ...]
    given_not_infected: tuple[float, ...]
    given_infected: tuple[float, ...]

    def __post_init__(self):
        if not (len(self.levels) == len(self.given_not_infected) == len(self.given_infected)):
            raise ModelError("symptom rows must match the level list")


@dataclass(frozen=True)
class TestRates:
    fpr: float
    fnr: float


@dataclass(frozen=True)
class ModelConfig:
    """Grid and rule settings for the assembled network."""

    # snapped cumulative-index states; covers every achievable profile
    pi_grid: tuple[float, ...] = tuple(round(0.9 + 0.1 * k, 1) for k in range(15))
    # uniform infection-rate deciles in percent; the published sweep
    # tables imply a mean rate of 45%, i.e. ten states 0..90, not eleven
    ir_percents: tuple[int, ...] = tuple(range(0, 100, 10))
    # index of an empty behavior profile
    base_pi: float = 1.0
    # numeric vulnerability level per Vulnerable state (No, Yes)
    vulnerable_levels: tuple[int, int] = (0, 1)

    def __post_init__(self):
        for seq, label in ((self.pi_grid, "pi_grid"), (self.ir_percents, "ir_percents")):
            if len(seq) == 0:
                raise ModelError(f"{label} must be nonempty")
            for a, b in zip(seq, seq[1:]):
                if not b > a:
                    raise ModelError(f"{label} must be strictly increasing")
        if not all(0 <= p <= 100 for p in self.ir_percents):
            raise ModelError("ir_percents must lie in [0, 100]")

    @property
    def pi_labels(self) -> tuple[str, ...]:
        return tuple(f"{g:.1f}" for g in self.pi_grid)

    @property
    def ir_labels(self) -> tuple[str, ...]:
        return tuple(str(p) for p in self.ir_percents)


def default_measures() -> tuple[PreventionMeasure, ...]:
    """The seven surveyed behaviors, rates taken from exact counts."""
    out = []
    for name, yes, infected_yes, infected_no in survey.BEHAVIOR_COUNTS:
        no = survey.TOTAL - yes
        out.append(PreventionMeasure(
            name=name,
            alpha=100.0 * infected_yes / yes,
            beta=100.0 * infected_no / no,
            prior_yes=yes / survey.TOTAL,
        ))
    return tuple(out)


def default_demographics() -> DemographicRates:
    return DemographicRates(
        age_rates=dict(survey.AGE_RATES),
        gender_rates=dict(survey.GENDER_RATES),
        age_priors={band: survey.AGE_COUNTS[band] / survey.TOTAL for band in survey.AGE_BANDS},
        gender_priors={g: survey.GENDER_COUNTS[g] / survey.TOTAL for g in survey.GENDERS},
    )


def default_symptoms() -> SymptomTable:
    total_not = sum(survey.SYMPTOMS_NOT_INFECTED)
    total_inf = sum(survey.SYMPTOMS_INFECTED)
    return SymptomTable(
        levels=survey.SYMPTOM_LEVELS,
        given_not_infected=tuple(c / total_not for c in survey.SYMPTOMS_NOT_INFECTED),
        given_infected=tuple(c / total_inf for c in survey.SYMPTOMS_INFECTED),
    )


def default_test_rates() -> TestRates:
    return TestRates(
        fpr=survey.TEST_FP / (survey.TEST_FP + survey.TEST_TN),
        fnr=survey.TEST_FN / (survey.TEST_FN + survey.TEST_TP),
    )


def prevention_metadata(
    measures: Sequence[PreventionMeasure],
    base_pi: float = 1.0,
) -> dict:
    """Exact per-measure and per-profile indices, for clients.

    The snapped one-hot table inside the network only keeps one decimal
    of the cumulative index, so clients that display the exact value get
    this table instead: entry ``i`` of ``cumulative`` is the profile
    whose bit ``b`` (1 << b) is set when measure ``order[b]`` is taken.
    """
    order = tuple(m.name for m in measures)
    indices = {m.name: m.pi for m in measures}
    cumulative = []
    for mask in range(1 << len(order)):
        profile = {name: bool(mask >> b & 1) for b, name in enumerate(order)}
        cumulative.append(cumulative_pi(profile, indices, base=base_pi))
    return {"order": list(order), "indices": indices, "cumulative": cumulative}


def node_groups(measures: Sequence[PreventionMeasure]) -> dict[str, str]:
    groups = {m.name: GROUP_PRIOR for m in measures}
    groups.update({
        "PreventionIndex": GROUP_COMPUTED,
        "Gender": GROUP_PRIOR,
        "Age": GROUP_PRIOR,
        "Vulnerable": GROUP_COMPUTED,
        "InfectionRate": GROUP_PRIOR,
        "HasCovid": GROUP_INFERRED,
        "Symptoms": GROUP_PRIOR,
        "Test": GROUP_PRIOR,
    })
    return groups


def build_roosevelt_model(
    config: ModelConfig | None = None,
    measures: Sequence[PreventionMeasure] | None = None,
    demographics: DemographicRates | None = None,
    symptoms: SymptomTable | None = None,
    test_rates: TestRates | None = None,
) -> Network:
    """Build the full outbreak network from calibration inputs.

    Any argument left as None falls back to the survey defaults, so the
    zero-argument call reproduces the shipboard model exactly.
    """
    config = config or ModelConfig()
    measures = tuple(measures if measures is not None else default_measures())
    demographics = demographics or default_demographics()
    symptoms = symptoms or default_symptoms()
    test_rates = test_rates or default_test_rates()

    if len(measures) == 0:
        raise ModelError("at least one prevention measure is required")
    names = [m.name for m in measures]
    if len(set(names)) != len(names):
        raise ModelError("measure names must be unique")

    indices = {m.name: m.pi for m in measures}
    variables = []
    cpts = []

    for m in measures:
        variables.append(Variable(m.name, (NO, YES)))
        cpts.append(Cpt(m.name, (), np.array([[1.0 - m.prior_yes, m.prior_yes]])))

    # one-hot rows: each behavior profile snaps its exact cumulative
    # index onto the grid; grid must catch every profile within half a step
    grid = config.pi_grid
    step = min(b - a for a, b in zip(grid, grid[1:])) if len(grid) > 1 else float("inf")
    pi_rows = []
    for combo in product((NO, YES), repeat=len(measures)):
        profile = {name: state == YES for name, state in zip(names, combo)}
        exact = cumulative_pi(profile, indices, base=config.base_pi)
        idx = snap_to_grid(exact, grid)
        if abs(exact - grid[idx]) > step / 2 + 1e-12:
            raise ModelError(
                f"pi grid does not cover achievable index {exact:.4f}; "
                "extend the grid"
            )
        row = np.zeros(len(grid))
        row[idx] = 1.0
        pi_rows.append(row)
    variables.append(Variable("PreventionIndex", config.pi_labels))
    cpts.append(Cpt("PreventionIndex", tuple(names), np.array(pi_rows)))

    genders = tuple(demographics.gender_priors)
    bands = tuple(demographics.age_priors)
    variables.append(Variable("Gender", genders))
    cpts.append(Cpt("Gender", (), np.array([[demographics.gender_priors[g] for g in genders]])))
    variables.append(Variable("Age", bands))
    cpts.append(Cpt("Age", (), np.array([[demographics.age_priors[a] for a in bands]])))

    vul_rows = []
    for g, a in product(genders, bands):
        v = vulnerability(demographics.age_rates[a], demographics.gender_rates[g])
        vul_rows.append([1.0 - v, v])
    variables.append(Variable("Vulnerable", (NO, YES)))
    cpts.append(Cpt("Vulnerable", ("Gender", "Age"), np.array(vul_rows)))

    ir_labels = config.ir_labels
    variables.append(Variable("InfectionRate", ir_labels))
    cpts.append(Cpt("InfectionRate", (),
                    np.full((1, len(ir_labels)), 1.0 / len(ir_labels))))

    covid_rows = []
    for ir_pct, pi_value, v_state in product(config.ir_percents, grid, (NO, YES)):
        level = config.vulnerable_levels[0 if v_state == NO else 1]
        p = has_covid_prob(ir_pct / 100.0, pi_value, level)
        covid_rows.append([1.0 - p, p])
    variables.append(Variable("HasCovid", (NO, YES)))
    cpts.append(Cpt("HasCovid", ("InfectionRate", "PreventionIndex", "Vulnerable"),
                    np.array(covid_rows)))

    variables.append(Variable("Symptoms", tuple(symptoms.levels)))
    cpts.append(Cpt("Symptoms", ("HasCovid",),
                    np.array([symptoms.given_not_infected, symptoms.given_infected])))

    variables.append(Variable("Test", ("negative", "positive")))
    cpts.append(Cpt("Test", ("HasCovid",),
                    np.array([[1.0 - test_rates.fpr, test_rates.fpr],
                              [test_rates.fnr, 1.0 - test_rates.fnr]])))

    return build_network(variables, cpts)

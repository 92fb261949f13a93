"""Built-in what-if sweeps over the outbreak network.

Each scenario fixes some evidence, sweeps one or two variables through
chosen states (None leaves the variable unobserved) and reports one
number per combination: either the posterior probability of a target
state in percent, or the posterior mean of a numerically-labeled
target. Published survey figures ride along as reference values, loaded
from small CSVs bundled next to the model, so reports show computed and
reference side by side with the absolute difference.
"""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from .errors import DomainError, ScenarioNotFound
from .inference import expectation, posterior
from .network import Network

NO_EVIDENCE_LABEL = "No Evidence"


@dataclass(frozen=True)
class SweepAxis:
    variable: str
    values: tuple[str | None, ...]


@dataclass(frozen=True)
class Scenario:
    id: int
    name: str
    description: str
    fixed: tuple[tuple[str, str], ...]
    axes: tuple[SweepAxis, ...]
    target: str
    target_state: str | None = None       # probability-of-state mode
    numeric_target: bool = False          # expectation mode over numeric labels


@dataclass(frozen=True)
class ResultRow:
    labels: tuple[str, ...]
    computed: float
    reference: float | None

    @property
    def abs_diff(self) -> float | None:
        return None if self.reference is None else abs(self.computed - self.reference)


@dataclass(frozen=True)
class ScenarioResult:
    scenario: Scenario
    columns: tuple[str, ...]
    rows: tuple[ResultRow, ...]


def _snake(name: str) -> str:
    return re.sub(r"(?<!^)([A-Z])", r"_\1", name).lower()


def builtin_scenarios() -> tuple[Scenario, ...]:
    symptom_sweep = ("0", "1-3", "4-5", "6-8", ">8", None)
    return (
        Scenario(
            id=1,
            name="prevention-sweep",
            description="Infection chance across prevention index and "
                        "vulnerability while the infection rate is held at 70%.",
            fixed=(("InfectionRate", "70"),),
            axes=(SweepAxis("Vulnerable", ("Yes", "No", None)),
                  SweepAxis("PreventionIndex", ("0.9", "1.0", "1.5", "2.0", "2.3", None))),
            target="HasCovid",
            target_state="Yes",
        ),
        Scenario(
            id=2,
            name="symptom-count",
            description="Infection chance for each self-reported symptom level.",
            fixed=(),
            axes=(SweepAxis("Symptoms", symptom_sweep),),
            target="HasCovid",
            target_state="Yes",
        ),
        Scenario(
            id=3,
            name="vulnerability-by-status",
            description="Vulnerability posterior for infected, cleared and "
                        "undiagnosed crew members.",
            fixed=(),
            axes=(SweepAxis("HasCovid", ("Yes", "No", None)),),
            target="Vulnerable",
            target_state="Yes",
        ),
        Scenario(
            id=4,
            name="expected-infection-rate",
            description="Posterior mean infection rate in percent by "
                        "prevention index and symptom level.",
            fixed=(),
            axes=(SweepAxis("PreventionIndex", ("0.9", "1.5", "2.3")),
                  SweepAxis("Symptoms", symptom_sweep)),
            target="InfectionRate",
            numeric_target=True,
        ),
    )


def scenario_by_id(scenario_id: int) -> Scenario:
    for scenario in builtin_scenarios():
        if scenario.id == scenario_id:
            return scenario
    raise ScenarioNotFound(f"no built-in scenario with id {scenario_id!r}")


def _reference_path(scenario_id: int) -> Path:
    return Path(__file__).resolve().parent / "data" / "reference" / f"scenario{scenario_id}.csv"


def load_reference(scenario_id: int) -> dict[tuple[str, ...], float]:
    """Published reference values keyed by sweep labels; empty if absent."""
    path = _reference_path(scenario_id)
    if not path.is_file():
        return {}
    out: dict[tuple[str, ...], float] = {}
    with path.open(newline="") as handle:
        for record in csv.DictReader(handle):
            value = record.pop("reference")
            out[tuple(record.values())] = float(value)
    return out


def _row_labels(scenario: Scenario, assignment: tuple[str | None, ...]) -> tuple[str, ...]:
    return tuple(NO_EVIDENCE_LABEL if v is None else v for v in assignment)


def _sweep_assignments(scenario: Scenario) -> list[tuple[str | None, ...]]:
    combos: list[tuple[str | None, ...]] = [()]
    for axis in scenario.axes:
        combos = [prefix + (value,) for prefix in combos for value in axis.values]
    return combos


def run_scenario(net: Network, scenario: Scenario) -> ScenarioResult:
    """Evaluate every sweep combination; rows keep the sweep's order."""
    reference = load_reference(scenario.id)
    rows = []
    for assignment in _sweep_assignments(scenario):
        evidence = dict(scenario.fixed)
        for axis, value in zip(scenario.axes, assignment):
            if value is not None:
                evidence[axis.variable] = value
        if scenario.numeric_target:
            states = net.require(scenario.target).states
            computed = expectation(net, evidence, scenario.target,
                                   {s: float(s) for s in states})
        else:
            computed = posterior(net, evidence, scenario.target).prob(scenario.target_state) * 100.0
        labels = _row_labels(scenario, assignment)
        rows.append(ResultRow(labels=labels, computed=computed,
                              reference=reference.get(labels)))
    columns = tuple(_snake(axis.variable) for axis in scenario.axes)
    columns += ("computed", "reference", "abs_diff")
    return ScenarioResult(scenario=scenario, columns=columns, rows=tuple(rows))


def _cells(result: ScenarioResult) -> list[list[str]]:
    grid = [list(result.columns)]
    for row in result.rows:
        cells = list(row.labels)
        cells.append(f"{row.computed:.2f}")
        cells.append("" if row.reference is None else f"{row.reference:.2f}")
        cells.append("" if row.abs_diff is None else f"{row.abs_diff:.2f}")
        grid.append(cells)
    return grid


def emit_report(result: ScenarioResult, fmt: str = "table") -> str:
    """Render a result as an aligned plain table or as CSV.

    Both forms list the same cells in the same order and end with a
    newline; percentages carry two decimals.
    """
    grid = _cells(result)
    if fmt == "csv":
        return "\n".join(",".join(cells) for cells in grid) + "\n"
    if fmt == "table":
        widths = [max(len(line[col]) for line in grid) for col in range(len(grid[0]))]
        lines = []
        for cells in grid:
            padded = [cell.ljust(width) for cell, width in zip(cells, widths)]
            lines.append("  ".join(padded).rstrip())
        return "\n".join(lines) + "\n"
    raise DomainError(f"unknown report format {fmt!r}", code="UNKNOWN_FORMAT")

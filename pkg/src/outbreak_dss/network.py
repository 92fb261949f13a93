"""Discrete Bayesian network containers and structural validation.

A network is a DAG of named discrete variables, one conditional
probability table per variable. Tables are stored row-major over parent
state combinations in odometer order with the LAST parent varying
fastest, one distribution over child states per row. ``build_network``
is the only constructor that validates; the dataclasses themselves stay
cheap so callers can assemble pieces freely before validation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    CycleDetected,
    DanglingReference,
    ModelError,
    TargetInEvidence,
    UnknownState,
    UnknownVariable,
    UnnormalizedRow,
)

# row sums must match 1 this tightly at build time; loaders that read
# quantized files pass a looser value explicitly
ROW_SUM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Variable:
    """A named discrete variable with an ordered, finite state list."""

    name: str
    states: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        if not self.name:
            raise ModelError("variable name must be nonempty")
        if len(self.states) < 1:
            raise ModelError(f"variable {self.name!r} needs at least one state")
        if len(set(self.states)) != len(self.states):
            raise ModelError(f"variable {self.name!r} has duplicate state labels")

    @property
    def cardinality(self) -> int:
        return len(self.states)

    def index_of(self, state: str) -> int:
        try:
            return self.states.index(state)
        except ValueError:
            raise UnknownState(
                f"variable {self.name!r} has no state {state!r}"
            ) from None


@dataclass(frozen=True, eq=False)
class Cpt:
    """Conditional probability table for one child variable.

    ``rows`` has shape (number of parent state combinations, child
    cardinality). A root variable has a single row, its prior.
    """

    child: str
    parents: tuple[str, ...]
    rows: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "parents", tuple(self.parents))
        rows = np.asarray(self.rows, dtype=float)
        if rows.ndim == 1:
            rows = rows.reshape(1, -1)
        if rows.ndim != 2:
            raise ModelError(f"table for {self.child!r} must be a matrix of rows")
        object.__setattr__(self, "rows", rows)


@dataclass(eq=False)
class Network:
    """A validated network. Treat as immutable after ``build_network``.

    ``cpts`` holds tables exactly as supplied (useful for lossless
    serialization); ``tables`` holds the exactly renormalized copies the
    inference engine reads.
    """

    variables: dict[str, Variable]
    cpts: dict[str, Cpt]
    tables: dict[str, np.ndarray] = field(repr=False)
    topo_order: tuple[str, ...] = ()

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.variables)

    def parents(self, name: str) -> tuple[str, ...]:
        return self.cpts[name].parents

    def cardinality(self, name: str) -> int:
        return self.variables[name].cardinality

    def require(self, name: str) -> Variable:
        var = self.variables.get(name)
        if var is None:
            raise UnknownVariable(f"unknown variable {name!r}")
        return var

    def check_evidence(self, evidence: Mapping[str, str]) -> dict[str, int]:
        """Map evidence to state indices, rejecting unknown names or states."""
        observed = {}
        for name, state in evidence.items():
            var = self.variables.get(name)
            if var is None:
                raise UnknownVariable(f"unknown variable {name!r} in evidence")
            observed[name] = var.index_of(state)
        return observed

    def check_target(self, target: str, evidence: Mapping[str, str]) -> Variable:
        var = self.require(target)
        if target in evidence:
            raise TargetInEvidence(
                f"target {target!r} already fixed by evidence; query its prior "
                "by dropping it from the evidence map"
            )
        return var


def _parent_combo(variables: Mapping[str, Variable], parents: Sequence[str], row: int) -> str:
    """Render parent combination ``row`` (odometer, last fastest) for messages."""
    parts = []
    for name in reversed(parents):
        card = variables[name].cardinality
        parts.append(f"{name}={variables[name].states[row % card]}")
        row //= card
    return ", ".join(reversed(parts))


def _find_back_edge(edges: Mapping[str, tuple[str, ...]], nodes: Iterable[str]) -> tuple[str, str]:
    """Locate one edge that closes a cycle, for a deterministic message."""
    WHITE, GREY, BLACK = 0, 1, 2
    color = {n: WHITE for n in nodes}
    for start in color:
        if color[start] != WHITE:
            continue
        stack = [(start, iter(edges.get(start, ())))]
        color[start] = GREY
        while stack:
            node, it = stack[-1]
            for nxt in it:
                if color.get(nxt, BLACK) == GREY:
                    return node, nxt
                if color.get(nxt, BLACK) == WHITE:
                    color[nxt] = GREY
                    stack.append((nxt, iter(edges.get(nxt, ()))))
                    break
            else:
                color[node] = BLACK
                stack.pop()
    raise AssertionError("no back edge found in cyclic graph")


def build_network(
    variables: Sequence[Variable],
    cpts: Sequence[Cpt],
    row_tolerance: float = ROW_SUM_TOLERANCE,
) -> Network:
    """Validate structure and tables, then return an immutable network.

    Checks, in order: unique names, one table per variable, no dangling
    parent or child references, table shapes, entries within [0, 1] and
    rows summing to 1 within ``row_tolerance``, acyclicity. Rows are
    renormalized exactly after validation so downstream arithmetic sees
    distributions that sum to 1 to the last bit.
    """
    by_name: dict[str, Variable] = {}
    for var in variables:
        if var.name in by_name:
            raise ModelError(f"duplicate variable name {var.name!r}")
        by_name[var.name] = var

    by_child: dict[str, Cpt] = {}
    for cpt in cpts:
        if cpt.child not in by_name:
            raise DanglingReference(
                f"table references unknown child variable {cpt.child!r}"
            )
        if cpt.child in by_child:
            raise ModelError(f"variable {cpt.child!r} has more than one table")
        for parent in cpt.parents:
            if parent not in by_name:
                raise DanglingReference(
                    f"table for {cpt.child!r} references unknown parent {parent!r}"
                )
            if parent == cpt.child:
                raise CycleDetected(
                    f"cycle detected: back edge {cpt.child!r} -> {cpt.child!r}"
                )
        by_child[cpt.child] = cpt
    missing = [name for name in by_name if name not in by_child]
    if missing:
        raise ModelError(f"no table for variable {missing[0]!r}")

    tables: dict[str, np.ndarray] = {}
    for name, cpt in by_child.items():
        combos = 1
        for parent in cpt.parents:
            combos *= by_name[parent].cardinality
        want = (combos, by_name[name].cardinality)
        if cpt.rows.shape != want:
            raise ModelError(
                f"table for {name!r} has shape {cpt.rows.shape}, expected {want} "
                f"(parents {list(cpt.parents)})"
            )
        rows = cpt.rows
        if not np.isfinite(rows).all():
            raise UnnormalizedRow(f"table for {name!r} contains non-finite entries")
        if (rows < -row_tolerance).any() or (rows > 1 + row_tolerance).any():
            bad = int(np.argwhere((rows < -row_tolerance) | (rows > 1 + row_tolerance))[0][0])
            raise UnnormalizedRow(
                f"table for {name!r} has entries outside [0, 1] in row {bad} "
                f"({_parent_combo(by_name, cpt.parents, bad) or 'prior'})"
            )
        sums = rows.sum(axis=1)
        off = np.abs(sums - 1.0)
        if (off > row_tolerance).any():
            bad = int(np.argmax(off))
            raise UnnormalizedRow(
                f"row {bad} of table for {name!r} sums to {sums[bad]:.6g} "
                f"({_parent_combo(by_name, cpt.parents, bad) or 'prior'})"
            )
        tables[name] = np.clip(rows, 0.0, None) / sums[:, None]

    # Kahn's algorithm over child <- parent edges, deterministic order
    edges = {name: tuple(c for c in by_name if name in by_child[c].parents) for name in by_name}
    indegree = {name: len(by_child[name].parents) for name in by_name}
    queue = [name for name in by_name if indegree[name] == 0]
    topo: list[str] = []
    while queue:
        node = queue.pop(0)
        topo.append(node)
        for nxt in edges[node]:
            indegree[nxt] -= 1
            if indegree[nxt] == 0:
                queue.append(nxt)
    if len(topo) != len(by_name):
        rest = [n for n in by_name if n not in set(topo)]
        src, dst = _find_back_edge({n: edges[n] for n in rest}, rest)
        raise CycleDetected(f"cycle detected: back edge {src!r} -> {dst!r}")

    return Network(variables=by_name, cpts=by_child, tables=tables, topo_order=tuple(topo))

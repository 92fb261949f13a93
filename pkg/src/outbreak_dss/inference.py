"""Exact inference on discrete networks.

Two independent routes to the same posterior:

``posterior``
    Sum-product variable elimination. Hidden variables are eliminated
    one at a time; eliminating X multiplies every factor whose scope
    contains X into a single factor and sums X out. The elimination
    order is chosen greedily by minimum degree (fewest distinct
    neighbors in the current factor graph) with lexicographic
    tie-breaking, so identical queries follow identical code paths and
    return bitwise-identical results.

``joint_enumeration``
    Materializes the full joint as one dense array, conditions on the
    evidence and marginalizes. Exponential in the number of variables,
    guarded by an entry cap. Exists to cross-check the elimination
    route, not to be fast.

Both raise ``ImpossibleEvidence`` on probability-zero evidence instead
of returning NaNs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Mapping, Sequence

import numpy as np

from .errors import ImpossibleEvidence, MissingStateValue, StateSpaceTooLarge
from .network import Network

DEFAULT_ENTRY_CAP = 1 << 22


@dataclass(frozen=True)
class Posterior:
    """A normalized distribution over one variable's states."""

    target: str
    states: tuple[str, ...]
    probabilities: tuple[float, ...]

    def prob(self, state: str) -> float:
        return self.probabilities[self.states.index(state)]

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.states, self.probabilities))


# a factor is (scope, table): one array axis per scope variable, in order
Factor = tuple[tuple[str, ...], np.ndarray]


def _cpt_factor(net: Network, name: str) -> Factor:
    cpt = net.cpts[name]
    scope = cpt.parents + (name,)
    cards = [net.cardinality(v) for v in scope]
    # row-major rows with last parent fastest reshape directly to one
    # axis per scope variable
    return scope, net.tables[name].reshape(cards)


def _observe(factor: Factor, observed: Mapping[str, int]) -> Factor:
    scope, table = factor
    keep = []
    index = []
    for axis, var in enumerate(scope):
        if var in observed:
            index.append(observed[var])
        else:
            index.append(slice(None))
            keep.append(var)
    return tuple(keep), table[tuple(index)]


def _product(a: Factor, b: Factor) -> Factor:
    a_scope, a_table = a
    b_scope, b_table = b
    scope = a_scope + tuple(v for v in b_scope if v not in a_scope)
    return scope, _align(a, scope) * _align(b, scope)


def _align(factor: Factor, scope: tuple[str, ...]) -> np.ndarray:
    """View of the factor broadcastable over ``scope`` (a superset)."""
    f_scope, table = factor
    perm = [f_scope.index(v) for v in scope if v in f_scope]
    shape = [table.shape[f_scope.index(v)] if v in f_scope else 1 for v in scope]
    return np.transpose(table, perm).reshape(shape)


def _sum_out(factor: Factor, var: str) -> Factor:
    scope, table = factor
    axis = scope.index(var)
    return scope[:axis] + scope[axis + 1 :], table.sum(axis=axis)


def _min_degree_order(factors: Sequence[Factor], hidden: set[str]) -> list[str]:
    """Greedy minimum-degree ordering, ties broken lexicographically."""
    scopes = [set(scope) for scope, _ in factors if scope]
    order = []
    remaining = set(hidden)
    while remaining:
        best = None
        for var in remaining:
            neighbors = set()
            for scope in scopes:
                if var in scope:
                    neighbors |= scope
            neighbors.discard(var)
            key = (len(neighbors), var)
            if best is None or key < best[0]:
                best = (key, var, neighbors)
        _, var, neighbors = best
        order.append(var)
        remaining.discard(var)
        # eliminating var fuses its factors into one over its neighbors
        scopes = [s for s in scopes if var not in s]
        scopes.append(neighbors)
    return order


def _eliminate(factors: list[Factor], var: str) -> list[Factor]:
    related = [f for f in factors if var in f[0]]
    rest = [f for f in factors if var not in f[0]]
    fused = reduce(_product, related)
    rest.append(_sum_out(fused, var))
    return rest


def posterior(
    net: Network,
    evidence: Mapping[str, str],
    target: str,
    elimination_order: Sequence[str] | None = None,
) -> Posterior:
    """Exact posterior of ``target`` given ``evidence`` (may be empty).

    ``elimination_order``, when given, must cover every hidden variable
    exactly once; results do not depend on the order, only runtime does.
    """
    var = net.check_target(target, evidence)
    observed = net.check_evidence(evidence)

    factors = [_observe(_cpt_factor(net, name), observed) for name in net.names]
    hidden = {name for name in net.names if name not in observed and name != target}
    if elimination_order is None:
        order = _min_degree_order(factors, hidden)
    else:
        order = list(elimination_order)
        if set(order) != hidden or len(order) != len(hidden):
            raise ValueError("elimination order must cover each hidden variable once")
    for name in order:
        factors = _eliminate(factors, name)

    result = reduce(_product, factors)
    table = _align(result, (target,)) if result[0] != (target,) else result[1]
    # remaining scope is exactly the target; stray scalars fold in via product
    values = np.asarray(table, dtype=float).reshape(var.cardinality)
    z = values.sum()
    if not z > 0.0:
        raise ImpossibleEvidence(
            f"evidence has probability zero; no posterior for {target!r}"
        )
    values = values / z
    return Posterior(target=target, states=var.states, probabilities=tuple(values.tolist()))


def joint_enumeration(
    net: Network,
    evidence: Mapping[str, str],
    target: str,
    entry_cap: int = DEFAULT_ENTRY_CAP,
) -> Posterior:
    """Posterior via the dense joint. Oracle route; see module docstring."""
    var = net.check_target(target, evidence)
    observed = net.check_evidence(evidence)

    names = net.names
    total = 1
    for name in names:
        total *= net.cardinality(name)
        if total > entry_cap:
            raise StateSpaceTooLarge(
                f"joint has more than {entry_cap} entries; "
                "raise entry_cap to enumerate this network"
            )
    joint = np.ones([net.cardinality(name) for name in names])
    for name in names:
        joint = joint * _align(_cpt_factor(net, name), names)

    index = tuple(observed.get(name, slice(None)) for name in names)
    conditioned = joint[index]
    kept = [name for name in names if name not in observed]
    axis = kept.index(target)
    values = conditioned.sum(axis=tuple(i for i in range(len(kept)) if i != axis))
    z = values.sum()
    if not z > 0.0:
        raise ImpossibleEvidence(
            f"evidence has probability zero; no posterior for {target!r}"
        )
    values = values / z
    return Posterior(target=target, states=var.states, probabilities=tuple(values.tolist()))


def expectation(
    net: Network,
    evidence: Mapping[str, str],
    target: str,
    values: Mapping[str, float],
) -> float:
    """Posterior-weighted mean of ``values`` over the target's states.

    Every state needs a numeric value; a partial map raises
    ``MissingStateValue`` instead of silently dropping mass.
    """
    var = net.require(target)
    missing = [s for s in var.states if s not in values]
    if missing:
        raise MissingStateValue(
            f"no value for state {missing[0]!r} of {target!r} in expectation"
        )
    post = posterior(net, evidence, target)
    return float(sum(p * float(values[s]) for s, p in zip(post.states, post.probabilities)))

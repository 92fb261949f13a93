"""Closed-form calibration rules for the outbreak model.

The survey-derived quantities reduce to small algebraic rules:

  preventive index    pi = 1 + (beta - alpha) / beta
  cumulative index    PI = pi0 * prod_i(g_i * pi_i + 1 - g_i),  g_i in {0, 1}
  vulnerability       V = A*G / (A*G + (1 - A) * (1 - G))
  infection chance    P = min(1, ir / PI * (v + 1)),  v in {0, 1}

``alpha`` is the infection rate among people who follow a measure and
``beta`` the rate among those who do not, both in percent, so pi > 1
marks a protective behavior and pi < 1 a counterproductive one. The
infection chance deliberately clamps at 1: a low enough index cannot
push the probability past certainty, and the clamp is what makes the
rule a valid CPT entry. Saturated cells are surfaced by the calibration
report rather than hidden by renormalization.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .errors import (
    DegenerateRate,
    FormulaError,
    NonpositivePi,
    RateOutOfRange,
    ZeroBeta,
)


def preventive_index(alpha: float, beta: float) -> float:
    """Effectiveness of one measure from infection rates in percent."""
    if not 0.0 <= alpha <= 100.0:
        raise RateOutOfRange(f"alpha must be a percentage in [0, 100], got {alpha!r}")
    if not 0.0 <= beta <= 100.0:
        raise RateOutOfRange(f"beta must be a percentage in [0, 100], got {beta!r}")
    if beta <= 0.0:
        raise ZeroBeta("beta must be positive; an untaken-group rate of zero "
                       "leaves the index undefined")
    return 1.0 + (beta - alpha) / beta


def cumulative_pi(
    profile: Mapping[str, bool],
    indices: Mapping[str, float],
    base: float = 1.0,
) -> float:
    """Combined index for a behavior profile.

    ``profile`` maps measure name to whether the behavior is followed;
    ``indices`` maps measure name to its preventive index. Measures
    absent from ``profile`` contribute nothing (their selector is 0).
    """
    if base <= 0.0:
        raise NonpositivePi(f"base index must be positive, got {base!r}")
    result = base
    for name, taken in profile.items():
        if name not in indices:
            raise FormulaError(f"no preventive index for measure {name!r}",
                               code="UNKNOWN_MEASURE")
        g = 1.0 if taken else 0.0
        result *= g * indices[name] + (1.0 - g)
    return result


def vulnerability(age_rate: float, gender_rate: float) -> float:
    """Joint vulnerability from two per-group infection rates in [0, 1]."""
    for label, rate in (("age_rate", age_rate), ("gender_rate", gender_rate)):
        if not 0.0 <= rate <= 1.0:
            raise RateOutOfRange(f"{label} must lie in [0, 1], got {rate!r}")
    hit = age_rate * gender_rate
    miss = (1.0 - age_rate) * (1.0 - gender_rate)
    if hit + miss == 0.0:
        raise DegenerateRate(
            "rates of 0 and 1 leave the vulnerability odds undefined"
        )
    return hit / (hit + miss)


def has_covid_prob(ir: float, pi: float, v: int) -> float:
    """Infection probability from rate ``ir``, index ``pi``, vulnerability flag ``v``."""
    if not 0.0 <= ir <= 1.0:
        raise RateOutOfRange(f"infection rate must lie in [0, 1], got {ir!r}")
    if pi <= 0.0:
        raise NonpositivePi(f"preventive index must be positive, got {pi!r}")
    if v not in (0, 1):
        raise FormulaError(f"vulnerability flag must be 0 or 1, got {v!r}")
    return min(1.0, ir / pi * (v + 1))


def snap_to_grid(value: float, grid: Sequence[float]) -> int:
    """Index of the grid state nearest to ``value``; midpoint ties snap low."""
    if len(grid) == 0:
        raise FormulaError("grid must be nonempty")
    for a, b in zip(grid, list(grid)[1:]):
        if not b > a:
            raise FormulaError("grid must be strictly increasing")
    best = 0
    best_dist = abs(value - grid[0])
    for i, point in enumerate(grid):
        dist = abs(value - point)
        if dist < best_dist:
            best, best_dist = i, dist
    return best

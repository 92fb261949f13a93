"""Print how the assembled model relates to the published survey figures.

Covers the per-measure indices, the cumulative-index extremes, the
vulnerability grid, test error rates and the infection-rule saturation
cells. Useful when changing grids or calibration inputs: every known
divergence from the published tables should show up here, nowhere else.
"""

import sys
from itertools import product
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from outbreak_dss import survey
from outbreak_dss.builder import (
    ModelConfig,
    build_roosevelt_model,
    default_demographics,
    default_measures,
    default_test_rates,
)
from outbreak_dss.formulas import cumulative_pi, has_covid_prob, vulnerability
from outbreak_dss.scenarios import builtin_scenarios, run_scenario

PUBLISHED_PI = {
    "HandWash": 1.0373, "HandSanitizer": 1.1582, "AvoidCommonAreas": 1.2032,
    "FaceCover": 1.3091, "WorkspaceCleaning": 0.8921, "BerthCleaning": 1.0186,
    "KeepingDistance": 1.2188,
}
PUBLISHED_VULNERABLE = {
    ("male", "18-24"): 0.8035, ("male", "25-29"): 0.7738,
    ("male", "30-39"): 0.7322, ("male", "40-59"): 0.7074,
    ("female", "18-24"): 0.6947, ("female", "25-29"): 0.6556,
    ("female", "30-39"): 0.6034, ("female", "40-59"): 0.5737,
}


def main() -> None:
    measures = default_measures()
    print("preventive indices (computed vs published):")
    for m in measures:
        print(f"  {m.name:18s} {m.pi:.6f}  vs {PUBLISHED_PI[m.name]:.4f}"
              f"  (diff {abs(m.pi - PUBLISHED_PI[m.name]):.2e})")

    indices = {m.name: m.pi for m in measures}
    names = [m.name for m in measures]
    all_on = {n: True for n in names}
    beneficial = {n: n != "WorkspaceCleaning" for n in names}
    print("\ncumulative index extremes:")
    print(f"  all behaviors:        {cumulative_pi(all_on, indices):.6f}")
    print(f"  all but workspace:    {cumulative_pi(beneficial, indices):.6f}")
    print(f"  none:                 {cumulative_pi({n: False for n in names}, indices):.6f}")

    demo = default_demographics()
    print("\nvulnerability grid (computed vs published):")
    for g, a in product(survey.GENDERS, survey.AGE_BANDS):
        v = vulnerability(demo.age_rates[a], demo.gender_rates[g])
        ref = PUBLISHED_VULNERABLE[(g, a)]
        print(f"  {g:6s} {a:5s}  {v:.6f}  vs {ref:.4f}  (diff {abs(v - ref):.2e})")

    rates = default_test_rates()
    print(f"\ntest error rates: fpr={rates.fpr:.6f} fnr={rates.fnr:.6f}")

    config = ModelConfig()
    print("\ninfection-rule saturation at a 70% infection rate:")
    print("  the clamp min(1, ir/pi*(v+1)) reaches 1.0 for vulnerable crew")
    print("  wherever pi <= 1.4, so these sweep cells tie at 100.00:")
    for pi in config.pi_grid:
        if has_covid_prob(0.7, pi, 1) >= 1.0:
            print(f"    pi={pi:.1f}  P=100.00")

    net = build_roosevelt_model()
    print("\nscenario divergence from the published tables:")
    for scenario in builtin_scenarios():
        result = run_scenario(net, scenario)
        diffs = [row.abs_diff for row in result.rows if row.abs_diff is not None]
        print(f"  scenario {scenario.id} ({scenario.name}): "
              f"max abs diff {max(diffs):.2f} pp over {len(diffs)} cells")


if __name__ == "__main__":
    main()

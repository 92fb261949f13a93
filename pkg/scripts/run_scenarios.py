"""Run all built-in scenarios against the bundled model and print reports."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from outbreak_dss.modelfile import load_bundled
from outbreak_dss.scenarios import builtin_scenarios, emit_report, run_scenario


def main() -> None:
    net = load_bundled().network
    for scenario in builtin_scenarios():
        result = run_scenario(net, scenario)
        diffs = [row.abs_diff for row in result.rows if row.abs_diff is not None]
        print(f"== scenario {scenario.id}: {scenario.name}")
        print(scenario.description)
        print()
        print(emit_report(result, "table"))
        if diffs:
            print(f"max |computed - reference| = {max(diffs):.2f} percentage points")
        print()


if __name__ == "__main__":
    main()

"""Regenerate the bundled canonical model file from the survey data.

Run after changing anything under the calibration path. The output is
byte-stable, so an unchanged calibration regenerates an identical file
and the bundled-file regression test stays green.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from outbreak_dss.builder import (
    build_roosevelt_model,
    default_measures,
    node_groups,
    prevention_metadata,
)
from outbreak_dss.modelfile import bundled_model_path, write_model


def main() -> None:
    measures = default_measures()
    net = build_roosevelt_model()
    path = bundled_model_path()
    path.parent.mkdir(parents=True, exist_ok=True)
    write_model(path, net, node_groups(measures), prevention_metadata(measures))
    print(f"wrote {path}")


if __name__ == "__main__":
    main()

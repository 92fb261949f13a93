"""Canonical on-disk model format.

Plain JSON with a bit-exact rendering so regeneration is byte-stable:
object keys sorted, every float written with six fractional digits,
lists of scalars inline, LF line endings, trailing newline. Loading a
file and writing it back reproduces the bytes exactly, because networks
keep their tables as supplied and only renormalize internal copies.

Layout:

    {
      "cpts":      [{"child": ..., "parents": [...], "rows": [[...]]}],
      "meta":      {"groups": {...}, "name": ..., "prevention": {...}},
      "variables": [{"name": ..., "states": [...]}]
    }

``cpts`` sort by child and ``variables`` by name. Six decimals are
coarser than build precision, so the loader accepts row sums within
1e-5 and renormalizes (the builder route keeps 1e-9).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ModelError
from .network import Cpt, Network, Variable, build_network

MODEL_NAME = "roosevelt-outbreak"
LOAD_ROW_TOLERANCE = 1e-5


def _format_float(x: float) -> str:
    out = f"{x:.6f}"
    return "0.000000" if out == "-0.000000" else out


def _emit(value, indent: int) -> str:
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        parts = [f'{inner}{json.dumps(key)}: {_emit(value[key], indent + 1)}'
                 for key in sorted(value)]
        return "{\n" + ",\n".join(parts) + "\n" + pad + "}"
    if isinstance(value, (list, tuple)):
        items = list(value)
        if not items:
            return "[]"
        if all(isinstance(v, (str, int, float)) and not isinstance(v, bool) for v in items):
            return "[" + ", ".join(_emit(v, indent) for v in items) + "]"
        parts = [f"{inner}{_emit(v, indent + 1)}" for v in items]
        return "[\n" + ",\n".join(parts) + "\n" + pad + "]"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return _format_float(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return json.dumps(value)
    raise ModelError(f"cannot serialize {type(value).__name__} in a model file")


def canonical_dumps(doc: dict) -> str:
    return _emit(doc, 0) + "\n"


@dataclass(frozen=True)
class LoadedModel:
    network: Network
    name: str
    groups: dict[str, str]
    prevention: dict


def network_to_doc(
    net: Network,
    groups: dict[str, str],
    prevention: dict,
    name: str = MODEL_NAME,
) -> dict:
    return {
        "variables": [
            {"name": v.name, "states": list(v.states)}
            for v in sorted(net.variables.values(), key=lambda v: v.name)
        ],
        "cpts": [
            {
                "child": cpt.child,
                "parents": list(cpt.parents),
                "rows": [[float(x) for x in row] for row in cpt.rows],
            }
            for cpt in sorted(net.cpts.values(), key=lambda c: c.child)
        ],
        "meta": {"name": name, "groups": dict(groups), "prevention": dict(prevention)},
    }


def doc_to_model(doc: dict) -> LoadedModel:
    if not isinstance(doc, dict):
        raise ModelError("model document must be a JSON object")
    for key in ("variables", "cpts", "meta"):
        if key not in doc:
            raise ModelError(f"model document is missing the {key!r} section")
    try:
        variables = [Variable(entry["name"], tuple(entry["states"]))
                     for entry in doc["variables"]]
        cpts = [Cpt(entry["child"], tuple(entry["parents"]),
                    np.array(entry["rows"], dtype=float))
                for entry in doc["cpts"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelError(f"malformed model document: {exc}") from exc
    net = build_network(variables, cpts, row_tolerance=LOAD_ROW_TOLERANCE)
    meta = doc["meta"]
    return LoadedModel(
        network=net,
        name=str(meta.get("name", "")),
        groups=dict(meta.get("groups", {})),
        prevention=dict(meta.get("prevention", {})),
    )


def dumps_model(net: Network, groups: dict[str, str], prevention: dict,
                name: str = MODEL_NAME) -> str:
    return canonical_dumps(network_to_doc(net, groups, prevention, name))


def loads_model(text: str) -> LoadedModel:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelError(f"model file is not valid JSON: {exc}") from exc
    return doc_to_model(doc)


def write_model(path: str | Path, net: Network, groups: dict[str, str],
                prevention: dict, name: str = MODEL_NAME) -> None:
    Path(path).write_text(dumps_model(net, groups, prevention, name), newline="\n")


def load_model(path: str | Path) -> LoadedModel:
    p = Path(path)
    if not p.is_file():
        raise ModelError(f"model file {str(p)!r} does not exist",
                         code="MODEL_FILE_NOT_FOUND")
    return loads_model(p.read_text())


def bundled_model_path() -> Path:
    return Path(__file__).resolve().parent / "data" / "roosevelt.model.json"


def load_bundled() -> LoadedModel:
    return load_model(bundled_model_path())

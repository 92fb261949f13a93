"""Command-line front end.

Subcommands: validate a model file, run a posterior query, run a
built-in scenario, score test risk, or serve the HTTP API. Exit codes:
0 success, 1 expected domain failure (code and message on stderr),
2 usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from .errors import DomainError
from .inference import posterior
from .modelfile import bundled_model_path, load_model
from .risk import ImpactWeights, risk_scores
from .scenarios import emit_report, run_scenario, scenario_by_id
from .service import DEFAULT_PORT, PORT_ENV

USAGE_EXIT = 2


class UsageError(Exception):
    pass


def _parse_evidence(pairs: list[str]) -> dict[str, str]:
    evidence = {}
    for pair in pairs:
        name, sep, state = pair.partition("=")
        if not sep or not name:
            raise UsageError(f"evidence must look like Variable=State, got {pair!r}")
        evidence[name] = state
    return evidence


def _parse_impacts(text: str) -> ImpactWeights:
    parts = text.split(",")
    if len(parts) != 4:
        raise UsageError("impacts must be four comma-separated numbers: "
                         "undetected,detected,quarantined,cleared")
    try:
        u, k, q, c = (float(p) for p in parts)
    except ValueError:
        raise UsageError(f"impacts must be numeric, got {text!r}") from None
    return ImpactWeights(undetected=u, detected=k, quarantined=q, cleared=c)


def resolve_port(flag_value: int | None, env: dict[str, str] | None = None) -> int:
    """Port precedence: --port flag, then the environment, then 8080."""
    if flag_value is not None:
        return flag_value
    env = os.environ if env is None else env
    raw = env.get(PORT_ENV)
    if raw is None:
        return DEFAULT_PORT
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{PORT_ENV} must be an integer, got {raw!r}") from None


def _load(path: str | None):
    return load_model(path if path is not None else bundled_model_path())


def cmd_validate(args) -> int:
    loaded = _load(args.model)
    net = loaded.network
    print(f"OK: {len(net.variables)} variables, {len(net.cpts)} tables")
    return 0


def cmd_infer(args) -> int:
    loaded = _load(args.model)
    evidence = _parse_evidence(args.evidence)
    for target in args.target:
        post = posterior(loaded.network, evidence, target)
        print(target)
        width = max(len(s) for s in post.states)
        for state, prob in zip(post.states, post.probabilities):
            print(f"  {state.ljust(width)}  {prob:.6f}  {prob * 100.0:.2f}%")
    return 0


def cmd_scenario(args) -> int:
    loaded = _load(args.model)
    result = run_scenario(loaded.network, scenario_by_id(args.id))
    sys.stdout.write(emit_report(result, args.format))
    return 0


def cmd_risk(args) -> int:
    impacts = _parse_impacts(args.impacts) if args.impacts else ImpactWeights()
    scores = risk_scores(args.fpr, args.fnr, impacts)
    print(f"risk_p={scores.risk_p:.4f} risk_n={scores.risk_n:.4f}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    port = resolve_port(args.port)
    app = create_app(model_path=args.model, session_path=args.sessions)
    uvicorn.run(app, host=args.host, port=port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="outbreak-dss",
                                     description="outbreak decision support")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a model file")
    p.add_argument("model", help="path to a model JSON file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("infer", help="posterior for one or more targets")
    p.add_argument("--model", default=None)
    p.add_argument("--evidence", action="append", default=[],
                   metavar="VAR=STATE", help="observed state, repeatable")
    p.add_argument("--target", action="append", required=True,
                   metavar="VAR", help="query variable, repeatable")
    p.set_defaults(func=cmd_infer)

    p = sub.add_parser("scenario", help="run a built-in scenario")
    p.add_argument("--model", default=None)
    p.add_argument("--id", type=int, required=True, choices=(1, 2, 3, 4))
    p.add_argument("--format", default="table", choices=("table", "csv"))
    p.set_defaults(func=cmd_scenario)

    p = sub.add_parser("risk", help="impact-weighted risk of test outcomes")
    p.add_argument("--fpr", type=float, required=True)
    p.add_argument("--fnr", type=float, required=True)
    p.add_argument("--impacts", default=None,
                   metavar="U,K,Q,C", help="impact weights, default 4,3,2,1")
    p.set_defaults(func=cmd_risk)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--model", default=None)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=None,
                   help=f"default: ${PORT_ENV} or {DEFAULT_PORT}")
    p.add_argument("--sessions", default=None, help="session log path")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_EXIT
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except DomainError as exc:
        print(f"{exc.code}: {exc.message}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

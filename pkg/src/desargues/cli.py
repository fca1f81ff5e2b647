"""Command-line entry point.

Every subcommand prints ``CHECK <id> PASS|FAIL|UNDECIDED <detail>`` lines
(or one JSON document with ``--format json``) and exits with

* 0 when everything passed,
* 1 on a violation, counterexample or failed witness,
* 2 on a usage error (bad flags, unreadable or malformed input),
* 3 when some outcome is undecided and nothing failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Any, Sequence

from . import field as F
from . import jsonio, plane
from .configcheck import brouwer
from .configcheck.configs import HypothesisFails, Holds, Violated, check_d1, check_d2, check_pappus
from .configcheck.harness import verify_axioms
from .coordinatize import Frame, coords, line_equation, line_params
from .errors import LinesEqual, MalformedConfig, Parallel, PlaneError, PointsNotApart, UndecidedError
from .field import Undecided

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNDECIDED = 0, 1, 2, 3
BUDGET_ENV = "PLANE_DEFAULT_BUDGET"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def default_budget(environ=os.environ) -> int:
    raw = environ.get(BUDGET_ENV)
    if raw is None:
        return F.DEFAULT_DYADIC_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise UsageError(f"{BUDGET_ENV} must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    budget = _Parser(add_help=False)
    budget.add_argument("--budget", type=_nonnegative, default=None,
                        help=f"dyadic precision budget (default: ${BUDGET_ENV} or {F.DEFAULT_DYADIC_BUDGET})")

    parser = _Parser(prog="desargues", description="Constructive affine plane toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", parents=[common], help="run the axiom suites on a backend")
    p.add_argument("--field", required=True)
    p.add_argument("--mode", choices=("exhaustive", "random"))
    p.add_argument("--seed", type=_positive, default=1)
    p.add_argument("--n", type=_positive, default=1000)

    p = sub.add_parser("coordinatize", parents=[common, budget], help="coordinates of points and lines")
    p.add_argument("--field", required=True)
    p.add_argument("--frame", type=Path, help="frame JSON (default: the canonical frame)")
    p.add_argument("--points", type=Path, required=True)

    p = sub.add_parser("check", parents=[common, budget], help="check a Desargues or Pappus configuration")
    p.add_argument("--kind", choices=("d1", "d2", "pappus"), required=True)
    p.add_argument("--config", type=Path, required=True)
    p.add_argument("--field", help="backend (default: the config's 'field' entry, else rational)")

    p = sub.add_parser("demo", parents=[common, budget], help="run a non-decidability demo")
    p.add_argument("--example", required=True, help="example id, or 'all'")

    p = sub.add_parser("lines", parents=[common, budget], help="join, intersect or parallel")
    p.add_argument("--field", required=True)
    p.add_argument("--op", choices=("join", "intersect", "parallel"), required=True)
    p.add_argument("--in", dest="input", type=Path, required=True)
    return parser


# --------------------------------------------------------------------------
# results


class Result:
    """Rows ``(id, status, detail)`` plus a JSON payload."""

    def __init__(self, payload: dict):
        self.rows: list[tuple[str, str, str]] = []
        self.payload = payload

    def add(self, key: str, status: str, detail: str = "") -> None:
        self.rows.append((key, status, detail))

    def exit_code(self) -> int:
        statuses = {status for _, status, _ in self.rows}
        if "FAIL" in statuses:
            return EXIT_FAIL
        if "UNDECIDED" in statuses:
            return EXIT_UNDECIDED
        return EXIT_OK

    def render(self, fmt: str) -> str:
        if fmt == "json":
            payload = dict(self.payload)
            payload["checks"] = [{"id": k, "status": s, "detail": d} for k, s, d in sorted(self.rows)]
            payload["exit_code"] = self.exit_code()
            return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)
        return "\n".join(f"CHECK {k} {s} {d}".rstrip() for k, s, d in sorted(self.rows))


def _load_json(path: Path) -> Any:
    try:
        return json.loads(path.read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _field(spec: str, budget: int | None) -> F.Field:
    try:
        return F.parse_field(spec, budget if budget is not None else default_budget())
    except PlaneError as exc:
        raise UsageError(str(exc)) from None


def _budget(args) -> int:
    return args.budget if args.budget is not None else default_budget()


# --------------------------------------------------------------------------
# subcommands


def run_verify(args) -> Result:
    fld = _field(args.field, None)
    mode = args.mode or ("exhaustive" if fld.order is not None else "random")
    try:
        report = verify_axioms(fld, mode, seed=args.seed, n=args.n)
    except PlaneError as exc:
        raise UsageError(str(exc)) from None
    result = Result(report.to_dict())
    for key, tally in report.checks.items():
        if tally.skipped:
            result.add(key, "PASS", f"skipped: too large ({tally.detail})")
            continue
        detail = f"passed={tally.passed} failed={tally.failed} undecided={tally.undecided}"
        result.add(key, tally.status, f"{detail} {tally.detail}".rstrip())
    return result


def _outcome_row(result: Result, key: str, outcome) -> None:
    if isinstance(outcome, Holds):
        result.add(key, "PASS", "holds")
    elif isinstance(outcome, HypothesisFails):
        result.add(key, "PASS", f"vacuous: hypothesis fails ({outcome.which})")
    elif isinstance(outcome, Violated):
        w = outcome.witness
        result.add(key, "FAIL", f"violated: conclusion lines nonparallel, det={jsonio.value_to_json(w.det)}")
    elif isinstance(outcome, Undecided):
        result.add(key, "UNDECIDED", f"budget={outcome.budget_spent}")


def _outcome_json(outcome) -> dict:
    if isinstance(outcome, Holds):
        return {"outcome": "holds"}
    if isinstance(outcome, HypothesisFails):
        return {"outcome": "hypothesis_fails", "which": outcome.which}
    if isinstance(outcome, Violated):
        return {"outcome": "violated", "det": jsonio.value_to_json(outcome.witness.det),
                "first": jsonio.line_to_json(outcome.witness.first),
                "second": jsonio.line_to_json(outcome.witness.second)}
    return {"outcome": "undecided", "budget_spent": outcome.budget_spent}


def run_check(args) -> Result:
    raw = _load_json(args.config)
    spec = args.field or (raw.get("field") if isinstance(raw, dict) else None) or "rational"
    budget = _budget(args)
    fld = _field(spec, budget)
    try:
        if args.kind == "pappus":
            cfg = jsonio.pappus_from_json(fld, raw, budget)
            outcome = check_pappus(cfg, budget)
        else:
            cfg = jsonio.desargues_from_json(fld, raw, args.kind.upper(), budget)
            outcome = (check_d1 if args.kind == "d1" else check_d2)(cfg, budget)
    except MalformedConfig as exc:
        raise UsageError(f"malformed configuration: {exc}") from None
    except UndecidedError as exc:
        outcome = Undecided(exc.budget)
    result = Result({"command": "check", "kind": args.kind, "field": fld.spec, **_outcome_json(outcome)})
    _outcome_row(result, args.kind, outcome)
    return result


def run_coordinatize(args) -> Result:
    budget = _budget(args)
    fld = _field(args.field, budget)
    try:
        frame = (jsonio.frame_from_json(fld, _load_json(args.frame), budget) if args.frame
                 else Frame.canonical(fld))
        raw = _load_json(args.points)
        if isinstance(raw, list):
            raw = {"points": raw}
        if not isinstance(raw, dict):
            raise MalformedConfig("points file must be a list of points or {'points': [...], 'lines': [...]}")
        points = [jsonio.point_from_json(fld, p) for p in raw.get("points", [])]
        lines = [jsonio.line_from_json(fld, l, budget) for l in raw.get("lines", [])]
    except MalformedConfig as exc:
        raise UsageError(str(exc)) from None
    except UndecidedError as exc:
        result = Result({"command": "coordinatize", "field": fld.spec})
        result.add("frame", "UNDECIDED", f"budget={exc.budget} {exc.what}")
        return result

    result = Result({"command": "coordinatize", "field": fld.spec, "points": [], "lines": []})
    width = len(str(max(len(points), len(lines), 1)))
    for i, P in enumerate(points):
        key = f"point.{i:0{width}d}"
        try:
            x, y = coords(frame, P, budget)
        except UndecidedError as exc:
            result.add(key, "UNDECIDED", f"budget={exc.budget}")
            result.payload["points"].append({"point": jsonio.point_to_json(P), "coords": None})
            continue
        xy = [jsonio.value_to_json(x), jsonio.value_to_json(y)]
        result.add(key, "PASS", f"({xy[0]}, {xy[1]})")
        result.payload["points"].append({"point": jsonio.point_to_json(P), "coords": xy})
    for i, l in enumerate(lines):
        key = f"line.{i:0{width}d}"
        try:
            params = line_params(frame, l, budget)
            eq = line_equation(frame, l, budget)
        except UndecidedError as exc:
            result.add(key, "UNDECIDED", f"budget={exc.budget}")
            result.payload["lines"].append({"line": jsonio.line_to_json(l), "equation": None})
            continue
        abc = [jsonio.value_to_json(v) for v in eq]
        result.add(key, "PASS", f"{abc[0]}*x + {abc[1]}*y + {abc[2]} = 0")
        result.payload["lines"].append({
            "line": jsonio.line_to_json(l),
            "params": dict(zip(("alpha", "beta", "gamma", "delta"), (jsonio.value_to_json(v) for v in params[:4]))),
            "equation": abc,
        })
    return result


def run_demo(args) -> Result:
    budget = _budget(args)
    try:
        ids = brouwer.EXAMPLES if args.example == "all" else (brouwer.resolve(args.example),)
    except PlaneError as exc:
        raise UsageError(str(exc)) from None
    reports = [brouwer.brouwerian_demo(example, budget) for example in ids]
    result = Result({"command": "demo", "budget": budget, "reports": [r.to_dict() for r in reports]})
    for report in reports:
        for row in report.rows():
            result.add(*row)
    return result


def run_lines(args) -> Result:
    budget = _budget(args)
    fld = _field(args.field, budget)
    raw = _load_json(args.input)
    if not isinstance(raw, dict):
        raise UsageError("input must be a JSON object")
    result = Result({"command": "lines", "op": args.op, "field": fld.spec})
    try:
        if args.op == "join":
            P, Q = (jsonio.point_from_json(fld, raw.get(k)) for k in ("P", "Q"))
            out = jsonio.line_to_json(plane.join(P, Q, budget))
        elif args.op == "parallel":
            P = jsonio.point_from_json(fld, raw.get("P"))
            out = jsonio.line_to_json(plane.parallel_through(P, jsonio.line_from_json(fld, raw.get("l"), budget)))
        else:
            l, m = (jsonio.line_from_json(fld, raw.get(k), budget) for k in ("l", "m"))
            out = jsonio.point_to_json(plane.intersect(l, m, budget=budget))
    except MalformedConfig as exc:
        raise UsageError(str(exc)) from None
    except (PointsNotApart, Parallel, LinesEqual) as exc:
        result.add(args.op, "FAIL", str(exc))
        return result
    except UndecidedError as exc:
        result.add(args.op, "UNDECIDED", f"budget={exc.budget}")
        return result
    result.payload["result"] = out
    result.add(args.op, "PASS", json.dumps(out, sort_keys=True, ensure_ascii=False))
    return result


_COMMANDS = {
    "verify": run_verify,
    "check": run_check,
    "coordinatize": run_coordinatize,
    "demo": run_demo,
    "lines": run_lines,
}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        result = _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"desargues: error: {exc}", file=stderr)
        return EXIT_USAGE
    print(result.render(args.format), file=stdout)
    return result.exit_code()


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

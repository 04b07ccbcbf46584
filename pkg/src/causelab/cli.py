"""Command-line front end.

Verbs: causes, responsibility, repairs, cqa, diagnose, abduce, check.
Exit codes: 0 success, 1 usage, 2 parse or validation error, 3 budget
exceeded, 4 domain error.  Output is canonical JSON by default; tables
are for humans, the JSON is the contract.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any

from .abduction import (
    abductive_solutions,
    necessary_sets,
    problem_for_instance,
    relevant_hypotheses,
)
from .budget import budget_from_env
from .causality import actual_causes, responsibility
from .checks import cross_check, fixture_checks
from .diagnosis import build_problem, minimal_diagnoses
from .errors import BudgetError, DomainError, ParseError, SchemaError
from .model import Instance, eval_bcq
from .parsing import (
    parse_denial_constraints,
    parse_ground_atom,
    parse_program,
    parse_query,
)
from .repairs import c_repairs, consistently_true, endogenous_s_repairs, s_repairs
from .serialize import (
    cause_set_to_list,
    diagnosis_to_dict,
    dumps,
    fact_to_list,
    family_to_list,
    instance_from_dict,
    repair_to_dict,
    sort_facts,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_DOMAIN = 4


class _Parser(argparse.ArgumentParser):
    # exit code 1 on usage errors (argparse defaults to 2)
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise SystemExit(self.exit_with(message))

    def exit_with(self, message: str) -> int:
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        return EXIT_USAGE


def load_instance(path: str) -> Instance:
    try:
        raw = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None
    return instance_from_dict(raw)


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="causelab", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p: argparse.ArgumentParser, instance: bool = True) -> None:
        if instance:
            p.add_argument("-i", "--instance", required=True, help="instance JSON file")
        p.add_argument("--format", choices=["json", "table"], default="json")
        p.add_argument("--budget", type=int, default=None, help="enumeration cap")

    p = sub.add_parser("causes", help="actual causes for a query answer")
    common(p)
    p.add_argument("-q", "--query", required=True, help="query file (q() :- body.)")

    p = sub.add_parser("responsibility", help="responsibility of one tuple")
    common(p)
    p.add_argument("-q", "--query", required=True)
    p.add_argument("--tuple", required=True, dest="tuple_", metavar="TUPLE", help='e.g. "S(a1)"')

    p = sub.add_parser("repairs", help="repairs wrt denial constraints")
    common(p)
    p.add_argument("-c", "--constraints", required=True, help="constraint file (:- body.)")
    p.add_argument("--semantics", choices=["s", "c"], default="s")
    p.add_argument("--endogenous-only", action="store_true")

    p = sub.add_parser("cqa", help="consistent answer for a ground atom")
    common(p)
    p.add_argument("-c", "--constraints", required=True)
    p.add_argument("--atom", required=True, help='e.g. "R(a1, a4)"')

    p = sub.add_parser("diagnose", help="minimal diagnoses for a query observation")
    common(p)
    p.add_argument("-q", "--query", required=True)

    p = sub.add_parser("abduce", help="abductive explanations for a Datalog program")
    common(p)
    p.add_argument("-p", "--program", required=True, help="Datalog rule file")
    p.add_argument(
        "--obs",
        action="append",
        default=None,
        help="observed ground atom (repeatable); defaults to the answer atom",
    )

    p = sub.add_parser("check", help="run the cross-check harness")
    common(p, instance=False)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--max-size", type=int, default=7)
    p.add_argument("--fixtures-only", action="store_true")

    return parser


def _facts_table(rows: list[list[str]]) -> str:
    if not rows:
        return "(none)\n"
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"


def _family_str(family: list[list[list[str]]]) -> str:
    rendered = []
    for group in family:
        inner = ", ".join("(".join([f[0], ", ".join(f[1:]) + ")"]) if len(f) > 1 else f[0] for f in group)
        rendered.append("{" + inner + "}")
    return "; ".join(rendered) if rendered else "{}"


def _cmd_causes(args: argparse.Namespace, budget: int | None) -> dict[str, Any]:
    instance = load_instance(args.instance)
    query = parse_query(_read(args.query))
    holds = eval_bcq(instance.facts, query, instance.schemas)
    payload: dict[str, Any] = {
        "query_holds": holds,
        "causes": cause_set_to_list(actual_causes(instance, query, budget=budget)),
    }
    if not holds:
        payload["note"] = "the query is false in this instance; there is no answer to explain"
    return payload


def _cmd_responsibility(args: argparse.Namespace, budget: int | None) -> dict[str, Any]:
    instance = load_instance(args.instance)
    query = parse_query(_read(args.query))
    t = parse_ground_atom(args.tuple_)
    rho = responsibility(instance, query, t, budget=budget)
    return {"tuple": fact_to_list(t), "responsibility": str(rho)}


def _cmd_repairs(args: argparse.Namespace, budget: int | None) -> dict[str, Any]:
    instance = load_instance(args.instance)
    constraints = parse_denial_constraints(_read(args.constraints))
    if args.endogenous_only:
        if args.semantics != "s":
            raise ParseError("--endogenous-only applies to the s semantics only")
        found = endogenous_s_repairs(instance, constraints, budget=budget)
    elif args.semantics == "s":
        found = s_repairs(instance, constraints, budget=budget)
    else:
        found = c_repairs(instance, constraints, budget=budget)
    ordered = sorted(found, key=lambda r: [f"{f.relation}/{f.args}" for f in sort_facts(r.removed)])
    payload: dict[str, Any] = {
        "semantics": args.semantics.upper(),
        "repairs": [repair_to_dict(r) for r in ordered],
    }
    if args.endogenous_only:
        payload["endogenous_only"] = True
    return payload


def _cmd_cqa(args: argparse.Namespace, budget: int | None) -> dict[str, Any]:
    instance = load_instance(args.instance)
    constraints = parse_denial_constraints(_read(args.constraints))
    if len(constraints) != 1:
        raise ParseError("cqa expects exactly one denial constraint")
    a = parse_ground_atom(args.atom)
    value = consistently_true(instance, constraints[0], a, budget=budget)
    return {"atom": fact_to_list(a), "consistently_true": value}


def _cmd_diagnose(args: argparse.Namespace, budget: int | None) -> dict[str, Any]:
    instance = load_instance(args.instance)
    query = parse_query(_read(args.query))
    problem = build_problem(instance, query)
    ordered = sorted(
        minimal_diagnoses(problem, budget=budget),
        key=lambda d: [(f.relation, f.args) for f in sort_facts(d.abnormal)],
    )
    return {
        "vacuous": problem.vacuous,
        "diagnoses": [diagnosis_to_dict(d) for d in ordered],
    }


def _cmd_abduce(args: argparse.Namespace, budget: int | None) -> dict[str, Any]:
    instance = load_instance(args.instance)
    program = parse_program(_read(args.program))
    observations = None
    if args.obs:
        observations = [parse_ground_atom(o) for o in args.obs]
    problem = problem_for_instance(program, instance, observations)
    solutions = abductive_solutions(problem, budget=budget)
    necessary = necessary_sets(problem, budget=budget)
    degrees = {}
    for h in relevant_hypotheses(problem, budget=budget):
        sizes = [len(n) for n in necessary if h in n]
        degrees[h] = Fraction(1, min(sizes)) if sizes else Fraction(0)
    ranked = sorted(degrees.items(), key=lambda kv: (-kv[1], kv[0]))
    return {
        "observations": [fact_to_list(o) for o in sort_facts(problem.obs)],
        "solutions": family_to_list(solutions),
        "relevant_hypotheses": [
            {"tuple": fact_to_list(h), "responsibility": str(d)} for h, d in ranked
        ],
        "necessary_sets": family_to_list(necessary),
    }


def _cmd_check(args: argparse.Namespace, budget: int | None) -> dict[str, Any]:
    reports = list(fixture_checks())
    if not args.fixtures_only:
        reports.extend(cross_check(args.seed, args.trials, args.max_size))
    return {
        "seed": args.seed,
        "trials": 0 if args.fixtures_only else args.trials,
        "max_size": args.max_size,
        "reports": [
            {
                "property": r.property_id,
                "instances": r.instances,
                "failures": list(r.failures),
            }
            for r in reports
        ],
        "passed": all(r.passed for r in reports),
    }


def _render_table(verb: str, payload: dict[str, Any]) -> str:
    if verb == "causes":
        rows = [["cause", "responsibility", "min contingency sets"]]
        for entry in payload["causes"]:
            rows.append(
                [
                    _fact_str(entry["tuple"]),
                    entry["responsibility"],
                    _family_str(entry["min_contingencies"]),
                ]
            )
        out = _facts_table(rows)
        if not payload["query_holds"]:
            out += "note: " + payload["note"] + "\n"
        return out
    if verb == "responsibility":
        return f"{_fact_str(payload['tuple'])}: {payload['responsibility']}\n"
    if verb == "repairs":
        rows = [["kind", "removed"]]
        for entry in payload["repairs"]:
            rows.append([entry["kind"], _family_str([entry["removed"]])])
        return _facts_table(rows)
    if verb == "cqa":
        return f"{_fact_str(payload['atom'])}: {str(payload['consistently_true']).lower()}\n"
    if verb == "diagnose":
        rows = [["diagnosis"]]
        for entry in payload["diagnoses"]:
            rows.append([_family_str([entry["abnormal"]])])
        out = _facts_table(rows)
        if payload["vacuous"]:
            out += "note: the observation does not hold; the empty diagnosis suffices\n"
        return out
    if verb == "abduce":
        rows = [["hypothesis", "responsibility"]]
        for entry in payload["relevant_hypotheses"]:
            rows.append([_fact_str(entry["tuple"]), entry["responsibility"]])
        return (
            "solutions: " + _family_str(payload["solutions"]) + "\n"
            "necessary sets: " + _family_str(payload["necessary_sets"]) + "\n"
            + _facts_table(rows)
        )
    if verb == "check":
        rows = [["property", "instances", "result"]]
        for entry in payload["reports"]:
            rows.append(
                [
                    entry["property"],
                    str(entry["instances"]),
                    "pass" if not entry["failures"] else f"FAIL ({len(entry['failures'])})",
                ]
            )
        return _facts_table(rows)
    raise AssertionError(verb)


def _fact_str(parts: list[str]) -> str:
    if len(parts) == 1:
        return parts[0]
    return f"{parts[0]}({', '.join(parts[1:])})"


_HANDLERS = {
    "causes": _cmd_causes,
    "responsibility": _cmd_responsibility,
    "repairs": _cmd_repairs,
    "cqa": _cmd_cqa,
    "diagnose": _cmd_diagnose,
    "abduce": _cmd_abduce,
    "check": _cmd_check,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if code is not None else EXIT_OK
    try:
        budget = budget_from_env(args.budget)
    except ValueError as exc:
        print(f"causelab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        payload = _HANDLERS[args.verb](args, budget)
    except ParseError as exc:
        print(f"causelab: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SchemaError as exc:
        print(f"causelab: schema error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"causelab: validation error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetError as exc:
        print(f"causelab: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except DomainError as exc:
        print(f"causelab: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.format == "json":
        sys.stdout.write(dumps(payload))
    else:
        sys.stdout.write(_render_table(args.verb, payload))
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())

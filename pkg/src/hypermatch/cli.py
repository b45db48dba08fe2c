"""Command-line front end.

Exit codes: 0 for a YES answer or success, 1 for a NO answer or a failed
property, 2 for usage, parse and precondition errors.  Every YES
certificate is re-checked before it is printed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass, field
from typing import Any

from . import orderable, reductions, separable, verify
from .core import (Hypergraph, InstanceError, Labeling, SizeLimitError,
                   digest, dumps, is_perfect_matching, materialize,
                   matching_to_dict, read_instance, to_dict)
from .generate import random_labeling, random_orderable, random_three_partition

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: str
    digest: str | None
    decision: str  # "yes", "no" or "error"
    certificate: dict[str, Any] = field(default_factory=dict)
    membership_tests: int | None = None
    wall_time: float = 0.0
    message: str = ""

    @property
    def exit_code(self) -> int:
        return {"yes": EXIT_YES, "no": EXIT_NO}.get(self.decision, EXIT_ERROR)

    def to_dict(self) -> dict:
        return {"command": self.command, "digest": self.digest, "decision": self.decision,
                "certificate": self.certificate, "membership_tests": self.membership_tests,
                "wall_time": round(self.wall_time, 6), "message": self.message}

    def render(self) -> str:
        lines = [f"{self.command}: {self.decision.upper()}"
                 + (f" ({self.message})" if self.message else "")]
        if self.digest:
            lines.append(f"  instance {self.digest}")
        if self.membership_tests is not None:
            lines.append(f"  membership tests: {self.membership_tests}")
        for key, value in self.certificate.items():
            lines.append(f"  {key}: {json.dumps(value)}")
        lines.append(f"  time: {self.wall_time:.3f}s")
        return "\n".join(lines)


def _load(path: str, want=(Hypergraph,)):
    try:
        obj = read_instance(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except InstanceError as exc:
        raise UsageError(f"{path}: {exc}") from None
    if isinstance(obj, tuple):
        raise UsageError(f"{path}: expected a hypergraph or labeling, got a matching")
    if Hypergraph in want and isinstance(obj, Labeling) and Labeling not in want:
        return materialize(obj)
    if not isinstance(obj, want):
        raise UsageError(f"{path}: expected a {want[0].__name__.lower()}")
    return obj


def cmd_check_orderable(args) -> RunReport:
    H = _load(args.path)
    result = orderable.find_elimination_order(H)
    report = RunReport("check-orderable", digest(H), "no", membership_tests=result.membership_tests)
    if result.orderable:
        ok, _ = orderable.verify_elimination_order(H, result.order)
        if not ok:
            raise AssertionError("recognizer produced an invalid elimination order")
        report.decision = "yes"
        report.certificate = result.order.to_certificate()
    else:
        report.message = "not orderable"
        report.certificate = {"stuck": sorted(result.stuck)}
    return report


def cmd_match(args) -> RunReport:
    H = _load(args.path)
    result = orderable.find_elimination_order(H)
    if not result.orderable:
        raise UsageError(f"hypergraph is not orderable (stuck at {sorted(result.stuck)})")
    order = orderable.designate_vacuous(result.order, H.k)
    r = orderable.compute_r_sequence(order, H.k)
    report = RunReport("match", digest(H), "no", membership_tests=result.membership_tests)
    report.certificate = {"order": order.to_certificate(), "r_sequence": list(r.values)}
    M = orderable.construct_matching_orderable(H)
    if M is None:
        report.message = (f"{H.n} is not a multiple of k = {H.k}" if H.n % H.k
                          else "r-sequence has a negative entry")
        return report
    if not is_perfect_matching(H, M):
        raise AssertionError("constructed matching is not perfect")
    report.decision = "yes"
    if args.certificate:
        report.certificate["matching"] = matching_to_dict(M, H.k, H.n)
    return report


def cmd_check_separable(args) -> RunReport:
    H = _load(args.path)
    result = separable.find_separating_labeling(H)
    report = RunReport("check-separable", digest(H), "no")
    if isinstance(result, Labeling):
        if materialize(result) != H:
            raise AssertionError("LP labeling does not reproduce the hypergraph")
        report.decision = "yes"
        report.certificate = to_dict(result)
    else:
        if not separable.check_infeasibility_certificate(separable.separating_system(H), result.dual):
            raise AssertionError("LP infeasibility certificate does not verify")
        report.message = "not separable"
        report.certificate = result.to_dict()
    return report


def cmd_reduce(args) -> RunReport:
    lab = _load(args.path, want=(Labeling,))
    if lab.k != 3:
        raise UsageError(f"reductions start from a 3-labeling, got k = {lab.k}")
    if args.reduction == "three-partition":
        out = reductions.three_partition_to_geq(lab)
        report = RunReport("reduce three-partition", digest(lab), "yes")
        if isinstance(out, reductions.NoMatchingShortcut):
            report.decision, report.message = "no", out.reason
        else:
            report.certificate = {"instance": to_dict(out)}
    else:
        if args.k < 4:
            raise UsageError(f"--k must be at least 4, got {args.k}")
        out = reductions.lift_to_k(lab, args.k)
        report = RunReport("reduce lift", digest(lab), "yes")
        if isinstance(out, reductions.NoMatchingShortcut):
            report.decision, report.message = "no", out.reason
        else:
            report.certificate = {"lifted": out.to_dict()}
    if args.out and report.decision == "yes":
        with open(args.out, "w", encoding="utf-8") as fh:
            payload = report.certificate.get("instance") or report.certificate["lifted"]
            json.dump(payload, fh)
            fh.write("\n")
    return report


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    try:
        if args.kind == "orderable":
            obj, _ = random_orderable(args.n, args.k, rng, p=args.p, shuffle=args.shuffle,
                                      roles=args.roles)
        elif args.kind == "labeling":
            obj = random_labeling(args.n, args.k, rng, value_range=args.range)
        else:
            obj = random_three_partition(args.m, rng, value_range=args.range)
    except (ValueError, InstanceError) as exc:
        raise UsageError(str(exc)) from None
    text = dumps(obj) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_YES


def cmd_verify(args) -> int:
    start = time.perf_counter()
    outcomes = verify.run_suite(args.suite, args.trials, args.seed)
    failed = [o for o in outcomes if not o.ok]
    dumps_written = [str(verify.dump_counterexample(o, args.out or ".")) for o in failed]
    if args.json:
        print(json.dumps({
            "command": f"verify {args.suite}",
            "decision": "no" if failed else "yes",
            "properties": [{"name": o.name, "trials": o.trials, "passed": o.passed,
                            "error": o.error} for o in outcomes],
            "counterexamples": dumps_written,
            "wall_time": round(time.perf_counter() - start, 6)}, indent=2))
    else:
        for o in outcomes:
            status = "ok  " if o.ok else "FAIL"
            print(f"{status} {o.passed}/{o.trials}  {o.name}")
            if o.error:
                print(f"       {o.error}")
        for path in dumps_written:
            print(f"counterexample written to {path}")
    return EXIT_NO if failed else EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a machine-readable report")

    parser = argparse.ArgumentParser(
        prog="hypermatch",
        description="Orderable and separable hypergraphs: recognition, perfect matching, reductions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-orderable", parents=[common], help="find an elimination order")
    p.add_argument("path")
    p.set_defaults(func=cmd_check_orderable)

    p = sub.add_parser("match", parents=[common], help="decide perfect matching for an orderable instance")
    p.add_argument("path")
    p.add_argument("--certificate", action="store_true", help="print the matching")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("check-separable", parents=[common], help="find a separating labeling by LP")
    p.add_argument("path")
    p.set_defaults(func=cmd_check_separable)

    p = sub.add_parser("reduce", help="apply a reduction to a 3-labeling")
    red = p.add_subparsers(dest="reduction", required=True)
    q = red.add_parser("three-partition", parents=[common])
    q.add_argument("path")
    q.add_argument("--out")
    q.set_defaults(func=cmd_reduce)
    q = red.add_parser("lift", parents=[common])
    q.add_argument("path")
    q.add_argument("--k", type=int, required=True, help="target edge size (>= 4)")
    q.add_argument("--out")
    q.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", help="generate a seeded random instance")
    gen = p.add_subparsers(dest="kind", required=True)
    q = gen.add_parser("orderable")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--p", type=float, default=0.5, help="probability of a dominating vertex")
    q.add_argument("--roles", help="explicit role string such as DDDIDI")
    q.add_argument("--shuffle", action="store_true", help="randomly permute vertex ids")
    q = gen.add_parser("labeling")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--range", type=int, default=5)
    q = gen.add_parser("three-partition")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--range", type=int, default=6)
    for q in gen.choices.values():
        q.add_argument("--seed", type=int, default=0)
        q.add_argument("--out")
        q.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", parents=[common], help="run the brute-force cross-checks")
    p.add_argument("suite", choices=["orderable", "separable", "reductions", "all"])
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="directory for counterexample files")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_YES
    start = time.perf_counter()
    try:
        out = args.func(args)
    except (UsageError, SizeLimitError) as exc:
        if getattr(args, "json", False):
            print(json.dumps({"command": args.command, "decision": "error", "message": str(exc)}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if isinstance(out, int):
        return out
    out.wall_time = time.perf_counter() - start
    print(json.dumps(out.to_dict(), indent=2) if args.json else out.render())
    return out.exit_code


if __name__ == "__main__":
    sys.exit(main())

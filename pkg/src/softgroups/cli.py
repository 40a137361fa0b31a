"""Command line interface.

Subcommands:

* ``bn-info N``: order and defining relations of the degree N group
* ``enum {sc,bp} N``: stream signed compositions or bi-partitions as JSON
  lines in canonical order, with a trailing count line
* ``verify PATH``: revalidate a serialized group, soft group or soft morphism
* ``analyze PATH``: categorical properties of a serialized soft morphism
* ``product LEFT RIGHT``: product of two serialized soft groups
* ``paper-example N``: run the sorting scenario end to end and write artifacts

Exit codes: 0 all checks passed, 1 a check failed, 2 usage or parse error,
3 an analysis hit its scale bound.  All output except the elapsed-time field
is byte-stable for fixed inputs.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import category, serialize, soft
from .compositions import bipartitions, signed_compositions
from .hyperoctahedral import (
    coxeter_relation_checks,
    hyperoctahedral_group,
    hyperoctahedral_order,
    signed_composition_soft_group,
    bipartition_soft_group,
    sorting_soft_hom,
)
from .permutation import NotAHomomorphismError
from .soft import SoftValidationError

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_SCALE = 3


@dataclass
class RunReport:
    command: str
    inputs: dict
    results: dict = field(default_factory=dict)
    checks_passed: int = 0
    checks_failed: int = 0
    _start: float = field(default_factory=time.perf_counter, repr=False)

    def check(self, ok: bool) -> bool:
        if ok:
            self.checks_passed += 1
        else:
            self.checks_failed += 1
        return ok

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "checks_passed": self.checks_passed,
            "checks_failed": self.checks_failed,
            "elapsed_ms": int((time.perf_counter() - self._start) * 1000),
        }


def _emit(report: RunReport, fmt: str, out) -> None:
    data = report.to_dict()
    if fmt == "json":
        print(json.dumps(data), file=out)
        return
    print(f"command: {data['command']}", file=out)
    for key, value in data["results"].items():
        print(f"{key}: {json.dumps(value)}", file=out)
    print(
        f"checks: {data['checks_passed']} passed, {data['checks_failed']} failed "
        f"({data['elapsed_ms']} ms)",
        file=out,
    )


def _digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()[:16]


def _load_json(path_str: str) -> tuple[Path, object]:
    path = Path(path_str)
    try:
        text = path.read_text()
    except OSError as exc:
        raise FormatUsageError(f"cannot read {path}: {exc}") from exc
    try:
        return path, json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatUsageError(f"{path} is not valid JSON: {exc}") from exc


class FormatUsageError(Exception):
    """Input that cannot even be parsed; maps to the usage exit code."""


def cmd_bn_info(args) -> int:
    report = RunReport("bn-info", {"n": args.n})
    group = hyperoctahedral_group(args.n)
    expected = hyperoctahedral_order(args.n)
    report.results["order"] = len(group)
    report.results["expected_order"] = expected
    report.check(len(group) == expected)
    failed = []
    for label, lhs, rhs in coxeter_relation_checks(args.n):
        if not report.check(lhs == rhs):
            failed.append(label)
    report.results["relations_checked"] = len(coxeter_relation_checks(args.n))
    report.results["relations_failed"] = failed
    report.results["generators"] = [list(g.window) for g in group.generators]
    _emit(report, args.format, sys.stdout)
    return EXIT_OK if report.checks_failed == 0 else EXIT_CHECK_FAILED


def cmd_enum(args) -> int:
    if args.n < 1:
        raise FormatUsageError("enum needs n >= 1")
    if args.kind == "sc":
        items = [serialize.param_to_jsonable(c) for c in signed_compositions(args.n)]
    else:
        items = [serialize.param_to_jsonable(b) for b in bipartitions(args.n)]
    if args.format == "json":
        for item in items:
            print(json.dumps(item))
        print(json.dumps({"count": len(items)}))
    else:
        for item in items:
            print(json.dumps(item))
        print(f"count: {len(items)}")
    return EXIT_OK


def _detect_and_load(doc):
    if isinstance(doc, dict) and {"source", "target", "f", "p"} <= set(doc):
        return "soft-hom", serialize.soft_hom_from_dict(doc)
    if isinstance(doc, dict) and {"carrier", "params", "assign"} <= set(doc):
        return "soft-group", serialize.soft_group_from_dict(doc)
    if isinstance(doc, dict) and {"degree", "generators"} <= set(doc):
        return "group", serialize.group_from_dict(doc)
    raise FormatUsageError(
        "unrecognized document: expected a group, soft group or soft morphism"
    )


def cmd_verify(args) -> int:
    path, doc = _load_json(args.path)
    report = RunReport("verify", {"path": str(path), "sha256": _digest(path)})
    try:
        kind, obj = _detect_and_load(doc)
    except (SoftValidationError, NotAHomomorphismError, ValueError) as exc:
        if isinstance(exc, serialize.FormatError) or isinstance(exc, FormatUsageError):
            raise
        report.check(False)
        report.results["error"] = str(exc)
        param = getattr(exc, "parameter", None)
        if param is not None:
            report.results["parameter"] = serialize.param_to_jsonable(param)
        _emit(report, args.format, sys.stdout)
        return EXIT_CHECK_FAILED
    report.check(True)
    report.results["kind"] = kind
    if kind == "group":
        report.results["order"] = len(obj)
    elif kind == "soft-group":
        report.results["carrier_order"] = len(obj.carrier)
        report.results["params"] = len(obj.params)
    else:
        report.results["source_params"] = len(obj.source.params)
        report.results["target_params"] = len(obj.target.params)
        report.results["carrier_map_injective"] = obj.f.is_injective
        report.results["carrier_map_surjective"] = obj.f.is_surjective
    _emit(report, args.format, sys.stdout)
    return EXIT_OK


def cmd_analyze(args) -> int:
    path, doc = _load_json(args.path)
    report = RunReport("analyze", {"path": str(path), "sha256": _digest(path)})
    if not (isinstance(doc, dict) and {"source", "target", "f", "p"} <= set(doc)):
        raise FormatUsageError("analyze expects a serialized soft morphism")
    hom = serialize.soft_hom_from_dict(doc)
    wanted = [p.strip() for p in args.properties.split(",") if p.strip()]
    known = {"monic", "epic", "split-monic", "kernel"}
    unknown = [p for p in wanted if p not in known]
    if unknown:
        raise FormatUsageError(f"unknown properties: {', '.join(unknown)}")
    universe = category.seeded_universe(seed=args.seed, count=args.universe_size)
    verdicts = []
    hit_scale = False
    for prop in wanted:
        if prop == "kernel":
            ks = soft.soft_kernel(hom)
            if ks is None:
                report.results["kernel"] = "undefined"
            else:
                report.results["kernel"] = {
                    "carrier_order": len(ks.carrier),
                    "params": [serialize.param_to_jsonable(a) for a in ks.params],
                    "object": serialize.soft_group_to_dict(ks),
                }
            report.check(True)
            continue
        try:
            if prop == "monic":
                verdict = category.check_monic(
                    hom, universe, max_order=args.max_order, max_params=args.max_params
                )
            elif prop == "epic":
                verdict = category.check_epic(
                    hom, universe, max_order=args.max_order, max_params=args.max_params
                )
            else:
                verdict = category.check_split_monic(
                    hom, max_order=args.max_order, max_params=args.max_params
                )
        except category.ScaleBoundError as exc:
            verdict = category.MorphismVerdict(prop, category.UNKNOWN, note=str(exc))
        if verdict.holds == category.UNKNOWN:
            hit_scale = True
        report.check(verdict.holds != category.UNKNOWN)
        verdicts.append(serialize.verdict_to_dict(verdict))
    report.results["verdicts"] = verdicts
    _emit(report, args.format, sys.stdout)
    if hit_scale:
        return EXIT_SCALE
    return EXIT_OK


def cmd_product(args) -> int:
    lpath, ldoc = _load_json(args.left)
    rpath, rdoc = _load_json(args.right)
    report = RunReport(
        "product",
        {
            "left": str(lpath),
            "left_sha256": _digest(lpath),
            "right": str(rpath),
            "right_sha256": _digest(rpath),
        },
    )
    for doc, name in ((ldoc, args.left), (rdoc, args.right)):
        if not (isinstance(doc, dict) and {"carrier", "params", "assign"} <= set(doc)):
            raise FormatUsageError(f"{name} is not a serialized soft group")
    left = serialize.soft_group_from_dict(ldoc)
    right = serialize.soft_group_from_dict(rdoc)
    prod = category.categorical_product(left, right)
    report.check(True)
    report.check(len(prod.projections) == 2)
    payload = serialize.soft_group_to_dict(prod.object)
    report.results["carrier_order"] = len(prod.object.carrier)
    report.results["params"] = len(prod.object.params)
    report.results["projections_validated"] = True
    if args.out:
        Path(args.out).write_text(json.dumps(payload, indent=2) + "\n")
        report.results["written"] = str(args.out)
    else:
        report.results["product"] = payload
    _emit(report, args.format, sys.stdout)
    return EXIT_OK if report.checks_failed == 0 else EXIT_CHECK_FAILED


def cmd_paper_example(args) -> int:
    report = RunReport("paper-example", {"n": args.n})
    n = args.n
    source = signed_composition_soft_group(n)
    target = bipartition_soft_group(n)
    hom = sorting_soft_hom(n)
    report.check(len(source.params) == len(signed_compositions(n)))
    report.check(len(target.params) == len(bipartitions(n)))
    report.results["carrier_order"] = len(source.carrier)
    report.results["source_params"] = len(source.params)
    report.results["target_params"] = len(target.params)
    report.results["diagram_checks"] = len(source.params)

    ks = soft.soft_kernel(hom)
    report.check(ks is not None)
    if ks is not None:
        expected = tuple([-1] * n)
        kernel_params = [serialize.param_to_jsonable(a) for a in ks.params]
        report.results["kernel_params"] = kernel_params
        report.results["kernel_carrier_order"] = len(ks.carrier)
        report.check(len(ks.params) == 1 and ks.params[0].parts == expected)
        report.check(len(ks.carrier) == 1)
        triviality = soft.kernel_triviality_report(hom)
        report.check(triviality.agree)
        report.results["kernel_trivial"] = triviality.kernel_trivial
        report.results["carrier_map_injective"] = triviality.injective

    artifacts = []
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        files = {
            f"signed_composition_soft_group_n{n}.json": serialize.soft_group_to_dict(source),
            f"bipartition_soft_group_n{n}.json": serialize.soft_group_to_dict(target),
            f"sorting_hom_n{n}.json": serialize.soft_hom_to_dict(hom),
        }
        if ks is not None:
            files[f"soft_kernel_n{n}.json"] = serialize.soft_group_to_dict(ks)
        for name, payload in files.items():
            target_path = out_dir / name
            target_path.write_text(json.dumps(payload, indent=2) + "\n")
            artifacts.append(str(target_path))
    report.results["artifacts"] = artifacts
    _emit(report, args.format, sys.stdout)
    return EXIT_OK if report.checks_failed == 0 else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="softgroups",
        description="Soft groups over finite signed-permutation carriers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("json", "table"), default="json")

    p = sub.add_parser("bn-info", help="order and relations of the degree N group")
    p.add_argument("n", type=int, choices=range(1, 5), metavar="N")
    add_common(p)
    p.set_defaults(func=cmd_bn_info)

    p = sub.add_parser("enum", help="enumerate signed compositions or bi-partitions")
    p.add_argument("kind", choices=("sc", "bp"))
    p.add_argument("n", type=int, metavar="N")
    add_common(p)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("verify", help="revalidate a serialized object")
    p.add_argument("path")
    add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("analyze", help="categorical properties of a soft morphism")
    p.add_argument("path")
    p.add_argument(
        "--properties",
        default="monic,epic,split-monic,kernel",
        help="comma-separated subset of monic,epic,split-monic,kernel",
    )
    p.add_argument("--max-order", type=int, default=category.DEFAULT_MAX_ORDER)
    p.add_argument("--max-params", type=int, default=category.DEFAULT_MAX_PARAMS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--universe-size", type=int, default=10)
    add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("product", help="product of two serialized soft groups")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--out", help="write the product JSON here instead of stdout")
    add_common(p)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("paper-example", help="run the sorting scenario end to end")
    p.add_argument("n", type=int, choices=range(1, 4), metavar="N")
    p.add_argument("--out", help="directory for the JSON artifacts")
    add_common(p)
    p.set_defaults(func=cmd_paper_example)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatUsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except serialize.FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except category.ScaleBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCALE
    except (SoftValidationError, NotAHomomorphismError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())

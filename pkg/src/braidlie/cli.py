"""Command line front-end.

Exit codes: 0 when every requested check passes, 1 when some axiom fails
(reports are still written), 2 for malformed input or usage errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import serialize as ser
from .constructions import VARIANTS, DoubleBicrosssumSpec, VariantError, build_double_bicrosssum, verify_main_theorem
from .corpus import example_library, library_names
from .doubles import DOUBLE_VARIANTS, R_AXIOMS, check_rmatrix, quantum_double
from .enveloping import EnvelopingError, PreconditionViolation, verify_env_isomorphism
from .registry import axiom, axiom_registry
from .structures import ActionData, MissingGenerator, PairBundle, check_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: dict = field(default_factory=dict)
    axioms: list | None = None
    variant: str | None = None
    outputs: dict = field(default_factory=dict)
    conductor: int | None = None
    human: bool = False
    extra: dict = field(default_factory=dict)


# output helpers


def _report_doc(command: str, passed: bool, **body) -> dict:
    d = {"format": ser.FORMAT, "kind": "report", "command": command, "passed": passed}
    d.update(body)
    return d


def _human(doc: dict) -> str:
    lines = [f"{doc['command']}: {'PASS' if doc['passed'] else 'FAIL'}"]

    def walk(rs, indent="  "):
        for r in rs:
            status = "PASS" if r["passed"] else "FAIL"
            tgt = f" on {r['target']}" if r.get("target") else ""
            w = ""
            if "witness" in r:
                x = r["witness"]
                w = f"  witness {x['in_label']} -> {x['out_label']} ({x['value']['value']})"
            lines.append(f"{indent}{status} {r['axiom']}{tgt}{w}")

    for key in ("results", "hypotheses", "conclusions", "rmatrix"):
        if key in doc:
            lines.append(f" {key}:")
            walk(doc[key])
    if "verdict" in doc:
        lines.append(f" verdict: {doc['verdict']}")
    if "checks" in doc:
        for k, v in doc["checks"].items():
            lines.append(f"  {'PASS' if v else 'FAIL'} check {k}")
    if "axioms" in doc and doc["command"] == "registry":
        for a in doc["axioms"]:
            lines.append(f"  {a['id']:<10} {a['citation']}")
    return "\n".join(lines) + "\n"


def _emit(doc: dict, path, human: bool):
    text = _human(doc) if human else ser.dumps(doc)
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _write(doc: dict, path):
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Path(path).write_text(ser.dumps(doc))


def _load_subject(path):
    doc = ser.load(path)
    kind = doc.get("kind", "structure")
    if kind == "pair":
        return ser.pair_from_json(doc)
    if kind == "structure":
        return ser.structure_from_json(doc)
    raise ser.MalformedInput(f"{path}: cannot check a document of kind {kind!r}")


def _axiom_list(text: str | None):
    if text is None:
        return None
    ids = [a.strip() for a in text.split(",") if a.strip()]
    for a in ids:
        try:
            axiom(a)
        except KeyError as e:
            raise UsageError(f"unknown axiom id {a!r}") from e
    return ids


# commands


def cmd_check(cfg: RunConfig) -> int:
    subject = _load_subject(cfg.inputs["file"])
    reports = check_all(subject, cfg.axioms)
    passed = all(r.passed for r in reports)
    doc = _report_doc("check", passed, results=[r.to_json() for r in reports])
    _emit(doc, cfg.outputs.get("report"), cfg.human)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_construct(cfg: RunConfig) -> int:
    A = ser.structure_from_json(ser.load(cfg.inputs["a"]))
    H = ser.structure_from_json(ser.load(cfg.inputs["h"]))
    if A.obj.group != H.obj.group:
        raise ser.MalformedInput("A and H must be graded by the same group")
    maps = ActionData()
    if cfg.inputs.get("maps"):
        maps = ser.load_maps(ser.load(cfg.inputs["maps"]), A, H)
    try:
        spec = DoubleBicrosssumSpec(A, H, maps, cfg.variant)
        spec.bundle
    except (VariantError, ValueError) as e:
        raise UsageError(str(e)) from e
    res = build_double_bicrosssum(spec, name=cfg.extra.get("name", "D"))
    _write(ser.structure_to_json(res.D, cfg.conductor), cfg.outputs["out"])
    rep = verify_main_theorem(spec, require_slb=not cfg.extra.get("no_slb", False))
    passed = rep.verdict == "verified"
    doc = _report_doc("construct", passed, **rep.to_json())
    _emit(doc, cfg.outputs.get("report"), cfg.human)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_qdouble(cfg: RunConfig) -> int:
    H = ser.structure_from_json(ser.load(cfg.inputs["h"]))
    q = quantum_double(H, cfg.variant)
    if cfg.outputs.get("out"):
        _write(ser.structure_to_json(q.D, cfg.conductor), cfg.outputs["out"])
    rep = verify_main_theorem(q.spec)
    rmat = check_rmatrix(q.D, which=R_AXIOMS)
    passed = rep.verdict == "verified" and all(r.passed for r in rmat)
    body = rep.to_json()
    body["rmatrix"] = [r.to_json() for r in rmat]
    body["dim"] = q.D.dim
    doc = _report_doc("qdouble", passed, **body)
    _emit(doc, cfg.outputs.get("report"), cfg.human)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_cybe(cfg: RunConfig) -> int:
    H = ser.structure_from_json(ser.load(cfg.inputs["h"]))
    R = ser.load_tensor(ser.load(cfg.inputs["r"]), H, "R")
    reports = check_rmatrix(H, R, which=cfg.axioms or R_AXIOMS)
    passed = all(r.passed for r in reports)
    doc = _report_doc("cybe", passed, results=[r.to_json() for r in reports])
    _emit(doc, cfg.outputs.get("report"), cfg.human)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_env(cfg: RunConfig) -> int:
    A = ser.structure_from_json(ser.load(cfg.inputs["a"]))
    H = ser.structure_from_json(ser.load(cfg.inputs["h"]))
    maps = ActionData()
    if cfg.inputs.get("maps"):
        maps = ser.load_maps(ser.load(cfg.inputs["maps"]), A, H)
    bundle = PairBundle(A, H, maps)
    try:
        rep = verify_env_isomorphism(A, H, bundle.map("alpha"), bundle.map("beta"), cfg.extra["degree"])
    except PreconditionViolation as e:
        doc = _report_doc("env", False, error=str(e), results=[r.to_json() for r in e.reports])
        _emit(doc, cfg.outputs.get("report"), cfg.human)
        return EXIT_FAIL
    except EnvelopingError as e:
        raise UsageError(str(e)) from e
    doc = _report_doc("env", rep.passed, **{k: v for k, v in rep.to_json().items() if k != "passed"})
    _emit(doc, cfg.outputs.get("report"), cfg.human)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_examples(cfg: RunConfig) -> int:
    name = cfg.inputs.get("name")
    if name is None:
        doc = _report_doc("examples", True, names=library_names())
        _emit(doc, None, False)
        return EXIT_OK
    try:
        ex = example_library(name)
    except KeyError as e:
        raise UsageError(e.args[0]) from e
    out = Path(cfg.outputs.get("out") or ".")
    _write(ser.structure_to_json(ex.structure, cfg.conductor), out / f"{ex.name}.json")
    reports = check_all(ex.structure)
    passed = all(r.passed for r in reports)
    doc = _report_doc("examples", passed, example=ex.name, description=ex.description,
                      results=[r.to_json() for r in reports])
    _write(doc, out / f"{ex.name}.report.json")
    if cfg.human:
        sys.stdout.write(_human(doc))
    return EXIT_OK if passed else EXIT_FAIL


def cmd_registry(cfg: RunConfig) -> int:
    entries = [{"id": e.id, "objects": list(e.objects), "citation": e.citation,
                "lhs": e.lhs_text, "rhs": e.rhs_text} for e in axiom_registry()]
    doc = _report_doc("registry", True, axioms=entries)
    _emit(doc, cfg.outputs.get("report"), cfg.human)
    return EXIT_OK


COMMANDS = {
    "check": cmd_check, "construct": cmd_construct, "qdouble": cmd_qdouble, "cybe": cmd_cybe,
    "env": cmd_env, "examples": cmd_examples, "registry": cmd_registry,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="braidlie", description="Braided Lie bialgebra checks and constructions")
    sub = p.add_subparsers(dest="command", required=True)

    def renderer(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--json", action="store_true", help="JSON report (the default)")
        g.add_argument("--human", action="store_true", help="plain text report instead of JSON")

    def common(sp, report=True):
        renderer(sp)
        if report:
            sp.add_argument("--report", help="write the report here instead of stdout")

    def conductor(sp):
        sp.add_argument("--conductor", type=int, help="working conductor for written scalars")

    sp = sub.add_parser("check", help="check axioms on a structure or pair bundle")
    sp.add_argument("file")
    sp.add_argument("--axioms", help="comma separated axiom ids (default: all applicable)")
    common(sp)

    sp = sub.add_parser("construct", help="build the double bicrosssum A (+) H")
    sp.add_argument("--variant", default="double_bicrosssum", choices=VARIANTS)
    sp.add_argument("--a", required=True)
    sp.add_argument("--h", required=True)
    sp.add_argument("--maps")
    sp.add_argument("--out", required=True)
    sp.add_argument("--name", default="D")
    sp.add_argument("--no-slb", action="store_true", help="drop SLB and SLB-R from the hypotheses")
    common(sp)
    conductor(sp)

    sp = sub.add_parser("qdouble", help="quantum double of a structure")
    sp.add_argument("h")
    sp.add_argument("--variant", default="cop", choices=DOUBLE_VARIANTS)
    sp.add_argument("--out")
    common(sp)
    conductor(sp)

    sp = sub.add_parser("cybe", help="check an R-matrix against COB and the Yang-Baxter equations")
    sp.add_argument("h")
    sp.add_argument("r")
    sp.add_argument("--axioms")
    common(sp)

    sp = sub.add_parser("env", help="enveloping algebra comparison")
    sp.add_argument("action", choices=["verify"])
    sp.add_argument("--a", required=True)
    sp.add_argument("--h", required=True)
    sp.add_argument("--maps")
    sp.add_argument("--degree", type=int, default=3)
    common(sp)

    sp = sub.add_parser("examples", help="write a library example and its golden report")
    sp.add_argument("name", nargs="?")
    sp.add_argument("--out", default=".")
    sp.add_argument("--list", action="store_true")
    renderer(sp)
    conductor(sp)

    sp = sub.add_parser("registry", help="list the axiom registry")
    sp.add_argument("--list", action="store_true")
    common(sp)
    return p


def config_from_args(ns) -> RunConfig:
    cfg = RunConfig(ns.command, human=getattr(ns, "human", False),
                    conductor=getattr(ns, "conductor", None), variant=getattr(ns, "variant", None))
    if getattr(ns, "report", None):
        cfg.outputs["report"] = ns.report
    if ns.command == "check":
        cfg.inputs["file"] = ns.file
        cfg.axioms = _axiom_list(ns.axioms)
    elif ns.command == "construct":
        cfg.inputs.update(a=ns.a, h=ns.h, maps=ns.maps)
        cfg.outputs["out"] = ns.out
        cfg.extra.update(name=ns.name, no_slb=ns.no_slb)
    elif ns.command == "qdouble":
        cfg.inputs["h"] = ns.h
        cfg.outputs["out"] = ns.out
    elif ns.command == "cybe":
        cfg.inputs.update(h=ns.h, r=ns.r)
        cfg.axioms = _axiom_list(ns.axioms)
    elif ns.command == "env":
        if ns.degree < 1:
            raise UsageError("--degree must be positive")
        cfg.inputs.update(a=ns.a, h=ns.h, maps=ns.maps)
        cfg.extra["degree"] = ns.degree
    elif ns.command == "examples":
        if not ns.list:
            cfg.inputs["name"] = ns.name
        cfg.outputs["out"] = ns.out
    return cfg


def run(cfg: RunConfig) -> int:
    try:
        return COMMANDS[cfg.command](cfg)
    except (ser.MalformedInput, UsageError, MissingGenerator) as e:
        msg = e.args[0] if isinstance(e, MissingGenerator) and e.args else e
        print(f"braidlie: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        cfg = config_from_args(ns)
    except UsageError as e:
        print(f"braidlie: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())

"""``cevconic`` command line: catalog, verify, fuzz and svg."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Any, Optional

from cevconic.config import MAP_FIELDS, POINT_FIELDS, CevianConfig, build_config
from cevconic.conics import classify
from cevconic.fuzz import MODES, fuzz
from cevconic.kernel import GeometryError, HPoint
from cevconic.serialize import point_json
from cevconic.svg import render_svg
from cevconic.theorems import FAILED, REGISTRY, check_all
from cevconic.triangle import (
    Inadmissible,
    IsCentroid,
    ParseError,
    TriangleRef,
    bary_to_point,
    parse_bary,
    parse_point,
    parse_triangle,
    point_to_bary,
)

EXIT_OK, EXIT_FAILED, EXIT_INADMISSIBLE, EXIT_PARSE, EXIT_IO = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which the exit code contract reserves
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cevconic", description="Exact cevian-conic constructions and theorem checks.")
    p.add_argument("command", choices=("catalog", "verify", "fuzz", "svg"))
    p.add_argument("--triangle", help='vertices as "x1,y1;x2,y2;x3,y3"')
    pt = p.add_mutually_exclusive_group()
    pt.add_argument("--point", help='Cartesian point "x,y"')
    pt.add_argument("--bary", help='barycentric point "u:v:w"')
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--mode", choices=MODES, default="mixed",
                   help="fuzz stream: mixed, or only generic, steiner or median configs")
    p.add_argument("--format", choices=("json", "text"), default=None)
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    return p


@dataclass
class RunConfig:
    command: str
    triangle: Optional[TriangleRef]
    point: Optional[HPoint]
    seed: int
    count: int
    bound: int
    jobs: int
    mode: str
    format: str
    out: str


def default_seed() -> int:
    env = os.environ.get("CEVCONIC_SEED")
    if env is None or not env.strip():
        return 0
    try:
        return int(env)
    except ValueError:
        raise ParseError(f"CEVCONIC_SEED is not an integer: {env!r}") from None


def parse_run_config(ns: argparse.Namespace) -> RunConfig:
    tri = point = None
    if ns.command != "fuzz":
        if ns.triangle is None:
            raise ParseError("--triangle is required")
        tri = parse_triangle(ns.triangle)
        if ns.point is not None:
            point = parse_point(ns.point)
        elif ns.bary is not None:
            point = bary_to_point(tri, parse_bary(ns.bary))
        else:
            raise ParseError("one of --point or --bary is required")
    if ns.count < 0 or ns.bound < 1 or ns.jobs < 1:
        raise ParseError("--count must be >= 0, --bound and --jobs >= 1")
    fmt = ns.format or ("text" if ns.command == "fuzz" else "json")
    seed = ns.seed if ns.seed is not None else default_seed()
    return RunConfig(ns.command, tri, point, seed, ns.count, ns.bound, ns.jobs,
                     ns.mode, fmt, ns.out)


def catalog_name(field: str) -> str:
    """Field names with a trailing ``p`` mean primed points: ``Qp`` -> ``Qprime``."""
    if len(field) > 1 and field.endswith("p"):
        return field[:-1] + "prime"
    return field


def catalog_json(cfg: CevianConfig) -> dict[str, Any]:
    out = {}
    for field in POINT_FIELDS:
        p = getattr(cfg, field)
        if p is not None:
            out[catalog_name(field)] = point_json(p)
    Z = cfg.Z
    if Z is not None:
        out["Z"] = point_json(Z)
    return out


def conic_json(cfg: CevianConfig) -> Optional[dict[str, Any]]:
    if cfg.conic is None:
        return None
    Z = cfg.Z
    return {
        "coeffs": [str(c) for c in cfg.conic.coeffs],
        "class": classify(cfg.conic),
        "center": None if Z is None else point_json(Z),
    }


def report_document(cfg: CevianConfig, reports=None) -> dict[str, Any]:
    return {
        "triangle": [point_json(v) for v in cfg.tri.vertices],
        "point": {"xy": point_json(cfg.P),
                  "bary": [str(c) for c in point_to_bary(cfg.tri, cfg.P).coords]},
        "catalog": catalog_json(cfg),
        "maps": {catalog_name(m): [str(x) for x in getattr(cfg, m).entries]
                 for m in MAP_FIELDS if getattr(cfg, m) is not None},
        "conic": conic_json(cfg),
        "reports": [{"id": r.id, "status": r.status, "witness": r.witness}
                    for r in (reports or [])],
    }


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _value_text(v) -> str:
    if isinstance(v, dict):
        return "infinite ({}, {})".format(*v["infinite"])
    return "({}, {})".format(*v)


def document_text(doc: dict[str, Any]) -> str:
    lines = ["triangle: " + "  ".join(_value_text(v) for v in doc["triangle"]),
             "point: " + _value_text(doc["point"]["xy"])
             + "  bary (" + " : ".join(doc["point"]["bary"]) + ")"]
    for name, v in doc["catalog"].items():
        lines.append(f"  {name:8s} {_value_text(v)}")
    conic = doc["conic"]
    if conic is None:
        lines.append("conic: none (P on a median, ABCPQ lie on a line pair)")
    else:
        lines.append("conic: [" + ", ".join(conic["coeffs"]) + f"]  {conic['class']}")
        if conic["center"] is not None:
            lines.append("center: " + _value_text(conic["center"]))
    for r in doc["reports"]:
        line = f"{r['id']:14s} {r['status']}"
        if r["witness"]:
            line += "  " + json.dumps(r["witness"], sort_keys=True)
        lines.append(line)
    if doc["reports"]:
        n = sum(r["status"] == FAILED for r in doc["reports"])
        lines.append(f"FAILED: {n}")
    return "\n".join(lines) + "\n"


def fuzz_text(summary: dict[str, Any]) -> str:
    lines = [f"seed {summary['seed']}  count {summary['count']}  bound {summary['bound']}"
             f"  mode {summary['mode']}",
             "branches: " + "  ".join(f"{k} {v}" for k, v in summary["branches"].items()),
             f"{'id':14s} {'holds':>6s} {'not_met':>8s} {'FAILED':>7s}"]
    for rid in REGISTRY:
        c = summary["counts"][rid]
        lines.append(f"{rid:14s} {c['holds']:6d} {c['hypothesis_not_met']:8d} {c['FAILED']:7d}")
    lines.append(f"FAILED: {summary['failed']}")
    if summary["first_failure"] is not None:
        lines.append("first failure: " + json.dumps(summary["first_failure"], sort_keys=True))
    return "\n".join(lines) + "\n"


def cmd_catalog(rc: RunConfig) -> tuple[str, int]:
    cfg = build_config(rc.triangle, rc.point)
    doc = report_document(cfg)
    return (_dump(doc) if rc.format == "json" else document_text(doc)), EXIT_OK


def cmd_verify(rc: RunConfig) -> tuple[str, int]:
    cfg = build_config(rc.triangle, rc.point)
    reports = check_all(cfg)
    doc = report_document(cfg, reports)
    code = EXIT_FAILED if any(r.status == FAILED for r in reports) else EXIT_OK
    return (_dump(doc) if rc.format == "json" else document_text(doc)), code


def cmd_fuzz(rc: RunConfig) -> tuple[str, int]:
    summary = fuzz(rc.seed, rc.count, rc.bound, jobs=rc.jobs, mode=rc.mode)
    code = EXIT_FAILED if summary["failed"] else EXIT_OK
    return (_dump(summary) if rc.format == "json" else fuzz_text(summary)), code


def cmd_svg(rc: RunConfig) -> tuple[str, int]:
    return render_svg(build_config(rc.triangle, rc.point)), EXIT_OK


COMMANDS = {"catalog": cmd_catalog, "verify": cmd_verify, "fuzz": cmd_fuzz, "svg": cmd_svg}


def write_output(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        rc = parse_run_config(ns)
        text, code = COMMANDS[rc.command](rc)
    except ParseError as exc:
        print(f"cevconic: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (Inadmissible, IsCentroid) as exc:
        print(f"cevconic: inadmissible point: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    except GeometryError as exc:
        print(f"cevconic: inadmissible input: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    try:
        write_output(text, rc.out)
    except OSError as exc:
        print(f"cevconic: cannot write {rc.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return code


if __name__ == "__main__":
    sys.exit(main())

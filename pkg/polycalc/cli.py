"""
Command Line
============

Batch front end: read documents from JSON files, run one operation or one
property suite, print one JSON document on stdout. Diagnostics go to stderr.

    polycalc poly member --set square.json --point p.json
    polycalc mfn compose --outer g.json --inner f.json
    polycalc fn optval --phi phi.json --mfn f.json
    polycalc check relint --seed 0 --count 50

Exit codes: 0 success, 1 usage/parse/schema error, 2 domain error,
3 a `check` suite reported failures.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from config import Settings
from polycalc import convex_function as fn_ops
from polycalc import multifunction as mfn_ops
from polycalc import polyhedron as poly_ops
from polycalc import relint
from polycalc.convex_function import PCFunc
from polycalc.errors import PolyhedralError
from polycalc.exact_linalg import Mat, format_rat
from polycalc.multifunction import MultiFn
from polycalc.relint import RelOpenHRep
from polycalc.representation import ExtReal, HRep, VRep
from polycalc.schemas import DocKind, dumps, load, to_document
from polycalc.suites import SUITE_REGISTRY, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_CHECK_FAILED = 3


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ============ Input ============

def _read(path: str, kind: Optional[DocKind] = None):
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return load(text, kind)


def _keep(text: str) -> List[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip() != ""]
    except ValueError:
        raise UsageError(f"--keep expects comma-separated coordinate indices, got {text!r}")


# ============ Commands ============

def _poly(args):
    op = args.op
    if op == "convert":
        obj = _read(args.input)
        if isinstance(obj, HRep):
            return poly_ops.h_to_v(obj)
        if isinstance(obj, VRep):
            return poly_ops.v_to_h(obj)
        raise UsageError("convert expects an hrep or vrep document")
    if op == "project":
        return poly_ops.project(_read(args.input, DocKind.HREP), _keep(args.keep))
    if op == "member":
        return {"member": poly_ops.member(_read(args.set, DocKind.HREP), _read(args.point, DocKind.POINT))}
    if op == "empty":
        return {"empty": poly_ops.is_empty(_read(args.input, DocKind.HREP))}
    if op == "relint":
        return relint.relative_interior(_read(args.input, DocKind.HREP))
    if op == "ri-member":
        return {"ri_member": relint.ri_member(_read(args.set, DocKind.HREP), _read(args.point, DocKind.POINT))}
    if op == "affhull":
        return poly_ops.affine_hull(_read(args.input, DocKind.HREP))
    if op == "image":
        return poly_ops.linear_image(_read(args.matrix, DocKind.MATRIX), _read(args.set, DocKind.HREP))
    if op == "sum-sets":
        return poly_ops.minkowski_sum(_read(args.left, DocKind.HREP), _read(args.right, DocKind.HREP))
    raise UsageError(f"unknown poly operation {op}")


def _mfn(args):
    op = args.op
    if op == "compose":
        return mfn_ops.compose(_read(args.outer, DocKind.MULTIFN), _read(args.inner, DocKind.MULTIFN))
    if op == "sum":
        return mfn_ops.sum_(_read(args.left, DocKind.MULTIFN), _read(args.right, DocKind.MULTIFN))
    F = _read(args.input, DocKind.MULTIFN)
    if op == "dom":
        return mfn_ops.domain(F)
    if op == "rge":
        return mfn_ops.range_(F)
    if op == "inv":
        return mfn_ops.inverse(F)
    if op == "value":
        return mfn_ops.value(F, _read(args.point, DocKind.POINT))
    if op == "image":
        return mfn_ops.image(F, _read(args.set, DocKind.HREP))
    if op == "preimage":
        return mfn_ops.preimage(F, _read(args.set, DocKind.HREP))
    raise UsageError(f"unknown mfn operation {op}")


def _fn(args):
    op = args.op
    if op == "eval":
        return {"value": str(fn_ops.evaluate(_read(args.input, DocKind.PCF), _read(args.point, DocKind.POINT)))}
    if op == "proper":
        return {"proper": fn_ops.is_proper(_read(args.input, DocKind.PCF))}
    phi = _read(args.phi, DocKind.PCF)
    F = _read(args.mfn, DocKind.MULTIFN)
    if op == "optval":
        return fn_ops.optimal_value_fn(phi, F)
    if op == "argmin":
        return fn_ops.solution_map(phi, F, _read(args.point, DocKind.POINT))
    raise UsageError(f"unknown fn operation {op}")


def _check(args):
    if args.suite not in SUITE_REGISTRY:
        raise UsageError(f"unknown suite {args.suite}; choose from {', '.join(SUITE_REGISTRY)}")
    if args.count is not None and args.count < 1:
        raise UsageError(f"--count must be at least 1, got {args.count}")
    return run_suite(args.suite, seed=args.seed, count=args.count, workers=args.workers)


# ============ Text Rendering ============

def _tuple(v) -> str:
    return "(" + ", ".join(format_rat(x) for x in v) + ")"


def _rows(A: Mat, rhs, rel: str) -> List[str]:
    return [f"⟨{_tuple(a)},x⟩ {rel} {format_rat(b)}" for a, b in zip(A.rows, rhs)]


def render_text(obj) -> str:
    if isinstance(obj, HRep):
        lines = _rows(obj.eq_A, obj.eq_b, "=") + _rows(obj.ineq_C, obj.ineq_d, "≤")
        return "\n".join([f"hrep in Q^{obj.dim}"] + (lines or ["(whole space)"]))
    if isinstance(obj, RelOpenHRep):
        lines = _rows(obj.eq_A, obj.eq_b, "=") + _rows(obj.strict_C, obj.strict_d, "<")
        return "\n".join([f"relopen in Q^{obj.dim}"] + (lines or ["(whole space)"]))
    if isinstance(obj, VRep):
        if obj.is_empty:
            return f"vrep in Q^{obj.dim}\n(empty)"
        out = [f"vrep in Q^{obj.dim}"]
        for title, group in (("points", obj.points), ("rays", obj.rays), ("lineality", obj.lineality)):
            if group:
                out.append(f"{title}:")
                out.extend("  " + _tuple(g) for g in group)
        return "\n".join(out)
    if isinstance(obj, MultiFn):
        return f"multifn Q^{obj.nx} => Q^{obj.ny}, graph:\n" + render_text(obj.graph)
    if isinstance(obj, PCFunc):
        return f"pcf on Q^{obj.n}, epigraph over (x, t):\n" + render_text(obj.epi)
    if isinstance(obj, ExtReal):
        return str(obj)
    if isinstance(obj, dict) and "suite" in obj:
        head = (f"suite {obj['suite']} seed {obj['seed']}: "
                f"{obj['passed']}/{obj['count']} passed, {obj['failed']} failed")
        return "\n".join([head] + [f"  #{f['instance']}: {f['detail']}" for f in obj["failures"]])
    if isinstance(obj, dict):
        return "\n".join(f"{k}: {json.dumps(v) if isinstance(v, bool) else v}" for k, v in sorted(obj.items()))
    raise TypeError(f"cannot render {type(obj).__name__}")


def render_json(obj) -> str:
    if isinstance(obj, dict):
        return dumps(obj)
    return dumps(to_document(obj))


# ============ Parser ============

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="polycalc", description="Exact calculus of polyhedral sets, functions and multifunctions.")
    parser.add_argument("--format", choices=["json", "text"], default="json", help="output rendering")
    groups = parser.add_subparsers(dest="group", required=True)

    poly = groups.add_parser("poly", help="polyhedral sets")
    poly_cmds = poly.add_subparsers(dest="op", required=True)
    for name in ("convert", "empty", "relint", "affhull"):
        poly_cmds.add_parser(name).add_argument("--in", dest="input", required=True)
    p = poly_cmds.add_parser("project")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--keep", required=True, help="comma-separated coordinates to keep, e.g. 0,2")
    for name in ("member", "ri-member"):
        p = poly_cmds.add_parser(name)
        p.add_argument("--set", required=True)
        p.add_argument("--point", required=True)
    p = poly_cmds.add_parser("image")
    p.add_argument("--matrix", required=True)
    p.add_argument("--set", required=True)
    p = poly_cmds.add_parser("sum-sets")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    mfn = groups.add_parser("mfn", help="polyhedral multifunctions")
    mfn_cmds = mfn.add_subparsers(dest="op", required=True)
    for name in ("dom", "rge", "inv"):
        mfn_cmds.add_parser(name).add_argument("--in", dest="input", required=True)
    p = mfn_cmds.add_parser("value")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--point", required=True)
    for name in ("image", "preimage"):
        p = mfn_cmds.add_parser(name)
        p.add_argument("--in", dest="input", required=True)
        p.add_argument("--set", required=True)
    p = mfn_cmds.add_parser("compose", help="G o F")
    p.add_argument("--outer", required=True, help="G")
    p.add_argument("--inner", required=True, help="F")
    p = mfn_cmds.add_parser("sum")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    fn = groups.add_parser("fn", help="polyhedral convex functions")
    fn_cmds = fn.add_subparsers(dest="op", required=True)
    p = fn_cmds.add_parser("eval")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--point", required=True)
    fn_cmds.add_parser("proper").add_argument("--in", dest="input", required=True)
    for name in ("optval", "argmin"):
        p = fn_cmds.add_parser(name)
        p.add_argument("--phi", required=True)
        p.add_argument("--mfn", required=True)
        if name == "argmin":
            p.add_argument("--point", required=True)

    check = groups.add_parser("check", help="seeded property suites")
    check.add_argument("suite", help=", ".join(SUITE_REGISTRY))
    check.add_argument("--seed", type=int, default=Settings.SEED)
    check.add_argument("--count", type=int, default=None)
    check.add_argument("--workers", type=int, default=None)
    return parser


_DISPATCH = {"poly": _poly, "mfn": _mfn, "fn": _fn, "check": _check}


def _report_error(e: Exception, kind: str):
    print(dumps({"error": str(e), "kind": kind}), file=sys.stderr)


def run(argv: List[str]) -> int:
    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, Settings.LOG_LEVEL, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        Settings.validate()
        args = build_parser().parse_args(argv)
        result = _DISPATCH[args.group](args)
        output = render_text(result) if args.format == "text" else render_json(result)
    except PolyhedralError as e:
        logger.info("domain error: %s", e)
        _report_error(e, e.kind)
        return EXIT_DOMAIN
    except (ValueError, OSError) as e:
        _report_error(e, "usage")
        return EXIT_USAGE

    print(output)
    if args.group == "check" and result["failed"]:
        return EXIT_CHECK_FAILED
    return EXIT_OK


def main():
    sys.exit(run(sys.argv[1:]))

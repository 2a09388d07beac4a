"""Command-line front end.  Every command prints one JSON document on standard output.

Exit codes: 0 on success, 1 when a verification fails or a computation refuses,
2 on usage errors (bad arguments, unreadable or invalid graph files).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
import warnings
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import __version__
from .acceptance import CRITERIA, run_all
from .ap_theory import enumerate_ap_spherical
from .beer_partitions import build_omega_n, crosscheck_with_general
from .bundled import resolve_graph
from .cat0 import gromov_check
from .complexes import (
    BuildContext,
    CellComplex,
    build_beer,
    build_sigma,
    build_theta,
    pi1_presentation,
    verify_iso_g,
)
from .coxeter_core import CoxeterGraph, classify
from .errors import BoundRequired, CoxcellError, LabelError, SchemaError, TruncationWarning
from .root_system import enumerate_roots

USAGE_ERRORS = (SchemaError, LabelError, BoundRequired, FileNotFoundError, KeyError, ValueError)


@dataclass
class RunReport:
    """What ran, on which inputs, a digest of the output and the per-check verdicts."""

    command: str
    inputs: dict[str, Any]
    output_digest: str = ""
    checks: dict[str, bool] = field(default_factory=dict)
    wall_clock: float = 0.0

    def to_json(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "output_digest": self.output_digest,
            "checks": self.checks,
            "wall_clock": round(self.wall_clock, 3),
        }


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def dumps(doc: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(doc, sort_keys=True, indent=2)
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


# --------------------------------------------------------------------------- commands
def _graph(args: argparse.Namespace) -> CoxeterGraph:
    if not getattr(args, "graph", None):
        raise UsageError("a graph file is required")
    return resolve_graph(args.graph)


def _context(args: argparse.Namespace) -> BuildContext:
    return BuildContext(_graph(args), args.depth, args.wlen)


def cmd_classify(args: argparse.Namespace) -> tuple[Any, dict[str, bool]]:
    return classify(_graph(args)).to_json(), {}


def cmd_roots(args: argparse.Namespace) -> tuple[Any, dict[str, bool]]:
    table = enumerate_roots(_graph(args), args.depth)
    return {"complete": table.complete, "count": len(table), "roots": [r.to_json() for r in table.roots]}, {}


def cmd_ap_enum(args: argparse.Namespace) -> tuple[Any, dict[str, bool]]:
    ctx = _context(args)
    sets = enumerate_ap_spherical(ctx.table, args.k, ctx.search_bound)
    return [X.to_json() for X in sets], {}


BUILDERS = {
    "sigma": lambda ctx, d: build_sigma(ctx, max_dim=d),
    "beer": lambda ctx, d: build_beer(ctx, max_dim=d),
    "theta-sigma": lambda ctx, d: build_theta(ctx, "sigma", max_dim=d),
    "theta-omega": lambda ctx, d: build_theta(ctx, "omega", max_dim=d),
}


def cmd_build(args: argparse.Namespace) -> tuple[Any, dict[str, bool]]:
    cx = BUILDERS[args.space](_context(args), args.max_dim)
    ok = cx.coherence is None or cx.coherence.passed
    return cx.to_json(), {"coherence": ok}


def cmd_verify(args: argparse.Namespace) -> tuple[Any, dict[str, bool]]:
    ctx = _context(args)
    cert = verify_iso_g(build_theta(ctx, "sigma"), build_theta(ctx, "omega"), threads=args.threads)
    return cert.to_json(), {"isomorphism": cert.passed}


def cmd_pi1(args: argparse.Namespace) -> tuple[Any, dict[str, bool]]:
    ctx = _context(args)
    cx = build_sigma(ctx, max_dim=2) if args.space == "sigma" else build_beer(ctx, max_dim=2)
    return pi1_presentation(cx).to_json(), {}


def cmd_omega_n(args: argparse.Namespace) -> tuple[Any, dict[str, bool]]:
    cx = build_omega_n(args.n, args.max_dim)
    return cx.to_json(), {"coherence": cx.coherence is None or cx.coherence.passed}


def cmd_crosscheck(args: argparse.Namespace) -> tuple[Any, dict[str, bool]]:
    cert = crosscheck_with_general(args.n, args.max_dim)
    return cert.to_json(), {"crosscheck": cert.passed}


def _link_space(args: argparse.Namespace) -> CellComplex:
    space = args.space
    kind = space[0]
    if kind == "omega-n":
        if len(space) != 2 or not space[1].isdigit():
            raise UsageError("--space omega-n needs the number of strands, e.g. --space omega-n 3")
        return build_omega_n(int(space[1]), max_dim=2)
    if len(space) != 1 or kind not in ("beer", "sigma"):
        raise UsageError("--space must be beer, sigma or 'omega-n N'")
    ctx = _context(args)
    return build_beer(ctx, max_dim=2) if kind == "beer" else build_sigma(ctx, max_dim=2)


def cmd_link_check(args: argparse.Namespace) -> tuple[Any, dict[str, bool]]:
    cx = _link_space(args)
    doc = gromov_check(cx).to_json()
    doc["skeleton"] = 2
    return doc, {}


def cmd_acceptance(args: argparse.Namespace) -> tuple[Any, dict[str, bool]]:
    only = args.only or None
    if only and any(k not in CRITERIA for k in only):
        raise UsageError(f"criteria are numbered 1..{len(CRITERIA)}")
    results = run_all(args.threads, only)
    for r in results:
        print(r.line(), file=sys.stderr)
    return {"results": [r.to_json() for r in results]}, {f"criterion_{r.number}": r.passed for r in results}


# --------------------------------------------------------------------------- parser
def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent the JSON output")
    common.add_argument("--threads", type=int, default=None, help="cap on worker threads for verification")
    common.add_argument("--report", metavar="PATH", help="write a run report (JSON) to PATH")

    bounds = _Parser(add_help=False)
    bounds.add_argument("--depth", type=int, default=None, help="root depth bound (required for infinite groups)")
    bounds.add_argument("--wlen", type=int, default=None, help="word-length bound (required for infinite groups)")

    p = _Parser(prog="coxcell", description="Cell complexes for virtual Artin groups.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("classify", parents=[common], help="spherical / affine / other")
    s.add_argument("graph")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("roots", parents=[common], help="enumerate the root system")
    s.add_argument("graph")
    s.add_argument("--depth", type=int, default=None)
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("ap-enum", parents=[common, bounds], help="spherical AP sets of a given size")
    s.add_argument("graph")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_ap_enum)

    s = sub.add_parser("build", parents=[common, bounds], help="build a complex")
    s.add_argument("space", choices=sorted(BUILDERS))
    s.add_argument("graph")
    s.add_argument("--max-dim", type=int, default=None)
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("verify-cover-iso", parents=[common, bounds], help="check the isomorphism of the two covers")
    s.add_argument("graph")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("pi1", parents=[common, bounds], help="fundamental group presentation")
    s.add_argument("space", choices=["beer", "sigma"])
    s.add_argument("graph")
    s.set_defaults(func=cmd_pi1)

    s = sub.add_parser("omega-n", parents=[common], help="the ordered-partition complex on n strands")
    s.add_argument("n", type=int)
    s.add_argument("--max-dim", type=int, default=None)
    s.set_defaults(func=cmd_omega_n)

    s = sub.add_parser("crosscheck-an", parents=[common], help="match the partition model with the general builder")
    s.add_argument("n", type=int)
    s.add_argument("--max-dim", type=int, default=None)
    s.set_defaults(func=cmd_crosscheck)

    s = sub.add_parser("link-check", parents=[common, bounds], help="Gromov link condition on a 2-skeleton")
    s.add_argument("graph", nargs="?")
    s.add_argument("--space", nargs="+", default=["beer"], metavar="SPACE")
    s.set_defaults(func=cmd_link_check)

    s = sub.add_parser("acceptance", parents=[common], help="run the acceptance suite")
    s.add_argument("--only", type=int, nargs="+", metavar="K")
    s.set_defaults(func=cmd_acceptance)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    t0 = time.perf_counter()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            raise UsageError("a subcommand is required")
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", TruncationWarning)
            doc, checks = args.func(args)
    except UsageError as exc:
        print(f"coxcell: usage error: {exc}", file=sys.stderr)
        return 2
    except USAGE_ERRORS as exc:
        print(f"coxcell: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except CoxcellError as exc:
        print(dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 1
    text = dumps(doc, args.pretty)
    print(text)
    ok = all(checks.values())
    if args.report:
        report = RunReport(
            args.command,
            {"argv": argv},
            hashlib.sha256(dumps(doc).encode()).hexdigest(),
            checks,
            time.perf_counter() - t0,
        )
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(dumps(report.to_json(), pretty=True) + "\n")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())

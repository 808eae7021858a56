"""``sgchain`` command-line entry point."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from ..chains import DEFAULT_INT_RADIUS, DEFAULT_WORD_RADIUS, SymbolicReesZ
from ..core import FiniteSemigroup
from ..errors import SemigroupError
from ..ideals import Side
from ..rewrite import FpSemigroup
from .checks import FAIL, SUITES, run_suite
from .instances import build, parse_instance
from .reports import SCHEMA, analysis, chains_report, green_report, rewrite_report, socle_json
from .zoo import ZOO_NAMES, zoo_spec

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load(path: str):
    """A file path, or ``@NAME`` for a built-in instance."""
    if path.startswith("@"):
        spec = zoo_spec(path[1:])
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(f"cannot read {path}: {e.strerror}") from None
        spec = parse_instance(text)
    return spec, build(spec)


def _radius(args, obj) -> int:
    if getattr(args, "radius", None) is not None:
        return args.radius
    env = os.environ.get("SGCHAIN_RADIUS")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"SGCHAIN_RADIUS must be an integer, got {env!r}") from None
    return DEFAULT_INT_RADIUS if isinstance(obj, SymbolicReesZ) else DEFAULT_WORD_RADIUS


def _finite(obj, command: str) -> FiniteSemigroup:
    if not isinstance(obj, FiniteSemigroup):
        raise InputError(f"{command} needs a finite instance")
    return obj


def _emit(payload: dict, compact: bool = False) -> None:
    doc = {"schema": SCHEMA, **payload}
    if compact:
        sys.stdout.write(json.dumps(doc, separators=(",", ":")) + "\n")
    else:
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def cmd_analyze(args) -> int:
    spec, obj = _load(args.file)
    _emit({"command": "analyze", "instance": spec.name, **analysis(obj, _radius(args, obj))})
    return EXIT_OK


def cmd_green(args) -> int:
    spec, obj = _load(args.file)
    _emit({"command": "green", "instance": spec.name, **green_report(_finite(obj, "green"))})
    return EXIT_OK


def cmd_socle(args) -> int:
    spec, obj = _load(args.file)
    S = _finite(obj, "socle")
    if S.zero is None:
        raise InputError("socle needs a semigroup with zero")
    _emit({"command": "socle", "instance": spec.name, **socle_json(S, Side(args.side))})
    return EXIT_OK


def cmd_chains(args) -> int:
    spec, obj = _load(args.file)
    if not args.antichain and not args.chain:
        raise InputError("give --antichain N and/or --chain N")
    for flag in ("antichain", "chain"):
        v = getattr(args, flag)
        if v is not None and v < 2:
            raise InputError(f"--{flag} must be at least 2")
    rep = chains_report(obj, args.antichain, args.chain, _radius(args, obj),
                        kernel_only=args.kernel_only, row=args.row)
    _emit({"command": "chains", "instance": spec.name, **rep})
    return EXIT_OK


def cmd_rewrite(args) -> int:
    spec, obj = _load(args.file)
    if not isinstance(obj, FpSemigroup):
        raise InputError("rewrite needs a presentation")
    if args.reduce is None and not args.complete and args.normal_forms is None:
        raise InputError("give --reduce WORD, --complete or --normal-forms N")
    if args.reduce is not None:
        obj.rs.check_word(args.reduce)
    if args.normal_forms is not None and not obj.confluent:
        raise InputError("normal forms need a confluent system (try --complete)")
    rep = rewrite_report(obj, args.reduce, args.complete, args.normal_forms)
    _emit({"command": "rewrite", "instance": spec.name, "confluent": obj.confluent, **rep})
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.mutate is not None and args.mutate not in ZOO_NAMES:
        raise InputError(f"no zoo instance named {args.mutate!r}")
    start = time.perf_counter()
    report = run_suite(args.suite, args.seed, args.count, args.mutate)
    elapsed = time.perf_counter() - start
    if args.failures_only:
        report["records"] = [r for r in report["records"] if r["verdict"] == FAIL]
    _emit({"command": "verify", **report}, compact=args.compact)
    s = report["summary"]
    print(f"{args.suite}: {s['pass']} pass, {s['fail']} fail, {s['skip']} skip, "
          f"{s['check_ids']} check ids in {elapsed:.1f}s", file=sys.stderr)
    return EXIT_FAIL if s[FAIL] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sgchain",
                                description="Finite semigroup structure and chain conditions.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full structural report")
    a.add_argument("file", help="instance document, or @NAME for a built-in instance")
    a.add_argument("--radius", type=int)
    a.set_defaults(fn=cmd_analyze)

    g = sub.add_parser("green", help="Green's relations and the R-class poset")
    g.add_argument("file")
    g.set_defaults(fn=cmd_green)

    s = sub.add_parser("socle", help="right or left socle decomposition")
    s.add_argument("file")
    s.add_argument("--side", choices=("right", "left"), default="right")
    s.set_defaults(fn=cmd_socle)

    c = sub.add_parser("chains", help="antichain and ascending chain certificates")
    c.add_argument("file")
    c.add_argument("--antichain", type=int, metavar="N")
    c.add_argument("--chain", type=int, metavar="N")
    c.add_argument("--radius", type=int, metavar="R")
    c.add_argument("--kernel-only", action="store_true")
    c.add_argument("--row", type=int, default=1, help="row i of R_i for integer Rees matrices")
    c.set_defaults(fn=cmd_chains)

    r = sub.add_parser("rewrite", help="string rewriting on a presentation")
    r.add_argument("file")
    r.add_argument("--reduce", metavar="WORD")
    r.add_argument("--complete", action="store_true")
    r.add_argument("--normal-forms", type=int, metavar="N")
    r.set_defaults(fn=cmd_rewrite)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=SUITES, required=True)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--count", type=int, default=500)
    v.add_argument("--mutate", metavar="NAME", help="also check a zoo table with one entry flipped")
    v.add_argument("--failures-only", action="store_true")
    v.add_argument("--compact", action="store_true")
    v.set_defaults(fn=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        return args.fn(args)
    except (InputError, SemigroupError) as e:
        print(f"sgchain: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

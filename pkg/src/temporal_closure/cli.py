"""Command-line interface.

Input files are in the native format unless ``--bin S`` is given, in which
case they are read as ``t u v`` contact logs binned into ``S``-second steps.
``-`` (the default) reads standard input.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 violated precondition,
4 size guard exceeded.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys

from .bounds import verify_bounds
from .closure import ClosureParams, closure_number, closure_rate_curve, weak_closure_number
from .core import StaticGraph
from .enumeration import KINDS, enumerate_patterns, format_pattern
from .exceptions import GraphError, ParseError, PreconditionError, SizeGuardError
from .fileio import (
    parse_contacts,
    parse_native,
    write_bounds_csv,
    write_curve_csv,
    write_native,
    write_ordering_csv,
)
from .generate import MODELS, GeneratorSpec, generate
from .instability import (
    PairwiseMode,
    combined_weak_value,
    local_instability,
    pairwise_instability,
    weak_pairwise_instability,
)
from .oracle import (
    oracle_closure,
    oracle_enumerate,
    oracle_local_eta,
    oracle_pairwise_eta,
    oracle_weak_orderings,
)
from .stats import DEFAULT_CONFIGS, DEFAULT_PAIRWISE_D1, compute_stats, write_stats_csv

__all__ = ["main", "run_cli"]

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_PRECONDITION, EXIT_SIZE = range(5)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _config(text: str) -> ClosureParams:
    try:
        d0, d1, d2 = (int(x) for x in text.split(","))
        return ClosureParams(d0, d1, d2)
    except (ValueError, GraphError):
        raise argparse.ArgumentTypeError(f"expected 'd0,d1,d2' with non-negative integers, got {text!r}")


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _add_input(sp):
    sp.add_argument("file", nargs="?", default="-", help="input graph ('-' for stdin)")
    sp.add_argument("--bin", type=_positive, metavar="S", help="read a 't u v' contact log binned into S-second steps")


def _add_params(sp, required=False):
    for name in ("d0", "d1", "d2"):
        sp.add_argument(f"--{name}", type=_nonneg, default=None if required else 0, required=required)


def _add_mode(sp):
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--restricted", dest="mode", action="store_const", const=PairwiseMode.EXACT,
                   help="base windows [a, a + d1] only (default)")
    g.add_argument("--all-lengths", dest="mode", action="store_const", const=PairwiseMode.UP_TO,
                   help="base windows [a, b] with b - a <= d1")
    sp.set_defaults(mode=PairwiseMode.EXACT)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="temporal-closure", description="Temporal closure parameters and dense-pattern enumeration.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("stats", help="one CSV row of graph statistics per input")
    _add_input(sp)
    sp.add_argument("--name", help="instance name (default: file stem)")
    sp.add_argument("--config", type=_config, action="append", metavar="D0,D1,D2",
                    help="closure configuration; repeatable (default: 0,0,0 10,0,10 0,5,0 10,5,10)")
    sp.add_argument("--pairwise-d1", type=_nonneg, action="append", metavar="D1",
                    help="d1 for the pairwise instability columns; repeatable (default: 0 and 5)")
    sp.add_argument("--no-weak", action="store_true", help="skip weak pairwise eta and combined b columns")
    _add_mode(sp)

    sp = sub.add_parser("closure", help="closure number, or weak closure number with its ordering")
    _add_input(sp)
    _add_params(sp)
    sp.add_argument("--weak", action="store_true")

    sp = sub.add_parser("instability", help="local, pairwise, weak pairwise or combined instability")
    _add_input(sp)
    which = sp.add_mutually_exclusive_group(required=True)
    which.add_argument("--local", action="store_true")
    which.add_argument("--pairwise", action="store_true")
    which.add_argument("--weak-pairwise", action="store_true")
    which.add_argument("--combined", action="store_true")
    _add_params(sp)
    _add_mode(sp)

    sp = sub.add_parser("enumerate", help="maximal dense patterns, one per line")
    _add_input(sp)
    sp.add_argument("--delta", type=_nonneg, required=True)
    sp.add_argument("--kind", choices=KINDS, default="clique")
    sp.add_argument("--k", type=_nonneg, default=0)
    sp.add_argument("--min-size", type=_positive, default=1)
    sp.add_argument("--engine", choices=("main", "oracle"), default="main")

    sp = sub.add_parser("closure-rate", help="closure-rate curve as CSV x,support,rate")
    _add_input(sp)
    _add_params(sp)
    sp.add_argument("--exact-x", action="store_true", help="tuples with exactly x common neighbours")

    sp = sub.add_parser("generate", help="write a generated graph in native format")
    sp.add_argument("--model", choices=MODELS, required=True)
    sp.add_argument("--n", type=_nonneg, default=3, help="vertices (parts for moonmoser)")
    sp.add_argument("--delta", type=_nonneg, default=1)
    sp.add_argument("--lifetime", type=_positive, default=10)
    sp.add_argument("--p-init", type=float, default=0.3)
    sp.add_argument("--flip-rate", type=float, default=0.05)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--static", metavar="FILE", help="static edge list 'u v' per line, first line n (static-lift)")
    sp.add_argument("--out", default="-")

    sp = sub.add_parser("verify-bounds", help="compare pattern counts with the counting bounds")
    _add_input(sp)
    _add_params(sp)
    sp.add_argument("--delta", type=_nonneg, required=True)
    sp.add_argument("--k", type=_nonneg, default=0)

    sp = sub.add_parser("oracle", help="brute-force reference values (small inputs only)")
    _add_input(sp)
    which = sp.add_mutually_exclusive_group(required=True)
    which.add_argument("--enumerate", action="store_true")
    which.add_argument("--closure", action="store_true")
    which.add_argument("--local", action="store_true")
    which.add_argument("--pairwise", action="store_true")
    which.add_argument("--weak", choices=("closure", "pairwise", "combined"), metavar="METRIC")
    _add_params(sp)
    _add_mode(sp)
    sp.add_argument("--delta", type=_nonneg, default=0)
    sp.add_argument("--kind", choices=KINDS, default="clique")
    sp.add_argument("--k", type=_nonneg, default=0)
    return ap


def _open(path):
    return sys.stdin if path == "-" else open(path, encoding="utf-8")


def _load(args):
    stream = _open(args.file)
    try:
        if args.bin is not None:
            return parse_contacts(stream, args.bin)
        return parse_native(stream), None
    finally:
        if stream is not sys.stdin:
            stream.close()


def _params(args) -> ClosureParams:
    return ClosureParams(args.d0, args.d1, args.d2)


def _value_csv(out, rows):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["parameter", "value"])
    w.writerows(rows)


def _read_static(path) -> StaticGraph:
    with _open(path) as fh:
        lines = [ln.split() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    try:
        n = int(lines[0][0])
        return StaticGraph.from_edges(n, [(int(u), int(v)) for u, v, *_ in lines[1:]])
    except (IndexError, ValueError) as exc:
        raise ParseError(f"static graph: {exc}") from None


def _cmd_stats(args, out):
    g, labels = _load(args)
    name = args.name or ("stdin" if args.file == "-" else os.path.splitext(os.path.basename(args.file))[0])
    binning = f"bin={args.bin}s anchor=t_min" if args.bin else "native"
    row = compute_stats(g, name, binning=binning, configs=args.config or DEFAULT_CONFIGS,
                        pairwise_d1=args.pairwise_d1 or DEFAULT_PAIRWISE_D1,
                        weak=not args.no_weak, mode=args.mode)
    write_stats_csv([row], out)


def _cmd_closure(args, out):
    g, labels = _load(args)
    p = _params(args)
    if args.weak:
        res = weak_closure_number(g, p)
        write_ordering_csv(res, out, labels, summary=[("gamma", res.value + 1)])
    else:
        _value_csv(out, [("c", closure_number(g, p))])


def _cmd_instability(args, out):
    g, labels = _load(args)
    if args.local:
        _value_csv(out, [("local_eta", local_instability(g))])
    elif args.pairwise:
        _value_csv(out, [("pairwise_eta", pairwise_instability(g, args.d1, args.mode))])
    elif args.weak_pairwise:
        res = weak_pairwise_instability(g, args.d1, args.mode)
        write_ordering_csv(res, out, labels, summary=[("weak_pairwise_eta", res.value)])
    else:
        res = combined_weak_value(g, _params(args), args.mode)
        write_ordering_csv(res, out, labels, summary=[("b", res.value)])


def _write_patterns(patterns, out, labels):
    for p in patterns:
        out.write(format_pattern(p, labels) + "\n")


def _cmd_enumerate(args, out):
    g, labels = _load(args)
    k = 0 if args.kind == "clique" else args.k
    if args.engine == "oracle":
        pats = [p for p in oracle_enumerate(g, args.delta, args.kind, k) if len(p) >= args.min_size]
    else:
        pats = enumerate_patterns(g, args.delta, args.kind, k, args.min_size)
    _write_patterns(pats, out, labels)


def _cmd_closure_rate(args, out):
    g, _ = _load(args)
    write_curve_csv(closure_rate_curve(g, _params(args), cumulative=not args.exact_x), out)


def _cmd_generate(args, out):
    static = _read_static(args.static) if args.static else None
    spec = GeneratorSpec(args.model, n=args.n, delta=args.delta, lifetime=args.lifetime,
                         p_init=args.p_init, flip_rate=args.flip_rate, seed=args.seed, static=static)
    g = generate(spec)
    if args.out == "-":
        write_native(g, out)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            write_native(g, fh)


def _cmd_verify_bounds(args, out):
    p = _params(args)
    if args.delta < p.total:
        # fail before reading the input
        raise PreconditionError(f"delta >= d0 + d1 + d2 violated: {args.delta} < {p.d0} + {p.d1} + {p.d2}")
    g, _ = _load(args)
    write_bounds_csv(verify_bounds(g, p, args.delta, args.k), out)


def _cmd_oracle(args, out):
    g, labels = _load(args)
    p = _params(args)
    if args.enumerate:
        k = 0 if args.kind == "clique" else args.k
        _write_patterns(oracle_enumerate(g, args.delta, args.kind, k), out, labels)
    elif args.closure:
        _value_csv(out, [("c", oracle_closure(g, p))])
    elif args.local:
        _value_csv(out, [("local_eta", oracle_local_eta(g))])
    elif args.pairwise:
        _value_csv(out, [("pairwise_eta", oracle_pairwise_eta(g, p.d1, args.mode.value))])
    else:
        _value_csv(out, [(f"min_ordering_{args.weak}", oracle_weak_orderings(g, p, args.weak, args.mode.value))])


_COMMANDS = {
    "stats": _cmd_stats,
    "closure": _cmd_closure,
    "instability": _cmd_instability,
    "enumerate": _cmd_enumerate,
    "closure-rate": _cmd_closure_rate,
    "generate": _cmd_generate,
    "verify-bounds": _cmd_verify_bounds,
    "oracle": _cmd_oracle,
}


def run_cli(argv=None, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        parser.print_usage(err)
        print(exc, file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        _COMMANDS[args.command](args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_PARSE
    except OSError as exc:
        print(f"cannot read input: {exc}", file=err)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=err)
        return EXIT_PRECONDITION
    except SizeGuardError as exc:
        print(f"size guard exceeded: {exc}", file=err)
        return EXIT_SIZE
    except GraphError as exc:
        print(f"invalid arguments: {exc}", file=err)
        return EXIT_USAGE
    return EXIT_OK


def main(argv=None) -> int:
    return run_cli(argv)

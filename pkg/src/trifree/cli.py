"""Command-line entry point: ``trifree <subcommand> ...``.

Exit status is 0 on success, 1 when an input or certificate fails
validation, and 2 on a usage error. JSON goes to stdout unless ``--human``
is given. ``TRIFREE_SEED`` supplies the default seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace
from pathlib import Path

from . import oracles
from .bench import ExperimentPlan, bench
from .errors import TrifreeError
from .generators import FAMILIES, GenSpec, generate
from .graph import Graph, format_edge_list, parse_edge_list
from .indep_engine import recursive_independent_set, turan_greedy
from .minor_engine import (
    DEFAULT_TRIALS,
    chernoff_tail_bound,
    dense_minor_via_balls,
    derive_params,
    extract_dense_minor,
)
from .pipeline import DichotomyConfig, dichotomy, report, report_text
from .short_paths import short_path_power

SEED_ENV = "TRIFREE_SEED"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def _read_graph(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_edge_list(text)


def _emit(payload: dict, args, human: str | None = None) -> None:
    if args.human and human is not None:
        print(human)
    else:
        print(json.dumps(payload, indent=2, sort_keys=True))


def _write_text(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _override(item: str) -> tuple[str, float]:
    key, sep, value = item.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected KEY=VALUE, got {item!r}")
    try:
        return key.strip(), float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"value for {key!r} is not a number") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="trifree", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    seed = _default_seed()

    g = sub.add_parser("gen", help="generate a graph as an edge list")
    g.add_argument("--family", required=True, choices=FAMILIES)
    g.add_argument("--n", type=int)
    g.add_argument("--a", type=int)
    g.add_argument("--b", type=int)
    g.add_argument("--p", type=float)
    g.add_argument("--m", type=int)
    g.add_argument("--A", type=float, default=2.0, help="constant of the G(n,m) edge budget")
    g.add_argument("--seed", type=int, default=seed)
    g.add_argument("--output", "-o")

    p = sub.add_parser("power", help="short-path power graph as an edge list")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--blocked", help="file of whitespace-separated blocked vertex ids")
    p.add_argument("--output", "-o")

    mn = sub.add_parser("minor", help="search for a minor of average degree >= d")
    mn.add_argument("--input", "-i", required=True)
    mn.add_argument("--d", type=float, required=True)
    mn.add_argument("--epsilon", type=float, default=0.1)
    mn.add_argument("--k", type=int, default=1)
    mn.add_argument("--p", type=float, help="override the derived sampling probability")
    mn.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    mn.add_argument("--seed", type=int, default=seed)
    mn.add_argument("--balls", action="store_true", help="gate on radius-3 ball sizes (k=1)")
    mn.add_argument("--c-ball", type=float, default=2800.0)
    mn.add_argument("--human", action="store_true")

    ind = sub.add_parser("indep", help="certified independent set")
    ind.add_argument("--input", "-i", required=True)
    ind.add_argument("--method", choices=("turan", "recursive"), default="recursive")
    ind.add_argument("--d", type=float, default=10.0)
    ind.add_argument("--epsilon", type=float, default=0.01)
    ind.add_argument("--tau", type=float)
    ind.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    ind.add_argument("--seed", type=int, default=seed)
    ind.add_argument("--human", action="store_true")

    dc = sub.add_parser("dichotomy", help="minor or independent set, with report")
    dc.add_argument("--input", "-i", required=True)
    dc.add_argument("--t", type=int, required=True)
    dc.add_argument("--epsilon", type=float, default=0.01)
    dc.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    dc.add_argument("--seed", type=int, default=seed)
    dc.add_argument("--override", type=_override, action="append", default=[], metavar="KEY=VAL")
    dc.add_argument("--output", "-o", help="also write the JSON report here")
    dc.add_argument("--human", action="store_true")

    o = sub.add_parser("oracle", help="exact brute-force checks on small graphs")
    o.add_argument("--check", required=True, choices=("alpha", "paths", "power", "minor", "binomial"))
    o.add_argument("--input", "-i")
    o.add_argument("--u", type=int)
    o.add_argument("--v", type=int)
    o.add_argument("--k", type=int, default=1)
    o.add_argument("--t", type=int)
    o.add_argument("--p", type=float)
    o.add_argument("--m", type=int)
    o.add_argument("--threshold", type=float)
    o.add_argument("--max-vertices", type=int)
    o.add_argument("--human", action="store_true")

    b = sub.add_parser("bench", help="run an experiment plan")
    b.add_argument("--plan", required=True, help="JSON experiment plan")
    b.add_argument("--output", "-o", help="output prefix (overrides the plan)")
    b.add_argument("--workers", type=int)
    b.add_argument("--human", action="store_true")
    return parser


def _cmd_gen(args) -> int:
    spec = GenSpec(
        family=args.family, n=args.n, a=args.a, b=args.b, p=args.p, m=args.m, A=args.A, seed=args.seed
    )
    _write_text(format_edge_list(generate(spec)), args.output)
    return 0


def _cmd_power(args) -> int:
    G = _read_graph(args.input)
    blocked = ()
    if args.blocked:
        blocked = tuple(int(tok) for tok in Path(args.blocked).read_text().split())
    power = short_path_power(G, args.k, blocked)
    _write_text(format_edge_list(power.as_graph()), args.output)
    return 0


def _cmd_minor(args) -> int:
    G = _read_graph(args.input)
    payload: dict = {}
    if args.balls:
        check = dense_minor_via_balls(G, args.d, args.epsilon, args.trials, args.seed, c_ball=args.c_ball)
        cert = check.certificate
        payload.update(witness_vertex=check.witness_vertex, min_ball_size=check.min_ball_size)
        params = None
    else:
        params = derive_params(args.d, args.epsilon, args.k, p_override=args.p)
        cert = extract_dense_minor(G, params, args.trials, args.seed)
    payload.update(
        found=cert is not None,
        achieved_average_degree=None if cert is None else cert.achieved_average_degree,
        branches=[] if cert is None else [list(b) for b in cert.model.branches],
        params=None if params is None else params.to_dict(),
    )
    human = (
        f"minor of average degree {cert.achieved_average_degree:.6g} with {cert.quotient_n} branch sets"
        if cert is not None
        else "no minor of the requested density found"
    )
    _emit(payload, args, human)
    return 0


def _cmd_indep(args) -> int:
    G = _read_graph(args.input)
    if args.method == "turan":
        cert = turan_greedy(G)
    else:
        cert = recursive_independent_set(G, args.d, args.epsilon, args.tau, args.trials, args.seed)
    cert.verify()
    payload = {**cert.to_dict(), "verified": True}
    _emit(payload, args, f"independent set of size {cert.size} ({cert.provenance}), verified")
    return 0


def _cmd_dichotomy(args) -> int:
    G = _read_graph(args.input)
    config = DichotomyConfig(
        t=args.t,
        epsilon=args.epsilon,
        constant_overrides=dict(args.override),
        trials=args.trials,
        seed=args.seed,
    )
    result = dichotomy(G, config)
    payload = report(result)
    if args.output:
        Path(args.output).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    _emit(payload, args, report_text(result))
    return 0


def _cmd_oracle(args) -> int:
    budget = oracles.OracleBudget() if args.max_vertices is None else oracles.OracleBudget(max_vertices=args.max_vertices)
    if args.check == "binomial":
        if args.p is None or args.m is None:
            raise UsageError("--check binomial needs --p and --m")
        threshold = 2 * args.p * args.m if args.threshold is None else args.threshold
        payload = {
            "p": args.p,
            "m": args.m,
            "threshold": threshold,
            "tail": oracles.exact_binomial_tail(args.p, args.m, threshold),
        }
        if args.m >= 1:
            payload["chernoff_bound"] = chernoff_tail_bound(args.p, args.m)
        _emit(payload, args, f"P[Bin({args.m},{args.p}) > {threshold:g}] = {payload['tail']:.12g}")
        return 0
    if args.input is None:
        raise UsageError(f"--check {args.check} needs --input")
    G = _read_graph(args.input)
    if args.check == "alpha":
        if args.max_vertices is None:
            budget = oracles.OracleBudget(max_vertices=oracles.ALPHA_HARD_CAP)
        witness = oracles.max_independent_set_exact(G, budget)
        _emit({"alpha": len(witness)}, args, f"alpha = {len(witness)}")
    elif args.check == "paths":
        if args.u is None or args.v is None:
            raise UsageError("--check paths needs --u and --v")
        count = oracles.disjoint_short_paths_exact(G, args.u, args.v, budget)
        _emit({"u": args.u, "v": args.v, "paths": count}, args, f"{count} disjoint short paths")
    elif args.check == "power":
        edges = sorted(oracles.short_path_power_exact(G, args.k, budget))
        _emit({"k": args.k, "edges": [list(e) for e in edges]}, args, f"{len(edges)} power edges")
    else:
        if args.t is None:
            raise UsageError("--check minor needs --t")
        if args.max_vertices is None:
            budget = oracles.OracleBudget(max_vertices=oracles.MINOR_HARD_CAP)
        ok, model = oracles.has_clique_minor_exact(G, args.t, budget)
        payload = {
            "t": args.t,
            "has_minor": ok,
            "branches": None if model is None else [list(b) for b in model.branches],
        }
        _emit(payload, args, f"K_{args.t} minor: {'yes' if ok else 'no'}")
    return 0


def _cmd_bench(args) -> int:
    plan = ExperimentPlan.from_dict(json.loads(Path(args.plan).read_text()))
    if args.output:
        plan = replace(plan, output=args.output)
    if args.workers:
        plan = replace(plan, workers=args.workers)
    csv_path, json_path, rows = bench(plan)
    payload = {"rows": len(rows), "csv": str(csv_path), "json": str(json_path)}
    _emit(payload, args, f"{len(rows)} rows written to {csv_path} and {json_path}")
    return 0


COMMANDS = {
    "gen": _cmd_gen,
    "power": _cmd_power,
    "minor": _cmd_minor,
    "indep": _cmd_indep,
    "dichotomy": _cmd_dichotomy,
    "oracle": _cmd_oracle,
    "bench": _cmd_bench,
}


def run_cli(argv: list[str] | None = None) -> int:
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_help())
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except SystemExit as exc:
        # --help
        return exc.code if isinstance(exc.code, int) else 0
    except (TrifreeError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()

"""Command-line front end.

Every subcommand builds one report dictionary.  ``--json`` prints it as a
single JSON record with sorted keys; otherwise it is printed as ``key value``
lines.  Exit codes: 0 ok, 1 violation, 2 usage or input error, 3 resource
limit.  ``CHIBOUND_NODE_BUDGET`` caps oracle search nodes.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .bounds import UndefinedBound, binding_bound
from .coloring import ClassViolation
from .decomposition import verify_partition, wagon_partition
from .engine import color_family
from .generators import MODES, GenerationFailed, GenSpec, derive_seed, random_family_member
from .graph import COMPANIONS, GraphError, named_graph
from .io import ParseError, parse_graph, to_dimacs, to_edgelist
from .oracles import CHI_LIMIT, Cancelled, OracleLimitExceeded, chi_exact, omega_exact, validate_coloring
from .recognition import FamilySpec, PatternTooLarge, contains_induced, has_induced_matching

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3

FAMILIES = tuple(COMPANIONS) + ("none",)


class UsageError(Exception):
    pass


def _load(args) -> tuple:
    if args.file == "-":
        raw = sys.stdin.buffer.read()
    else:
        try:
            raw = Path(args.file).read_bytes()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    g = parse_graph(raw.decode("utf-8"), args.format)
    return g, hashlib.sha256(raw).hexdigest()


def _report(args, **fields) -> dict:
    rep = {
        "command": args.argv,
        "input_digest": None,
        "family": None,
        "p": None,
        "omega": None,
        "chi_exact": None,
        "colors_used": None,
        "bound": None,
        "violations": [],
        "seed": None,
    }
    rep.update(fields)
    return rep


def _family(args) -> FamilySpec:
    return FamilySpec(args.family, args.p)


def _bound_or_none(family: str, p: int, omega: int):
    try:
        return binding_bound(family, p, omega)
    except UndefinedBound:
        return None


# subcommands -----------------------------------------------------------------


def cmd_recognize(args) -> dict:
    g, digest = _load(args)
    try:
        pattern = named_graph(args.pattern)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    w = contains_induced(g, pattern)
    return _report(args, input_digest=digest, pattern=args.pattern, found=w is not None,
                   witness=list(w.mapping) if w else None)


def cmd_pk2(args) -> dict:
    g, digest = _load(args)
    w = has_induced_matching(g, args.p)
    return _report(args, input_digest=digest, p=args.p, found=w is not None,
                   witness=[list(e) for e in w.edges] if w else None)


def cmd_decompose(args) -> dict:
    g, digest = _load(args)
    if g.n == 0:
        raise UsageError("decompose needs at least one vertex")
    part = wagon_partition(g)
    return _report(args, input_digest=digest, omega=part.omega, partition=part.as_dict(),
                   violations=verify_partition(g, part))


def cmd_color(args) -> dict:
    g, digest = _load(args)
    fam = _family(args)
    omega = omega_exact(g).value
    rep = _report(args, input_digest=digest, family=fam.companion, p=fam.p, omega=omega,
                  bound=_bound_or_none(fam.companion, fam.p, omega))
    try:
        c = color_family(g, fam, check=args.check)
    except ClassViolation as exc:
        rep["violations"] = [str(exc)]
        rep["witness"] = exc.witness
        return rep
    rep["colors_used"] = c.colors_used
    rep["coloring"] = list(c.assignment)
    rep["violations"] = [f"monochromatic edge {u} {v}" for u, v in validate_coloring(g, c)]
    return rep


def cmd_chi_exact(args) -> dict:
    g, digest = _load(args)
    r = chi_exact(g, limit=args.limit)
    return _report(args, input_digest=digest, chi_exact=r.value, omega=omega_exact(g).value,
                   coloring=list(r.certificate.assignment), nodes_explored=r.nodes_explored)


def cmd_omega(args) -> dict:
    g, digest = _load(args)
    r = omega_exact(g)
    return _report(args, input_digest=digest, omega=r.value, clique=list(r.certificate))


def cmd_bound(args) -> dict:
    return _report(args, family=args.family, p=args.p, omega=args.omega,
                   bound=binding_bound(args.family, args.p, args.omega))


def cmd_gen(args) -> dict:
    spec = GenSpec(args.n, args.prob, _family(args), args.seed, args.max_attempts, args.mode)
    g = random_family_member(spec)
    text = to_dimacs(g) if args.out_format == "dimacs" else to_edgelist(g)
    rep = _report(args, family=args.family, p=args.p, seed=args.seed, n=g.n, edges=g.num_edges,
                  graph_digest=hashlib.sha256(text.encode()).hexdigest())
    if args.out:
        Path(args.out).write_text(text)
    else:
        rep["graph"] = text
    return rep


def _trial(task) -> dict:
    k, seed, n, prob, family, p, mode, oracle_limit = task
    fam = FamilySpec(family, p)
    out = {"trial": k, "seed": seed}
    try:
        g = random_family_member(GenSpec(n, prob, fam, seed, mode=mode))
    except GenerationFailed as exc:
        return {**out, "error": str(exc)}
    omega = omega_exact(g).value
    out.update(n=g.n, omega=omega, bound=_bound_or_none(family, p, omega))
    try:
        c = color_family(g, fam)
    except ClassViolation as exc:
        return {**out, "error": str(exc)}
    out["colors_used"] = c.colors_used
    out["proper"] = not validate_coloring(g, c)
    if g.n <= oracle_limit:
        out["chi_exact"] = chi_exact(g, limit=oracle_limit).value
    return out


def cmd_verify(args) -> dict:
    tasks = [(k, derive_seed(args.seed, k), args.n, args.prob, args.family, args.p, args.mode,
              args.oracle_limit) for k in range(args.trials)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            trials = list(pool.map(_trial, tasks))
    else:
        trials = [_trial(t) for t in tasks]
    trials.sort(key=lambda t: t["trial"])
    violations = []
    for t in trials:
        k = t["trial"]
        if "error" in t:
            violations.append(f"trial {k}: {t['error']}")
            continue
        if not t["proper"]:
            violations.append(f"trial {k}: improper coloring")
        if t["bound"] is None:
            violations.append(f"trial {k}: no bound for omega {t['omega']}")
        elif t["colors_used"] > t["bound"]:
            violations.append(f"trial {k}: {t['colors_used']} colors exceed bound {t['bound']}")
        if t.get("chi_exact") is not None and t["chi_exact"] > t["colors_used"]:
            violations.append(f"trial {k}: chi_exact above colors_used")
    done = [t for t in trials if "error" not in t]
    summary = {
        "trials": len(trials),
        "proper": sum(t["proper"] for t in done),
        "within_bound": sum(t["bound"] is not None and t["colors_used"] <= t["bound"] for t in done),
        "colors_equal_omega": sum(t["colors_used"] == t["omega"] for t in done),
        "colors_equal_chi": sum(t.get("chi_exact") == t["colors_used"] for t in done),
        "max_omega": max((t["omega"] for t in done), default=0),
        "omega_at_least_4": sum(t["omega"] >= 4 for t in done),
        "omega_at_least_4_colors_equal_omega": sum(t["omega"] >= 4 and t["colors_used"] == t["omega"] for t in done),
    }
    rep = _report(args, family=args.family, p=args.p, seed=args.seed, violations=violations,
                  summary=summary)
    if args.per_trial:
        rep["trials"] = trials
    return rep


# argument parsing ------------------------------------------------------------


def _probability(text: str) -> float:
    from fractions import Fraction

    try:
        q = float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a probability: {text}") from None
    if not 0 <= q <= 1:
        raise argparse.ArgumentTypeError(f"probability must lie in [0, 1]: {text}")
    return q


def _p_value(text: str) -> int:
    p = int(text)
    if p < 2:
        raise argparse.ArgumentTypeError("p must be at least 2")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print one JSON record")
    common.add_argument("--format", choices=("dimacs", "edgelist"), help="input format (default: detect)")

    def family_args(sp, default_family=None):
        sp.add_argument("--family", choices=FAMILIES, required=default_family is None, default=default_family)
        sp.add_argument("--p", type=_p_value, default=2)

    parser = argparse.ArgumentParser(prog="chibound", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("recognize", parents=[common], help="find an induced copy of a named graph")
    sp.add_argument("--pattern", required=True)
    sp.add_argument("file")
    sp.set_defaults(run=cmd_recognize)

    sp = sub.add_parser("pk2", parents=[common], help="find an induced matching of size p")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("file")
    sp.set_defaults(run=cmd_pk2)

    sp = sub.add_parser("decompose", parents=[common], help="clique-anchored partition")
    sp.add_argument("file")
    sp.set_defaults(run=cmd_decompose)

    sp = sub.add_parser("color", parents=[common], help="color a {pK2, H}-free graph")
    family_args(sp)
    sp.add_argument("--check", action="store_true", help="verify membership first")
    sp.add_argument("file")
    sp.set_defaults(run=cmd_color)

    sp = sub.add_parser("chi-exact", parents=[common], help="exact chromatic number")
    sp.add_argument("--limit", type=int, default=CHI_LIMIT)
    sp.add_argument("file")
    sp.set_defaults(run=cmd_chi_exact)

    sp = sub.add_parser("omega", parents=[common], help="exact clique number")
    sp.add_argument("file")
    sp.set_defaults(run=cmd_omega)

    sp = sub.add_parser("bound", parents=[common], help="evaluate the binding function")
    family_args(sp)
    sp.add_argument("--omega", type=int, required=True)
    sp.set_defaults(run=cmd_bound)

    sp = sub.add_parser("gen", parents=[common], help="generate a family member")
    family_args(sp, "none")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--prob", type=_probability, default=0.5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--mode", choices=MODES, default="grow")
    sp.add_argument("--max-attempts", type=int, default=100)
    sp.add_argument("--out", help="write the graph here instead of into the report")
    sp.add_argument("--out-format", choices=("dimacs", "edgelist"), default="dimacs")
    sp.set_defaults(run=cmd_gen)

    sp = sub.add_parser("verify", parents=[common], help="generate, color and cross-check trials")
    family_args(sp)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--n", type=int, default=30)
    sp.add_argument("--prob", type=_probability, default=0.5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--mode", choices=MODES, default="grow")
    sp.add_argument("--oracle-limit", type=int, default=CHI_LIMIT)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--per-trial", action="store_true", help="include every trial in the report")
    sp.set_defaults(run=cmd_verify)
    return parser


def _emit(rep: dict, as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps(rep, sort_keys=True) + "\n")
        return
    coloring = rep.pop("coloring", None)
    graph = rep.pop("graph", None)
    if coloring is not None:
        out.write("".join(f"{v} {c}\n" for v, c in enumerate(coloring)))
    if graph is not None:
        out.write(graph)
    for key in sorted(rep):
        if key in ("command", "wall_time") and graph is not None:
            continue
        value = rep[key]
        if value is None:
            continue
        if isinstance(value, (list, dict)):
            value = json.dumps(value, sort_keys=True)
        if graph is not None:
            out.write(f"c {key} {value}\n")  # keep the graph file parseable
        else:
            out.write(f"{key} {value}\n")


def run(argv=None, out=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    args.argv = argv
    start = time.perf_counter()
    try:
        rep = args.run(args)
    except (UsageError, ParseError, GraphError, UndefinedBound, PatternTooLarge, ValueError) as exc:
        print(f"chibound: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OracleLimitExceeded, Cancelled) as exc:
        print(f"chibound: resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except GenerationFailed as exc:
        print(f"chibound: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    rep["wall_time"] = round(time.perf_counter() - start, 6)
    _emit(rep, args.json, out)
    return EXIT_VIOLATION if rep["violations"] else EXIT_OK


def main() -> None:
    sys.exit(run())

"""Command-line entry point: ``python -m priority_advice <command> ...``.

Reports are ``key=value`` lines (``--json`` for a JSON object).  Exit codes:
0 success, 1 verification failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import graphs as G
from .enumeration import exact_mvc_by_enumeration
from .framework import certify_trace, parse_tiebreak, str_to_bits
from .lower_bounds import formulas as F
from .lower_bounds.reduction import (
    GadgetVertexCoverAlgorithm,
    SGKHInstance,
    guesser_tape,
    parse_guesser,
    run_sgkh_reduction,
)
from .lower_bounds.thorny import baseline_library, thorny_fool
from .oracle import BRUTE_FORCE_LIMIT, brute_force_mvc, min_cover_size
from .vc_solver import (
    VertexCoverAlgorithm,
    advice_budget,
    audit_components,
    check_advice_budget,
    replay_with_advice,
    solve_with_oracle,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fmt(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (list, tuple)):
        return ",".join(_fmt(x) for x in v)
    return str(v)


def emit(report: dict, as_json: bool, out=None) -> None:
    out = out or sys.stdout
    if as_json:
        out.write(json.dumps(report, sort_keys=False) + "\n")
    else:
        for k, v in report.items():
            out.write(f"{k}={_fmt(v)}\n")


def threads() -> int:
    try:
        return max(1, int(os.environ.get("PRIORITY_ADVICE_THREADS", "1")))
    except ValueError:
        return 1


def _load_graph(path: str) -> G.Graph:
    try:
        if path == "-":
            return G.parse_graph(sys.stdin.read())
        return G.read_graph(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


# ---------------------------------------------------------------- gen


def cmd_gen(a) -> tuple[dict, int]:
    kind, args = a.kind, a.args

    def arg(i, cast=int):
        try:
            return cast(args[i])
        except (IndexError, ValueError):
            raise UsageError(f"gen {kind}: missing or bad argument {i + 1}") from None

    if kind == "thorny":
        inst = G.gen_thorny(arg(0), a.seed, a.distractors)
        text = G.format_thorny(inst)
        report = {"kind": kind, "k": inst.k, "triples": len(inst.triples),
                  "spine_bits": "".join(map(str, inst.spine_bits))}
    else:
        if kind == "gadget":
            relabel = [int(x) for x in a.relabel.split(",")] if a.relabel else None
            g = G.gen_gadget_graph(arg(0, str), relabel)
        elif kind == "random":
            g = G.gen_random_max3(arg(0), a.density, a.seed)
        elif kind == "near-cubic":
            g = G.gen_near_cubic(arg(0), a.seed)
        elif kind == "online-lb":
            R = frozenset(int(x) for x in a.R.split(",")) if a.R else frozenset()
            g = G.gen_online_lb(G.OnlineLBParams(arg(0), R, a.seed)).graph
        elif kind == "petersen":
            g = G.petersen_graph()
        elif kind == "complete":
            g = G.complete_graph(arg(0))
        elif kind == "cycle":
            g = G.cycle_graph(arg(0))
        elif kind == "path":
            g = G.path_graph(arg(0))
        elif kind == "empty":
            g = G.empty_graph(arg(0))
        else:
            raise UsageError(f"unknown generator {kind!r}")
        text = G.format_graph(g)
        report = {"kind": kind, "n": g.n, "m": g.m}
    if a.output:
        with open(a.output, "w") as fh:
            fh.write(text)
        report["output"] = a.output
        return report, 0
    sys.stdout.write(text)
    return {}, 0


# ---------------------------------------------------------------- solve / advise / replay


def cmd_solve(a) -> tuple[dict, int]:
    g = _load_graph(a.graph)
    tb = parse_tiebreak(a.tiebreak)
    report = {"n": g.n, "m": g.m, "mode": a.mode}
    if a.mode == "oracle":
        res = solve_with_oracle(g, tb)
        report.update(cover_size=res.size, cover=sorted(res.cover), advice_bits=len(res.advice),
                      advice=res.advice_str, budget=advice_budget(g.n))
    elif a.mode == "enumerate":
        rep = exact_mvc_by_enumeration(g, tb)
        report.update(cover_size=rep.best_size, cover=sorted(rep.best_cover),
                      advice="".join(map(str, rep.best_advice)),
                      leaves_explored=rep.leaves_explored, max_depth=rep.max_depth)
    else:
        if g.n > BRUTE_FORCE_LIMIT:
            raise UsageError(f"bruteforce mode is limited to n <= {BRUTE_FORCE_LIMIT}")
        size, cover = brute_force_mvc(g)
        report.update(cover_size=size, cover=sorted(cover))
    return report, 0


def cmd_advise(a) -> tuple[dict, int]:
    g = _load_graph(a.graph)
    res = solve_with_oracle(g, parse_tiebreak(a.tiebreak))
    if a.json:
        return {"advice": res.advice_str, "advice_bits": len(res.advice)}, 0
    sys.stdout.write(res.advice_str + "\n")
    return {}, 0


def cmd_replay(a) -> tuple[dict, int]:
    g = _load_graph(a.graph)
    try:
        with open(a.advice) as fh:
            text = "".join(line for line in fh if not line.startswith("#"))
    except OSError as exc:
        raise UsageError(f"cannot read {a.advice}: {exc.strerror}") from None
    bits = str_to_bits("".join(text.split()))
    res = replay_with_advice(g, bits, parse_tiebreak(a.tiebreak))
    report = {"valid": res.valid, "cover_size": res.size if res.valid else None,
              "cover": sorted(res.cover), "advice_bits": len(res.trace.advice)}
    if not res.valid:
        report["reason"] = res.reason
    return report, 0 if res.valid else 1


# ---------------------------------------------------------------- verify


def random_instance(n: int, seed: int, index: int) -> G.Graph:
    rng = random.Random(f"{seed}/{index}")
    return G.gen_random_max3(n, rng.uniform(0.3, 1.0), rng.randrange(2**31))


def verify_graph(g: G.Graph, tiebreak: str = "min-id") -> dict:
    """All checks on one instance; returns a record with a ``failures`` list."""
    tb = parse_tiebreak(tiebreak)
    res = solve_with_oracle(g, tb)
    failures = []
    opt = brute_force_mvc(g)[0] if g.n <= 20 else min_cover_size(g)
    if res.size != opt:
        failures.append(f"cover size {res.size} != optimum {opt}")
    if not g.is_cover(res.cover):
        failures.append("not a vertex cover")
    if not check_advice_budget(g.n, len(res.advice)):
        failures.append(f"{len(res.advice)} advice bits > {advice_budget(g.n)}")
    failures += audit_components(res.trace, g).violations()
    failures += certify_trace(VertexCoverAlgorithm(), g.items(), res.trace, tiebreak=tb)
    return {"n": g.n, "advice_bits": len(res.advice), "cover_size": res.size, "failures": failures}


def _verify_random(args):
    n, seed, index, tiebreak = args
    rec = verify_graph(random_instance(n, seed, index), tiebreak)
    rec["index"] = index
    return rec


def cmd_verify(a) -> tuple[dict, int]:
    records = []
    if a.random:
        try:
            n, count, seed = (int(x) for x in a.random)
        except ValueError:
            raise UsageError("--random expects integers: n count seed") from None
        jobs = [(n, seed, i, a.tiebreak) for i in range(count)]
        if threads() > 1 and count > 1:
            with ProcessPoolExecutor(threads()) as ex:
                records = list(ex.map(_verify_random, jobs, chunksize=16))
        else:
            records = [_verify_random(j) for j in jobs]
        labels = [f"random#{r['index']}" for r in records]
    else:
        if not a.graphs:
            raise UsageError("verify needs graph files or --random n count seed")
        for path in a.graphs:
            records.append(verify_graph(_load_graph(path), a.tiebreak))
        labels = list(a.graphs)
    failed = sorted(f"{lab}: {msg}" for lab, r in zip(labels, records) for msg in r["failures"])
    n_fail = sum(1 for r in records if r["failures"])
    report = {"instances": len(records), "pass": len(records) - n_fail, "fail": n_fail,
              "max_advice_bits": max((r["advice_bits"] for r in records), default=0)}
    if len(records) == 1:
        report["advice_bits"] = records[0]["advice_bits"]
        report["cover_size"] = records[0]["cover_size"]
    if failed:
        report["failures"] = failed
    return report, 1 if n_fail else 0


# ---------------------------------------------------------------- bounds


def cmd_bounds(a) -> tuple[dict, int]:
    try:
        eps = Fraction(a.eps)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad eps {a.eps!r}") from None
    if not 0 < eps <= Fraction(1, 2):
        raise UsageError("eps must lie in (0, 1/2]")
    if a.spec:
        oa, orr, ba, br, s, kind = a.spec
        try:
            params = F.GadgetParams(int(oa), int(orr), int(ba), int(br), int(s), kind)
            rows = {"custom": params}
            F.ratio_bound(params, eps)
        except (ValueError, F.SpecError) as exc:
            raise UsageError(str(exc)) from None
    else:
        rows = F.TABLE1
    lines = [F.bound_report_line(name, p, eps, a.n) for name, p in rows.items()]
    if a.json:
        out = []
        for name, p in rows.items():
            out.append({"problem": F.slug(name), "s": p.s, "eps": float(eps),
                        "advice_threshold": F.advice_threshold(eps, a.n, p.s),
                        "ratio": float(F.ratio_bound(p, eps))})
        return {"rows": out}, 0
    sys.stdout.write("\n".join(lines) + "\n")
    return {}, 0


# ---------------------------------------------------------------- adversary


def cmd_adversary(a) -> tuple[dict, int]:
    if a.thorny:
        names = None if a.thorny == "baseline8" else a.thorny.split(",")
        try:
            algs = baseline_library(names)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        res = thorny_fool(algs)
        report = {"algorithms": len(algs), "fooled": f"{res.fooled}/{len(algs)}",
                  "labels_used": res.labels_used, "triples": len(res.instance.triples),
                  "verdicts": [f"{alg.name}:{'fail' if v else 'pass'}" for alg, v in zip(algs, res.verdicts)]}
        if a.output:
            with open(a.output, "w") as fh:
                fh.write(G.format_thorny(res.instance))
            report["output"] = a.output
        return report, 0 if res.fooled == len(algs) else 1
    guesser, n = a.reduce
    try:
        n = int(n)
        x = SGKHInstance.random(n, a.seed)
        mistakes = parse_guesser(guesser, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    tr = run_sgkh_reduction(GadgetVertexCoverAlgorithm(), x, guesser_tape(x, mistakes),
                            parse_tiebreak(a.tiebreak))
    return {"n": n, "instance_length": tr.length, "alg_value": tr.alg_value, "opt_value": tr.opt_value,
            "mistakes": tr.mistakes, "advice_bits": tr.bits_read, "ratio": tr.ratio,
            "valid_cover": tr.valid_cover}, 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="priority-advice", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, tiebreak=True):
        sp.add_argument("--json", action="store_true")
        if tiebreak:
            sp.add_argument("--tiebreak", default="min-id", help="min-id | max-id | random:<seed>")

    sp = sub.add_parser("gen", help="generate an instance")
    sp.add_argument("kind", help="gadget|random|near-cubic|online-lb|thorny|petersen|complete|cycle|path|empty")
    sp.add_argument("args", nargs="*")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--density", type=float, default=0.8)
    sp.add_argument("--relabel", help="comma-separated permutation of 0..6")
    sp.add_argument("--R", help="comma-separated members of R (online-lb)")
    sp.add_argument("--distractors", type=int, default=0)
    sp.add_argument("-o", "--output")
    common(sp, tiebreak=False)

    sp = sub.add_parser("solve", help="minimum vertex cover of a graph file")
    sp.add_argument("graph")
    sp.add_argument("--mode", choices=["oracle", "enumerate", "bruteforce"], default="oracle")
    common(sp)

    sp = sub.add_parser("verify", help="optimality, budget and audit checks")
    sp.add_argument("graphs", nargs="*")
    sp.add_argument("--random", nargs=3, metavar=("N", "COUNT", "SEED"))
    common(sp)

    sp = sub.add_parser("bounds", help="advice thresholds and ratio lower bounds")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--table1", action="store_true")
    g.add_argument("--spec", nargs=6, metavar=("OPT_A", "OPT_R", "BAD_A", "BAD_R", "S", "KIND"))
    sp.add_argument("--eps", required=True)
    sp.add_argument("--n", type=int, default=1, help="number of gadget pairs for the threshold")
    common(sp, tiebreak=False)

    sp = sub.add_parser("adversary", help="thorny-path adversary or guessing reduction")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--thorny", metavar="STRATEGIES", help="baseline8 or comma-separated names")
    g.add_argument("--reduce", nargs=2, metavar=("GUESSER", "N"))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("-o", "--output")
    common(sp)

    sp = sub.add_parser("advise", help="print the oracle advice string")
    sp.add_argument("graph")
    common(sp)

    sp = sub.add_parser("replay", help="run the solver on a fixed advice string")
    sp.add_argument("graph")
    sp.add_argument("advice", help="file holding a 0/1 string")
    common(sp)
    return p


COMMANDS = {
    "gen": cmd_gen, "solve": cmd_solve, "verify": cmd_verify, "bounds": cmd_bounds,
    "adversary": cmd_adversary, "advise": cmd_advise, "replay": cmd_replay,
}


def main(argv=None) -> int:
    try:
        a = build_parser().parse_args(argv)
        report, code = COMMANDS[a.command](a)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (G.GraphError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    if report:
        emit(report, getattr(a, "json", False))
    return code


if __name__ == "__main__":
    sys.exit(main())

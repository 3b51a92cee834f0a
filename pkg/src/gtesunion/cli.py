"""Command line front end: decide, corpus, fuzz."""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Dict, List, Optional

from .decide import Verdict, decide_union
from .fuzz import run_fuzz
from .oracle import CapacityError, counterexample_search
from .problem import CORPUS, EXPECTED, Problem, ProblemError, load_example, read_problem

EXIT_YES, EXIT_NO, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


def build_report(p: Problem, v: Verdict, oracle: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    c = v.aux
    assert c is not None
    tE, tF, tU = c.total()
    return {
        "verdict": v.union_is_congruence,
        "main_case": v.case.tag,
        "which_total": v.case.which_total,
        "n": c.n,
        "classes": {"E": len(c.C_E), "F": len(c.C_F), "union": len(c.C_U)},
        "total": {"E": tE, "F": tF, "union": tU},
        "diagnostics": v.diagnostics,
        "witness": "H = E u F" if v.union_is_congruence else None,
        "oracle": oracle,
        "millis": round(v.millis, 3),
    }


def oracle_check(p: Problem, verdict: bool, max_height: int) -> Dict[str, Any]:
    cex = counterexample_search(p.sig, p.E, p.F, max_height)
    pair = None if cex is None else [str(cex[0]), str(cex[1])]
    return {"max_height": max_height, "counterexample": pair,
            "agrees": not (verdict and cex is not None)}


def format_text(name: str, r: Dict[str, Any], explain: bool) -> str:
    lines = [f"{name}: {'yes' if r['verdict'] else 'no'} ({r['main_case']})"]
    if r["verdict"]:
        lines.append("  union of the congruences is the congruence of E u F")
    if explain:
        lines.append(f"  n={r['n']} classes E={r['classes']['E']} F={r['classes']['F']} "
                     f"union={r['classes']['union']}")
        lines.append(f"  total E={r['total']['E']} F={r['total']['F']} union={r['total']['union']}")
        for k, val in r["diagnostics"].items():
            lines.append(f"  {k}: {val}")
        lines.append(f"  {r['millis']} ms")
    o = r.get("oracle")
    if o is not None:
        if o["counterexample"]:
            s, t = o["counterexample"]
            lines.append(f"  oracle counterexample (height <= {o['max_height']}): {s} ~ {t}")
        else:
            lines.append(f"  oracle: no counterexample up to height {o['max_height']}")
        if not o["agrees"]:
            lines.append("  ORACLE DISAGREES")
    return "\n".join(lines)


def cmd_decide(args: argparse.Namespace) -> int:
    try:
        p = read_problem(args.path)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ProblemError as exc:
        print(f"error: {args.path}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if p.duplicates:
        print(f"warning: {p.duplicates} duplicate equation(s) dropped", file=sys.stderr)
    try:
        v = decide_union(p.sig, p.E, p.F)
        oracle = oracle_check(p, v.union_is_congruence, args.max_height) if args.oracle_check else None
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # pragma: no cover - reported as exit 3
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL
    r = build_report(p, v, oracle)
    if args.json:
        print(json.dumps(r, sort_keys=True))
    else:
        print(format_text(args.path, r, args.explain))
    if args.dump_aux:
        assert v.aux is not None
        print(v.aux.graph.dump())
    return EXIT_YES if v.union_is_congruence else EXIT_NO


def cmd_corpus(args: argparse.Namespace) -> int:
    match = 0
    disagreements = 0
    t0 = time.perf_counter()
    rows: List[str] = []
    for name in CORPUS:
        try:
            p = load_example(name)
        except ProblemError as exc:
            print(f"error: {name}: {exc}", file=sys.stderr)
            return EXIT_INPUT
        v = decide_union(p.sig, p.E, p.F)
        ok = v.union_is_congruence == EXPECTED[name]
        match += ok
        note = ""
        if args.oracle_check:
            try:
                o = oracle_check(p, v.union_is_congruence, args.max_height)
            except CapacityError:
                # binary signatures outgrow the cap at height 3; take what fits
                h = args.max_height
                while True:
                    h -= 1
                    try:
                        o = oracle_check(p, v.union_is_congruence, h)
                        break
                    except CapacityError:
                        continue
            disagreements += not o["agrees"]
            note = f"  oracle h<={o['max_height']}: {o['counterexample'] or 'none'}"
        rows.append(f"{name}: {'yes' if v.union_is_congruence else 'no'} "
                    f"({v.case.tag}) {'ok' if ok else 'MISMATCH'}{note}")
    print("\n".join(rows))
    print(f"{match}/{len(CORPUS)} match ({(time.perf_counter() - t0) * 1000:.0f} ms)")
    if args.oracle_check:
        print(f"{disagreements} oracle disagreements")
    return 0 if match == len(CORPUS) and disagreements == 0 else EXIT_NO


def cmd_fuzz(args: argparse.Namespace) -> int:
    outcomes = run_fuzz(args.seed, args.count)
    bad = [o for o in outcomes if o.failures]
    for o in bad:
        print(f"seed {args.seed} instance {o.index}: {'; '.join(o.failures)}")
    print(f"{len(outcomes) - len(bad)} ok")
    return 0 if not bad else EXIT_NO


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gtesunion", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    d = sub.add_parser("decide", help="decide one problem file")
    d.add_argument("path")
    d.add_argument("--json", action="store_true")
    d.add_argument("--explain", action="store_true")
    d.add_argument("--oracle-check", action="store_true")
    d.add_argument("--max-height", type=int, default=3)
    d.add_argument("--dump-aux", action="store_true")
    d.set_defaults(func=cmd_decide)

    c = sub.add_parser("corpus", help="run the eight bundled examples")
    c.add_argument("--oracle-check", action="store_true")
    c.add_argument("--max-height", type=int, default=3)
    c.set_defaults(func=cmd_corpus)

    f = sub.add_parser("fuzz", help="random instances checked against the oracle")
    f.add_argument("--seed", type=int, default=1)
    f.add_argument("--count", type=int, default=200)
    f.set_defaults(func=cmd_fuzz)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

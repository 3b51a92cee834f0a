"""One test per acceptance criterion; each prints a single PASS/FAIL line."""
import random
import time

import numpy as np

from conftest import ACCEPTANCE_LINES
from gtesunion.auxgraph import cad, positive_step_reachable
from gtesunion.closure import congruence_closure
from gtesunion.completion import fgc, is_reduced, word_problem
from gtesunion.decide import BOTH_TOTAL, case2_check, decide_union, npdfs
from gtesunion.families import FAMILIES, of_size
from gtesunion.fuzz import FuzzParams, feasible_height, random_problem, random_term
from gtesunion.gtes import Gtes, build_dag, st, union
from gtesunion.oracle import context_reachability, counterexample_search, naive_closure, oracle_word
from gtesunion.problem import CORPUS, EXPECTED, EXPECTED_CASE, load_example
from gtesunion.terms import height
from helpers import parse_rules, rules_of, same_up_to_renaming
from test_completion import GOLDEN

UNARY_LIMIT, OTHER_LIMIT = 2.4, 1.5
SIZES = (1000, 2000, 4000, 8000)


def verdict(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def test_criterion_1_corpus_verdicts():
    t0 = time.perf_counter()
    got = {}
    for name in CORPUS:
        p = load_example(name)
        got[name] = decide_union(p.sig, p.E, p.F).union_is_congruence
    dt = time.perf_counter() - t0
    wrong = [n for n in CORPUS if got[n] != EXPECTED[n]]
    verdict(1, not wrong and dt < 1.0, f"{8 - len(wrong)}/8 verdicts match in {dt * 1000:.0f} ms")


def test_criterion_2_main_cases():
    wrong = []
    for name in CORPUS:
        p = load_example(name)
        tag = decide_union(p.sig, p.E, p.F).case.tag
        if tag != EXPECTED_CASE[name]:
            wrong.append(f"{name}={tag}")
    verdict(2, not wrong, "all eight main cases match" if not wrong else ", ".join(wrong))


def test_criterion_3_completions():
    bad = []
    for name, want in GOLDEN.items():
        p = load_example(name)
        got = {"EF": fgc(p.sig, p.E, p.F), "FE": fgc(p.sig, p.F, p.E),
               "U": fgc(p.sig, union(p.E, p.F), Gtes())}
        for which, rules in want.items():
            if not same_up_to_renaming(rules_of(got[which].rules), parse_rules(rules)):
                bad.append(f"{name}/{which}")
    rng = random.Random(3)
    unreduced = 0
    for _ in range(200):
        p = random_problem(rng)
        c = cad(p.sig, p.E, p.F)
        unreduced += sum(not is_reduced(R) for R in (c.R_E, c.R_F, c.R_U))
    verdict(3, not bad and unreduced == 0,
            f"6 golden rule sets, {len(bad)} mismatched; {unreduced} unreduced GTRSs in 200 instances")


def test_criterion_4_closure_vs_naive():
    t0 = time.perf_counter()
    problems = [load_example(n) for n in CORPUS]
    rng = random.Random(4)
    params = FuzzParams(max_equations=6)
    while len(problems) < len(CORPUS) + 200:
        p = random_problem(rng, params)
        if len(build_dag(p.E, p.F)[0]) <= 64:
            problems.append(p)
    disagree = 0
    for p in problems:
        dag, te, tf = build_dag(p.E, p.F)
        for tau in (te, tf, te + tf):
            disagree += congruence_closure(dag, tau) != naive_closure(dag, tau)
    dt = time.perf_counter() - t0
    verdict(4, disagree == 0 and dt < 30,
            f"{len(problems)} instances x 3 closures, {disagree} disagreements, {dt:.1f} s")


def test_criterion_5_word_problem():
    rng = random.Random(5)
    params = FuzzParams(max_height=3)
    disagree = related = 0
    for _ in range(500):
        p = random_problem(rng, params)
        e = p.E
        pool = sorted(st(e), key=str)

        def pick():
            # terms of E make related pairs likely
            if pool and rng.random() < 0.5:
                return rng.choice(pool)
            return random_term(rng, p.sig, rng.randint(0, 3))

        s, t = pick(), pick()
        fast = word_problem(p.sig, e, Gtes(), s, t)
        related += fast
        disagree += fast != oracle_word(e, s, t)
    verdict(5, disagree == 0, f"500 triples ({related} related), {disagree} disagreements")


def test_criterion_6_reachability():
    checked = mismatched = 0
    loops = []
    for name in CORPUS:
        p = load_example(name)
        c = cad(p.sig, p.E, p.F)
        if len(c.C_U) > 8:
            continue
        g = c.graph
        for a in g.vertices:
            reach = positive_step_reachable(g, a)
            if a in reach:
                loops.append(f"{name}:{g.names[a]}")
            for b in g.vertices:
                checked += 1
                mismatched += (b in reach) != context_reachability(c.R_U, c.C_U, a, b)
    ok = mismatched == 0 and "ex2:#" in loops
    verdict(6, ok, f"{checked} class pairs, {mismatched} mismatches, cycles at {', '.join(loops)}")


# (example, union class by representative) -> equal_E, equal_F, keeps_E, keeps_F
ATTRIBUTES = {
    "ex1": {"#": (True, True, True, True), "$": (True, True, True, True),
            "f(#)": (True, False, True, True), "f($)": (False, True, True, True)},
    "ex2": {"#": (False, False, False, False)},
    "ex5": {"#": (False, False, True, False)},
    "ex6": {"#": (False, True, None, True), "$": (True, False, None, False)},
}


def test_criterion_7_attributes():
    wrong = []
    for name, want in ATTRIBUTES.items():
        p = load_example(name)
        g = cad(p.sig, p.E, p.F).graph
        got = {g.names[a]: (g.equal_E[a], g.equal_F[a], g.keeps_E[a], g.keeps_F[a])
               for a in g.vertices}
        if set(got) != set(want):
            wrong.append(f"{name}: classes {sorted(got)}")
            continue
        for cls, flags in want.items():
            for label, w, x in zip(("equal_E", "equal_F", "keeps_E", "keeps_F"), flags, got[cls]):
                if w is not None and w != x:
                    wrong.append(f"{name}[{cls}].{label}={x}, listed {w}")
    verdict(7, not wrong, "all listed flags match" if not wrong else "; ".join(wrong))


def test_criterion_8_fuzz():
    rng = random.Random(8)
    params = FuzzParams()
    bad = []
    for i in range(200):
        p = random_problem(rng, params)
        v = decide_union(p.sig, p.E, p.F)
        if v.union_is_congruence != decide_union(p.sig, p.F, p.E).union_is_congruence:
            bad.append(f"{i}: asymmetric")
        h = feasible_height(p.sig, 4)
        cex = counterexample_search(p.sig, p.E, p.F, h)
        if v.union_is_congruence and cex is not None:
            bad.append(f"{i}: yes but {cex[0]} ~ {cex[1]} at height <= {h}")
        if cex is not None and max(map(height, cex)) <= 3 and v.union_is_congruence:
            bad.append(f"{i}: counterexample of height <= 3 with verdict yes")
        if p.sig.is_unary() and v.case.tag == BOTH_TOTAL:
            if npdfs(v.aux.graph) != case2_check(v.aux.inc):
                bad.append(f"{i}: npdfs and case2 disagree")
    verdict(8, not bad, f"200 instances, {len(bad)} violations" + (": " + "; ".join(bad[:3]) if bad else ""))


def _exponent(family):
    times = []
    for n in SIZES:
        p = of_size(family, n)
        best = float("inf")
        for _ in range(3):
            t0 = time.perf_counter()
            decide_union(p.sig, p.E, p.F)
            best = min(best, time.perf_counter() - t0)
        times.append(best)
    return float(np.polyfit(np.log(SIZES), np.log(times), 1)[0]), times


def test_criterion_9_scaling():
    parts, ok = [], True
    for tag, family in sorted(FAMILIES.items()):
        k, _ = _exponent(family)
        limit = UNARY_LIMIT if tag == "Unary" else OTHER_LIMIT
        ok &= k <= limit
        parts.append(f"{tag} {k:.2f} (<= {limit})")
    verdict(9, ok, "fitted exponents " + ", ".join(parts))
